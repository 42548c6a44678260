"""Candidate-side adapter: serve any Game object over the wire protocol
on stdin/stdout, so an implementation needs no protocol code of its own.

    python -m gridgames.harness.shim <game_id>

serves a registry game; tests use `serve(game, infile, outfile)` with
custom game objects (mutants, stubs).
"""

from __future__ import annotations

import sys
from typing import IO

from ..game import Game
from ..notation import MoveParseError, parse_move


def serve(game: Game, infile: IO[str], outfile: IO[str]) -> None:
    def send(line: str) -> None:
        outfile.write(line + "\n")
        outfile.flush()

    def send_snapshot(state) -> None:
        board = state.board
        send(f"BOARD {board.rows} {board.cols}")
        for row in board.layout().split("\n"):
            send(row)
        send(f"STATE {state.round} {state.current_player}")
        if game.game_finished(state):
            winner = game.get_winner(state)
            send(f"END {winner if winner is not None else 'none'}")
        else:
            send("CONTINUE")

    hello = infile.readline()
    if not hello or not hello.startswith("HELLO"):
        return
    state = game.initial_state()
    send("READY")
    send_snapshot(state)
    for line in infile:
        line = line.rstrip("\n")
        if not line.startswith("MOVE "):
            continue
        fields = line.split(" ", 2)
        if len(fields) != 3:
            send("INVALID")
            continue
        try:
            player = int(fields[1])
            move = parse_move(fields[2])
        except (ValueError, MoveParseError):
            send("INVALID")
            continue
        if not game.validate_move(state, move, player):
            send("INVALID")
            continue
        state = game.apply_move(state, move)
        send("VALID")
        send_snapshot(state)


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    if len(args) != 1:
        print("usage: python -m gridgames.harness.shim <game_id>", file=sys.stderr)
        return 2
    from ..games import create_game

    serve(create_game(args[0]), sys.stdin, sys.stdout)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
