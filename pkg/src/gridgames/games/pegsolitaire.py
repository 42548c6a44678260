"""Peg Solitaire: the English 33-hole cross on a 7x7 grid with void
corners. A move jumps a peg orthogonally over an adjacent peg onto the
empty cell beyond; the jumped peg is removed. Single player. The game
ends when no jump remains; it is won (player 0) iff exactly one peg is
left, anywhere.
"""

from __future__ import annotations

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Slide
from .common import ORTHOGONAL, add

PEG = "A"

CROSS_LAYOUT = "\n".join(
    [
        "..AAA..",
        "..AAA..",
        "AAAAAAA",
        "AAA_AAA",
        "AAAAAAA",
        "..AAA..",
        "..AAA..",
    ]
)


class PegSolitaire(Game):
    game_id = "pegsolitaire"
    rows = 7
    cols = 7
    player_count = 1
    player_symbols = ((PEG,),)

    def initial_state(self) -> GameState:
        return GameState(Board.from_layout(7, 7, CROSS_LAYOUT), 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Slide) or len(move.waypoints) != 2 or move.promotion:
            return False
        frm, to = move.waypoints
        board = state.board
        if not board.in_bounds(frm) or not board.in_bounds(to):
            return False
        dr, dc = to[0] - frm[0], to[1] - frm[1]
        if (abs(dr), abs(dc)) not in ((2, 0), (0, 2)):
            return False
        over = (frm[0] + dr // 2, frm[1] + dc // 2)
        return (
            board.get(frm) == PEG
            and board.get(over) == PEG
            and board.get(to) == EMPTY
        )

    def legal_moves(self, state) -> list[Move]:
        board = state.board
        moves = []
        for frm in board.coords():
            if board.get(frm) != PEG:
                continue
            for d in ORTHOGONAL:
                over = add(frm, d)
                to = add(over, d)
                if (
                    board.in_bounds(to)
                    and board.get(over) == PEG
                    and board.get(to) == EMPTY
                ):
                    moves.append(Slide((frm, to)))
        return moves

    def next_player(self, state) -> int:
        return 0

    def apply_move(self, state, move) -> GameState:
        frm, to = move.waypoints
        over = ((frm[0] + to[0]) // 2, (frm[1] + to[1]) // 2)
        board = state.board.copy()
        board.move_piece(frm, to)
        board.remove(over)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        return not self.legal_moves(state)

    def get_winner(self, state) -> int | None:
        if state.board.count(PEG) == 1:
            return 0
        return None
