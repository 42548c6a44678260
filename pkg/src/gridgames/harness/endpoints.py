"""Candidate endpoints: game implementations under test.

A candidate is either in-process (a Game object) or external (a
spawned command speaking a line protocol on stdin/stdout). Both present
the same surface: start() yields the initial snapshot, send_move()
plays one move and yields (accepted, snapshot).

Wire protocol, line-based, engine to candidate and back:

    engine:    HELLO <game_id>
    candidate: READY
    candidate: <snapshot block>            (initial position)
    engine:    MOVE <player> <move text>
    candidate: INVALID
        ... or ...
    candidate: VALID
    candidate: <snapshot block>

    snapshot block:
        BOARD <rows> <cols>
        <rows layout lines>
        STATE <round> <current_player>
        CONTINUE            (or END <winner|none>)

Failures are raised as CandidateFailure with a report category: a dead
process, timeout, or closed stream is `crash`; a live candidate that
answers outside the protocol (or, in-process, breaks the game contract)
is `api`.
"""

from __future__ import annotations

import os
import selectors
import subprocess
from dataclasses import dataclass

from ..board import Board, BoardError
from ..game import Game
from ..notation import MoveParseError, parse_move

HANDSHAKE_TIMEOUT = 10.0


class CandidateFailure(Exception):
    def __init__(self, category: str, detail: str):
        super().__init__(detail)
        self.category = category
        self.detail = detail


@dataclass
class Snapshot:
    board: Board
    round: int
    current_player: int
    terminal: bool
    winner: int | None


@dataclass(frozen=True)
class InProcess:
    """Candidate backed by a Game object in this interpreter."""

    game: Game

    def connect(self) -> "InProcessSession":
        return InProcessSession(self.game)


@dataclass(frozen=True)
class External:
    """Candidate backed by a command line speaking the wire protocol."""

    argv: tuple[str, ...]
    game_id: str
    timeout: float = HANDSHAKE_TIMEOUT

    def connect(self) -> "ExternalSession":
        return ExternalSession(self.argv, self.game_id, self.timeout)


CandidateEndpoint = InProcess | External


class InProcessSession:
    def __init__(self, game: Game):
        self.game = game
        self.state = None

    def start(self) -> Snapshot:
        self.state = self._guard(self.game.initial_state)
        return self._snapshot()

    def send_move(self, player: int, text: str) -> tuple[bool, Snapshot]:
        try:
            move = parse_move(text)
        except MoveParseError:
            return False, self._snapshot()
        accepted = self._guard(self.game.validate_move, self.state, move, player)
        if not isinstance(accepted, bool):
            raise CandidateFailure("api", f"validate_move returned {accepted!r}")
        if accepted:
            self.state = self._guard(self.game.apply_move, self.state, move)
        return accepted, self._snapshot()

    def close(self) -> None:
        pass

    def _snapshot(self) -> Snapshot:
        state = self.state
        terminal = self._guard(self.game.game_finished, state)
        winner = self._guard(self.game.get_winner, state) if terminal else None
        return Snapshot(
            state.board.copy(), state.round, state.current_player, terminal, winner
        )

    def _guard(self, fn, *args):
        try:
            return fn(*args)
        except (NotImplementedError, AttributeError, TypeError) as exc:
            raise CandidateFailure("api", f"{fn.__name__}: {exc}") from exc
        except Exception as exc:
            raise CandidateFailure("crash", f"{fn.__name__}: {exc}") from exc


class ExternalSession:
    def __init__(self, argv, game_id: str, timeout: float):
        self.game_id = game_id
        self.timeout = timeout
        try:
            self.proc = subprocess.Popen(
                list(argv),
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
            )
        except OSError as exc:
            raise CandidateFailure("crash", f"cannot spawn candidate: {exc}") from exc
        self._buffer = b""
        self._selector = selectors.DefaultSelector()
        self._selector.register(self.proc.stdout, selectors.EVENT_READ)

    def start(self) -> Snapshot:
        self._send(f"HELLO {self.game_id}")
        line = self._read_line()
        if line != "READY":
            raise CandidateFailure("api", f"expected READY, got {line!r}")
        return self._read_snapshot()

    def send_move(self, player: int, text: str) -> tuple[bool, Snapshot | None]:
        self._send(f"MOVE {player} {text}")
        line = self._read_line()
        if line == "INVALID":
            return False, None
        if line == "VALID":
            return True, self._read_snapshot()
        raise CandidateFailure("api", f"expected VALID/INVALID, got {line!r}")

    def close(self) -> None:
        try:
            self.proc.stdin.close()
        except OSError:
            pass
        try:
            self.proc.wait(timeout=2)
        except subprocess.TimeoutExpired:
            self.proc.kill()
            self.proc.wait()
        self._selector.close()

    def _send(self, line: str) -> None:
        try:
            self.proc.stdin.write((line + "\n").encode("utf-8"))
            self.proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise CandidateFailure("crash", f"candidate pipe closed: {exc}") from exc

    def _read_line(self) -> str:
        while b"\n" not in self._buffer:
            if not self._selector.select(self.timeout):
                raise CandidateFailure("crash", "candidate timed out")
            chunk = os.read(self.proc.stdout.fileno(), 65536)
            if not chunk:
                raise CandidateFailure("crash", "candidate closed its output")
            self._buffer += chunk
        line, self._buffer = self._buffer.split(b"\n", 1)
        return line.decode("utf-8", errors="replace").rstrip("\r")

    def _read_snapshot(self) -> Snapshot:
        header = self._read_line()
        fields = header.split()
        if len(fields) != 3 or fields[0] != "BOARD":
            raise CandidateFailure("api", f"expected BOARD header, got {header!r}")
        try:
            rows, cols = int(fields[1]), int(fields[2])
        except ValueError:
            raise CandidateFailure("api", f"bad BOARD dimensions: {header!r}") from None
        lines = [self._read_line() for _ in range(rows)]
        try:
            board = Board.from_layout(rows, cols, "\n".join(lines))
        except BoardError as exc:
            raise CandidateFailure("api", f"bad layout: {exc}") from exc
        state_line = self._read_line()
        fields = state_line.split()
        if len(fields) != 3 or fields[0] != "STATE":
            raise CandidateFailure("api", f"expected STATE, got {state_line!r}")
        try:
            round_, player = int(fields[1]), int(fields[2])
        except ValueError:
            raise CandidateFailure("api", f"bad STATE fields: {state_line!r}") from None
        tail = self._read_line()
        if tail == "CONTINUE":
            terminal, winner = False, None
        elif tail.startswith("END"):
            fields = tail.split()
            if len(fields) != 2:
                raise CandidateFailure("api", f"bad END line: {tail!r}")
            terminal = True
            winner = None if fields[1] == "none" else _int_or_api(fields[1], tail)
        else:
            raise CandidateFailure("api", f"expected CONTINUE/END, got {tail!r}")
        return Snapshot(board, round_, player, terminal, winner)


def _int_or_api(token: str, context: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CandidateFailure("api", f"bad winner in {context!r}") from None


def connect(endpoint: CandidateEndpoint):
    return endpoint.connect()
