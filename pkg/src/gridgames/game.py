"""The game contract: state container, rule hooks, and move application.

A game is a stateless rules object. All position data lives in GameState
(or a game-specific frozen subclass carrying hands, phase flags, castling
rights and the like). Four hooks carry the rules proper and are pure:

    validate_move(state, move, player) -> bool
    game_finished(state) -> bool
    get_winner(state) -> player id or None (None = draw / not decided)
    next_player(state) -> player id

plus enumeration and construction:

    legal_moves(state) -> list of moves, exactly the moves validate_move
                          accepts for state.current_player
    initial_state() -> GameState

Move application is split in two: `apply_move` is the unchecked kernel a
game overrides to add side effects (captures, promotions, walls, mill
removal); `perform_move` validates first and then applies, raising
IllegalMoveError on a move that validate_move rejects. Engine code that
has already validated (the loop, agents, perft) calls apply_move
directly.

Every applied move advances `round` by exactly one and sets
`current_player` to next_player(previous state); the `advance` helper
centralizes that bookkeeping.
"""

from __future__ import annotations

import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from typing import IO, Sequence

from .board import Board
from .moves import Move, Pass, Place, Slide
from .notation import MoveParseError, format_board, parse_move


@dataclass(frozen=True)
class GameState:
    board: Board
    round: int
    current_player: int


class IllegalMoveError(RuntimeError):
    """A move was applied without passing validation."""


class Game(ABC):
    """Base class for game rule objects.

    Class attributes every game defines:

    * game_id        — stable lowercase identifier
    * rows, cols     — board dimensions
    * player_count   — number of players (>= 1)
    * player_symbols — per-player tuple of piece symbols (ownership)
    * neutral_symbols — symbols that appear on the board but belong to
      nobody (walls, arrows)
    * max_slide_len  — upper bound on the waypoint count of any slide the
      game can produce; bounds grammar enumeration in the harness
    * promotion_symbols — symbols usable in a ``=X`` promotion token
    """

    game_id: str = ""
    rows: int = 0
    cols: int = 0
    player_count: int = 2
    player_symbols: tuple[tuple[str, ...], ...] = ()
    neutral_symbols: tuple[str, ...] = ()
    max_slide_len: int = 2
    promotion_symbols: tuple[str, ...] = ()

    # -- mandatory rule hooks (pure) ------------------------------------

    @abstractmethod
    def validate_move(self, state: GameState, move: Move, player: int) -> bool:
        """Whether `player` may make `move` in `state`.

        Total over in-grammar moves: returns False (never raises) for
        out-of-range coordinates, wrong turn, or any rule violation.
        """

    @abstractmethod
    def game_finished(self, state: GameState) -> bool:
        """Whether `state` is terminal."""

    @abstractmethod
    def get_winner(self, state: GameState) -> int | None:
        """Winning player of a finished game, or None for a draw.

        Only meaningful once game_finished(state) is true.
        """

    @abstractmethod
    def next_player(self, state: GameState) -> int:
        """Player to move after the current one."""

    # -- construction and enumeration -----------------------------------

    @abstractmethod
    def initial_state(self) -> GameState:
        """Fresh starting position."""

    @abstractmethod
    def legal_moves(self, state: GameState) -> list[Move]:
        """All moves validate_move accepts for state.current_player.

        Deterministic order. Like validate_move, only specified for
        non-terminal states; drivers gate on game_finished first.
        """

    # -- move application ------------------------------------------------

    def apply_move(self, state: GameState, move: Move) -> GameState:
        """Unchecked transition kernel; caller must have validated.

        The default handles side-effect-free placements, two-waypoint
        slides and passes. Games with richer effects override.
        """
        board = state.board.copy()
        if isinstance(move, Place):
            board.place(move.piece, move.at)
        elif isinstance(move, Slide):
            board.move_piece(move.waypoints[0], move.waypoints[-1])
        elif isinstance(move, Pass):
            pass
        else:
            raise IllegalMoveError(f"{self.game_id} has no default for {move!r}")
        return self.advance(state, board)

    def perform_move(self, state: GameState, move: Move) -> GameState:
        """Validate, then apply. Raises IllegalMoveError on a bad move."""
        if not self.validate_move(state, move, state.current_player):
            raise IllegalMoveError(f"illegal move for player {state.current_player}: {move!r}")
        return self.apply_move(state, move)

    def advance(self, state, board: Board, **changes) -> GameState:
        """Successor state: new board, round + 1, turn passed on."""
        return replace(
            state,
            board=board,
            round=state.round + 1,
            current_player=self.next_player(state),
            **changes,
        )

    # -- metadata helpers -------------------------------------------------

    @property
    def piece_alphabet(self) -> tuple[str, ...]:
        """Every symbol that may appear on this game's board."""
        symbols: list[str] = []
        for group in self.player_symbols:
            symbols.extend(group)
        symbols.extend(self.neutral_symbols)
        return tuple(symbols)

    def piece_owner(self, symbol: str) -> int | None:
        """Player owning pieces drawn with `symbol`, None for neutral."""
        for player, group in enumerate(self.player_symbols):
            if symbol in group:
                return player
        return None

    def blank_board(self) -> Board:
        return Board.blank(self.rows, self.cols)


# -- game results and the standard loop ----------------------------------

COMPLETE = "complete"
INPUT_EXHAUSTED = "input_exhausted"
MOVE_CAP = "move_cap"


@dataclass(frozen=True)
class GameResult:
    final_state: GameState
    winner: int | None
    move_log: tuple[tuple[int, Move], ...]
    rounds_played: int
    status: str  # COMPLETE | INPUT_EXHAUSTED | MOVE_CAP

    @property
    def terminal(self) -> bool:
        return self.status == COMPLETE


class MoveSource:
    """Supplies move text for one player. None means exhausted."""

    def next_move(self, game: Game, state: GameState) -> str | None:
        raise NotImplementedError


class ScriptedSource(MoveSource):
    def __init__(self, texts: Sequence[str]):
        self._texts = list(texts)
        self._pos = 0

    def next_move(self, game: Game, state: GameState) -> str | None:
        if self._pos >= len(self._texts):
            return None
        text = self._texts[self._pos]
        self._pos += 1
        return text


class ConsoleSource(MoveSource):
    def __init__(self, stream: IO[str] | None = None):
        self._stream = stream if stream is not None else sys.stdin

    def next_move(self, game: Game, state: GameState) -> str | None:
        line = self._stream.readline()
        if line == "":
            return None
        return line.strip()


def run_game_loop(
    game: Game,
    sources: Sequence[MoveSource],
    out: IO[str] | None = None,
    max_moves: int = 10_000,
    initial: GameState | None = None,
) -> GameResult:
    """Drive a game to its end with the standard loop.

    Each turn: render the board, prompt the current player until their
    input parses and validates (invalid inputs never touch the state),
    apply the move. The terminal board is rendered before the winner
    line. An exhausted source or the move cap aborts with a
    distinguishable status. `initial` resumes from a mid-game state
    instead of initial_state().
    """
    if len(sources) != game.player_count:
        raise ValueError(f"{game.game_id} needs {game.player_count} move sources")
    state = game.initial_state() if initial is None else initial
    log: list[tuple[int, Move]] = []

    def emit(text: str) -> None:
        if out is not None:
            out.write(text)
            out.flush()

    while True:
        emit("\n" + format_board(state.board) + "\n")
        if game.game_finished(state):
            winner = game.get_winner(state)
            emit(f"winner: {winner if winner is not None else 'none'}\n")
            return GameResult(state, winner, tuple(log), state.round, COMPLETE)
        if len(log) >= max_moves:
            return GameResult(state, None, tuple(log), state.round, MOVE_CAP)
        player = state.current_player
        while True:
            emit(f"player {player} move> ")
            text = sources[player].next_move(game, state)
            if text is None:
                return GameResult(state, None, tuple(log), state.round, INPUT_EXHAUSTED)
            try:
                move = parse_move(text)
            except MoveParseError:
                emit("invalid move\n")
                continue
            if game.validate_move(state, move, player):
                break
            emit("invalid move\n")
        state = game.apply_move(state, move)
        log.append((player, move))
