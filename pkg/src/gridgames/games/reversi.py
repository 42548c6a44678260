"""Reversi: 8x8, standard central opening, flank-and-flip in all eight
directions. A placement must flip at least one disc. A player with no
placement passes ('x'); passing with a placement available is illegal.
The game ends when the board is full or both players pass in a row;
most discs wins, equal counts draw.

Player 0 plays 'A' and moves first; the opening has V at (3,3) and
(4,4), A at (3,4) and (4,3).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Pass, PASS, Place
from .common import ALL_EIGHT, add


@dataclass(frozen=True)
class ReversiState(GameState):
    consecutive_passes: int


class Reversi(Game):
    game_id = "reversi"
    rows = 8
    cols = 8
    player_count = 2
    player_symbols = (("A",), ("V",))

    def initial_state(self) -> ReversiState:
        board = Board.blank(8, 8)
        board.place("V", (3, 3))
        board.place("V", (4, 4))
        board.place("A", (3, 4))
        board.place("A", (4, 3))
        return ReversiState(board, 0, 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if isinstance(move, Pass):
            return not self._has_placement(state.board, player)
        if not isinstance(move, Place):
            return False
        if move.piece != self.player_symbols[player][0]:
            return False
        if not state.board.in_bounds(move.at) or state.board.get(move.at) != EMPTY:
            return False
        return bool(self._flips(state.board, move.at, player))

    def legal_moves(self, state) -> list[Move]:
        player = state.current_player
        moves: list[Move] = [
            Place(self.player_symbols[player][0], at)
            for at in state.board.coords()
            if state.board.get(at) == EMPTY and self._flips(state.board, at, player)
        ]
        if not moves:
            moves.append(PASS)
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        if isinstance(move, Pass):
            return self.advance(
                state, state.board.copy(), consecutive_passes=state.consecutive_passes + 1
            )
        board = state.board.copy()
        player = state.current_player
        own = self.player_symbols[player][0]
        flipped = self._flips(board, move.at, player)
        board.place(own, move.at)
        for at in flipped:
            board.remove(at)
            board.place(own, at)
        return self.advance(state, board, consecutive_passes=0)

    def game_finished(self, state) -> bool:
        return state.board.count(EMPTY) == 0 or state.consecutive_passes >= 2

    def get_winner(self, state) -> int | None:
        a = state.board.count("A")
        v = state.board.count("V")
        if a > v:
            return 0
        if v > a:
            return 1
        return None

    def _flips(self, board: Board, at, player: int) -> list:
        own = self.player_symbols[player][0]
        enemy = self.player_symbols[1 - player][0]
        flipped = []
        for d in ALL_EIGHT:
            run = []
            cur = add(at, d)
            while board.in_bounds(cur) and board.get(cur) == enemy:
                run.append(cur)
                cur = add(cur, d)
            if run and board.in_bounds(cur) and board.get(cur) == own:
                flipped.extend(run)
        return flipped

    def _has_placement(self, board: Board, player: int) -> bool:
        return any(
            board.get(at) == EMPTY and self._flips(board, at, player)
            for at in board.coords()
        )
