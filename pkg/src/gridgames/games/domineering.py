"""Domineering: 8x8, player 0 places vertical 2x1 dominoes, player 1
horizontal 1x2. First player unable to place loses.

A domino is a pair placement; the canonical cell order is top-then-bottom
for vertical and left-then-right for horizontal.
"""

from __future__ import annotations

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, PlacePair


class Domineering(Game):
    game_id = "domineering"
    rows = 8
    cols = 8
    player_count = 2
    player_symbols = (("A",), ("V",))

    def initial_state(self) -> GameState:
        return GameState(Board.blank(8, 8), 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, PlacePair):
            return False
        (r1, c1), (r2, c2) = move.first, move.second
        if player == 0:
            if (r2, c2) != (r1 + 1, c1):
                return False
        else:
            if (r2, c2) != (r1, c1 + 1):
                return False
        board = state.board
        if not board.in_bounds(move.first) or not board.in_bounds(move.second):
            return False
        return board.get(move.first) == EMPTY and board.get(move.second) == EMPTY

    def legal_moves(self, state) -> list[Move]:
        board = state.board
        dr, dc = (1, 0) if state.current_player == 0 else (0, 1)
        moves = []
        for r in range(board.rows - dr):
            for c in range(board.cols - dc):
                if board.get((r, c)) == EMPTY and board.get((r + dr, c + dc)) == EMPTY:
                    moves.append(PlacePair((r, c), (r + dr, c + dc)))
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        symbol = self.player_symbols[state.current_player][0]
        board = state.board.copy()
        board.place(symbol, move.first)
        board.place(symbol, move.second)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        return not self._can_place(state)

    def get_winner(self, state) -> int | None:
        if self._can_place(state):
            return None
        return (state.current_player + 1) % 2

    def _can_place(self, state) -> bool:
        board = state.board
        dr, dc = (1, 0) if state.current_player == 0 else (0, 1)
        for r in range(board.rows - dr):
            for c in range(board.cols - dc):
                if board.get((r, c)) == EMPTY and board.get((r + dr, c + dc)) == EMPTY:
                    return True
        return False
