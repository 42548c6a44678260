"""Tic-Tac-Toe: 3x3, A vs V, three in a row wins, full board draws."""

from __future__ import annotations

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Place

LINES = (
    ((0, 0), (0, 1), (0, 2)),
    ((1, 0), (1, 1), (1, 2)),
    ((2, 0), (2, 1), (2, 2)),
    ((0, 0), (1, 0), (2, 0)),
    ((0, 1), (1, 1), (2, 1)),
    ((0, 2), (1, 2), (2, 2)),
    ((0, 0), (1, 1), (2, 2)),
    ((0, 2), (1, 1), (2, 0)),
)


class TicTacToe(Game):
    game_id = "tictactoe"
    rows = 3
    cols = 3
    player_count = 2
    player_symbols = (("A",), ("V",))

    def initial_state(self) -> GameState:
        return GameState(Board.blank(3, 3), 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Place):
            return False
        if move.piece != self.player_symbols[player][0]:
            return False
        if not state.board.in_bounds(move.at):
            return False
        return state.board.get(move.at) == EMPTY

    def legal_moves(self, state) -> list[Move]:
        piece = self.player_symbols[state.current_player][0]
        return [
            Place(piece, at)
            for at in state.board.coords()
            if state.board.get(at) == EMPTY
        ]

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def game_finished(self, state) -> bool:
        return self._line_winner(state.board) is not None or state.board.count(EMPTY) == 0

    def get_winner(self, state) -> int | None:
        symbol = self._line_winner(state.board)
        if symbol is None:
            return None
        return self.piece_owner(symbol)

    def _line_winner(self, board: Board) -> str | None:
        for line in LINES:
            first = board.get(line[0])
            if first != EMPTY and all(board.get(at) == first for at in line[1:]):
                return first
        return None
