"""Tron: 10x10 light-cycle duel. Heads step one cell orthogonally into
empty space; the vacated cell becomes a permanent wall ('1'). A player
with no legal step loses.

Heads start at (4, 1) for player 0 and (5, 8) for player 1.
"""

from __future__ import annotations

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Slide
from .common import ORTHOGONAL, add

WALL = "1"


class Tron(Game):
    game_id = "tron"
    rows = 10
    cols = 10
    player_count = 2
    player_symbols = (("A",), ("V",))
    neutral_symbols = (WALL,)

    def initial_state(self) -> GameState:
        board = Board.blank(10, 10)
        board.place("A", (4, 1))
        board.place("V", (5, 8))
        return GameState(board, 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Slide) or len(move.waypoints) != 2 or move.promotion:
            return False
        frm, to = move.waypoints
        board = state.board
        if not board.in_bounds(frm) or not board.in_bounds(to):
            return False
        if board.get(frm) != self.player_symbols[player][0]:
            return False
        if (abs(to[0] - frm[0]), abs(to[1] - frm[1])) not in ((1, 0), (0, 1)):
            return False
        return board.get(to) == EMPTY

    def legal_moves(self, state) -> list[Move]:
        head = self._head(state, state.current_player)
        board = state.board
        moves = []
        for d in ORTHOGONAL:
            to = add(head, d)
            if board.in_bounds(to) and board.get(to) == EMPTY:
                moves.append(Slide((head, to)))
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        frm, to = move.waypoints
        board = state.board.copy()
        board.move_piece(frm, to)
        board.place(WALL, frm)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        head = self._head(state, state.current_player)
        board = state.board
        return not any(
            board.in_bounds(add(head, d)) and board.get(add(head, d)) == EMPTY
            for d in ORTHOGONAL
        )

    def get_winner(self, state) -> int | None:
        if not self.game_finished(state):
            return None
        return (state.current_player + 1) % 2

    def _head(self, state, player):
        return state.board.find(self.player_symbols[player][0])[0]
