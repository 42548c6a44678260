"""Kharebga (Kharbaga), 5x5.

Placement phase: players alternate turns placing exactly two pieces per
turn (``pp``, either cell order) on any empty cells except the centre,
12 pieces each. After 12 turns every cell but the centre is filled and
the movement phase begins with player 0.

Movement: one orthogonal step onto an empty cell. Custodial capture is
evaluated independently in each orthogonal direction from the
destination: the single enemy piece directly adjacent is removed iff
the cell just beyond it holds a friendly piece. Two enemy pieces in a
row are never captured together. Capture is not forced and each
capturing step is its own move.

A player with no pieces left, or no legal move on their turn, loses.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, PlacePair, Slide
from .common import ORTHOGONAL, add

CENTRE = (2, 2)


@dataclass(frozen=True)
class KharebgaState(GameState):
    hands: tuple[int, int]


class Kharebga(Game):
    game_id = "kharebga"
    rows = 5
    cols = 5
    player_count = 2
    player_symbols = (("A",), ("V",))

    def initial_state(self) -> KharebgaState:
        return KharebgaState(Board.blank(5, 5), 0, 0, (12, 12))

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        board = state.board
        if state.hands[player] > 0:
            if not isinstance(move, PlacePair):
                return False
            a, b = move.first, move.second
            if a == b or CENTRE in (a, b):
                return False
            if not board.in_bounds(a) or not board.in_bounds(b):
                return False
            return board.get(a) == EMPTY and board.get(b) == EMPTY
        if not isinstance(move, Slide) or len(move.waypoints) != 2 or move.promotion:
            return False
        frm, to = move.waypoints
        if not board.in_bounds(frm) or not board.in_bounds(to):
            return False
        if board.get(frm) != self.player_symbols[player][0]:
            return False
        if (abs(to[0] - frm[0]), abs(to[1] - frm[1])) not in ((1, 0), (0, 1)):
            return False
        return board.get(to) == EMPTY

    def legal_moves(self, state) -> list[Move]:
        player = state.current_player
        board = state.board
        moves: list[Move] = []
        if state.hands[player] > 0:
            empties = [
                at for at in board.coords() if at != CENTRE and board.get(at) == EMPTY
            ]
            for a in empties:
                for b in empties:
                    if a != b:
                        moves.append(PlacePair(a, b))
            return moves
        own = self.player_symbols[player][0]
        for frm in board.coords():
            if board.get(frm) != own:
                continue
            for d in ORTHOGONAL:
                to = add(frm, d)
                if board.in_bounds(to) and board.get(to) == EMPTY:
                    moves.append(Slide((frm, to)))
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        player = state.current_player
        own = self.player_symbols[player][0]
        board = state.board.copy()
        if isinstance(move, PlacePair):
            board.place(own, move.first)
            board.place(own, move.second)
            hands = list(state.hands)
            hands[player] -= 2
            return self.advance(state, board, hands=tuple(hands))
        frm, to = move.waypoints
        enemy = self.player_symbols[1 - player][0]
        board.move_piece(frm, to)
        for d in ORTHOGONAL:
            victim = add(to, d)
            support = add(victim, d)
            if (
                board.in_bounds(support)
                and board.get(victim) == enemy
                and board.get(support) == own
            ):
                board.remove(victim)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        if state.hands[0] > 0 or state.hands[1] > 0:
            return False
        if state.board.count("A") == 0 or state.board.count("V") == 0:
            return True
        return not self.legal_moves(state)

    def get_winner(self, state) -> int | None:
        if state.board.count("V") == 0:
            return 0
        if state.board.count("A") == 0:
            return 1
        if not self.legal_moves(state):
            return (state.current_player + 1) % 2
        return None
