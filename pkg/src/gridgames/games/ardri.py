"""Ard Ri, a 7x7 tafl game.

Player 0 commands 16 attackers ('A') in four edge-centred groups;
player 1 commands the king ('k') on the centre plus 8 defenders ('v')
filling the 3x3 centre block. Attackers move first.

Every piece, king included, steps exactly one cell orthogonally onto an
empty cell. The four corner cells may only ever be entered by the king.

Capture is custodial and happens only as a result of the mover's move:
after a move, any enemy soldier orthogonally adjacent to the moved
piece that has a mover's-side piece directly beyond it is removed. The
king is never captured custodially; the attackers win by occupying all
four orthogonal neighbours of the king (the board edge does not
substitute for an attacker). The defenders win when the king stands on
a corner. A player with no legal move loses.
"""

from __future__ import annotations

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Slide
from .common import ORTHOGONAL, add

KING = "k"
ATTACKER = "A"
DEFENDER = "v"

CORNERS = ((0, 0), (0, 6), (6, 0), (6, 6))

START_LAYOUT = "\n".join(
    [
        "__AAA__",
        "___A___",
        "A_vvv_A",
        "AAvkvAA",
        "A_vvv_A",
        "___A___",
        "__AAA__",
    ]
)


class ArdRi(Game):
    game_id = "ardri"
    rows = 7
    cols = 7
    player_count = 2
    player_symbols = ((ATTACKER,), (DEFENDER, KING))

    def initial_state(self) -> GameState:
        return GameState(Board.from_layout(7, 7, START_LAYOUT), 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Slide) or len(move.waypoints) != 2 or move.promotion:
            return False
        frm, to = move.waypoints
        board = state.board
        if not board.in_bounds(frm) or not board.in_bounds(to):
            return False
        piece = board.get(frm)
        if self.piece_owner(piece) != player:
            return False
        if (abs(to[0] - frm[0]), abs(to[1] - frm[1])) not in ((1, 0), (0, 1)):
            return False
        if to in CORNERS and piece != KING:
            return False
        return board.get(to) == EMPTY

    def legal_moves(self, state) -> list[Move]:
        board = state.board
        player = state.current_player
        moves = []
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            for d in ORTHOGONAL:
                to = add(frm, d)
                if not board.in_bounds(to) or board.get(to) != EMPTY:
                    continue
                if to in CORNERS and piece != KING:
                    continue
                moves.append(Slide((frm, to)))
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        frm, to = move.waypoints
        player = state.current_player
        board = state.board.copy()
        board.move_piece(frm, to)
        for d in ORTHOGONAL:
            victim = add(to, d)
            support = add(victim, d)
            if not board.in_bounds(support):
                continue
            piece = board.get(victim)
            if piece == KING or self.piece_owner(piece) != 1 - player:
                continue
            if self.piece_owner(board.get(support)) == player:
                board.remove(victim)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        king = self._king(state)
        if king is None or king in CORNERS or self._king_surrounded(state.board, king):
            return True
        return not self._has_move(state)

    def get_winner(self, state) -> int | None:
        king = self._king(state)
        if king is None:
            return 0
        if king in CORNERS:
            return 1
        if self._king_surrounded(state.board, king):
            return 0
        if not self._has_move(state):
            return (state.current_player + 1) % 2
        return None

    def _king(self, state):
        kings = state.board.find(KING)
        return kings[0] if kings else None

    def _king_surrounded(self, board: Board, king) -> bool:
        for d in ORTHOGONAL:
            at = add(king, d)
            if not board.in_bounds(at) or board.get(at) != ATTACKER:
                return False
        return True

    def _has_move(self, state) -> bool:
        board = state.board
        player = state.current_player
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            for d in ORTHOGONAL:
                to = add(frm, d)
                if not board.in_bounds(to) or board.get(to) != EMPTY:
                    continue
                if to in CORNERS and piece != KING:
                    continue
                return True
        return False
