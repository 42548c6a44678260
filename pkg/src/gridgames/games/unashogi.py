"""Unashogi, a 9x9 drop-shogi variant.

Only the kings start on the board, at (8,4) for player 0 and (0,4) for
player 1; each player's other 19 pieces start in hand: 2 gold generals,
2 silver generals, 2 knights, 2 lances, 1 rook, 1 bishop, 9 pawns.

A turn is either a drop (``p <letter> <r> <c>``) of a hand piece onto
any empty cell, or a board move with standard shogi movement. There is
no promotion. Captured pieces join the capturer's hand. Capturing the
king wins; there is no check rule, so a king may be left or moved into
attack.

Player 0 plays uppercase and moves toward row 0; player 1 plays
lowercase and moves toward row 8.

Movement: king one step any way; gold one step orthogonally or
diagonally forward (never diagonally backward); silver one step forward
or any diagonal; knight jumps two forward one sideways; lance slides
forward; rook slides orthogonally; bishop slides diagonally; pawn steps
forward.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Place, Slide
from .common import add, line_direction, path_clear

# Hand slots, fixed order: gold, silver, knight, lance, rook, bishop, pawn.
HAND_KINDS = "GSNLRBP"
INITIAL_HAND = (2, 2, 2, 2, 1, 1, 9)

STEPPERS: dict[str, tuple[tuple[int, int], ...]] = {
    "K": ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)),
    "G": ((-1, 0), (0, -1), (0, 1), (1, 0), (-1, -1), (-1, 1)),  # f = -1
    "S": ((-1, 0), (-1, -1), (-1, 1), (1, -1), (1, 1)),
    "N": ((-2, -1), (-2, 1)),
    "P": ((-1, 0),),
}
SLIDERS: dict[str, tuple[tuple[int, int], ...]] = {
    "L": ((-1, 0),),
    "R": ((-1, 0), (1, 0), (0, -1), (0, 1)),
    "B": ((-1, -1), (-1, 1), (1, -1), (1, 1)),
}


def _oriented(dirs, player: int):
    if player == 0:
        return dirs
    return tuple((-dr, dc) for dr, dc in dirs)


class Unashogi(Game):
    game_id = "unashogi"
    rows = 9
    cols = 9
    player_count = 2
    player_symbols = (tuple("KGSNLRBP"), tuple("kgsnlrbp"))

    def initial_state(self) -> "UnashogiState":
        board = Board.blank(9, 9)
        board.place("K", (8, 4))
        board.place("k", (0, 4))
        return UnashogiState(board, 0, 0, (INITIAL_HAND, INITIAL_HAND))

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        board = state.board
        if isinstance(move, Place):
            kind = move.piece.upper()
            if move.piece != self._cased(kind, player) or kind not in HAND_KINDS:
                return False
            if state.hands[player][HAND_KINDS.index(kind)] < 1:
                return False
            return board.in_bounds(move.at) and board.get(move.at) == EMPTY
        if not isinstance(move, Slide) or len(move.waypoints) != 2 or move.promotion:
            return False
        frm, to = move.waypoints
        if not board.in_bounds(frm) or not board.in_bounds(to):
            return False
        piece = board.get(frm)
        if self.piece_owner(piece) != player:
            return False
        if self.piece_owner(board.get(to)) == player:
            return False
        return self._reaches(board, frm, to, piece.upper(), player)

    def _reaches(self, board, frm, to, kind: str, player: int) -> bool:
        step = (to[0] - frm[0], to[1] - frm[1])
        if kind in STEPPERS:
            return step in _oriented(STEPPERS[kind], player)
        dirs = _oriented(SLIDERS[kind], player)
        line = line_direction(frm, to)
        if line is None or line not in dirs:
            return False
        return path_clear(board, frm, to)

    def legal_moves(self, state) -> list[Move]:
        board = state.board
        player = state.current_player
        moves: list[Move] = []
        hand = state.hands[player]
        empties = [at for at in board.coords() if board.get(at) == EMPTY]
        for i, kind in enumerate(HAND_KINDS):
            if hand[i] < 1:
                continue
            letter = self._cased(kind, player)
            moves.extend(Place(letter, at) for at in empties)
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            kind = piece.upper()
            if kind in STEPPERS:
                for d in _oriented(STEPPERS[kind], player):
                    to = add(frm, d)
                    if board.in_bounds(to) and self.piece_owner(board.get(to)) != player:
                        moves.append(Slide((frm, to)))
            else:
                for d in _oriented(SLIDERS[kind], player):
                    to = add(frm, d)
                    while board.in_bounds(to):
                        owner = self.piece_owner(board.get(to))
                        if owner == player:
                            break
                        moves.append(Slide((frm, to)))
                        if owner is not None:
                            break
                        to = add(to, d)
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        board = state.board.copy()
        player = state.current_player
        hands = [list(state.hands[0]), list(state.hands[1])]
        if isinstance(move, Place):
            board.place(move.piece, move.at)
            hands[player][HAND_KINDS.index(move.piece.upper())] -= 1
        else:
            frm, to = move.waypoints
            target = board.get(to)
            if target != EMPTY:
                board.remove(to)
                kind = target.upper()
                if kind in HAND_KINDS:  # captured kings do not join a hand
                    hands[player][HAND_KINDS.index(kind)] += 1
            board.move_piece(frm, to)
        return self.advance(
            state, board, hands=(tuple(hands[0]), tuple(hands[1]))
        )

    def game_finished(self, state) -> bool:
        board = state.board
        if not board.find("K") or not board.find("k"):
            return True
        player = state.current_player
        if any(n > 0 for n in state.hands[player]):
            return False
        return not self._has_board_move(state, player)

    def get_winner(self, state) -> int | None:
        if not state.board.find("K"):
            return 1
        if not state.board.find("k"):
            return 0
        if self.game_finished(state):
            return (state.current_player + 1) % 2
        return None

    def _has_board_move(self, state, player) -> bool:
        board = state.board
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            kind = piece.upper()
            dirs = STEPPERS.get(kind) or SLIDERS[kind]
            for d in _oriented(dirs, player):
                to = add(frm, d)
                if board.in_bounds(to) and self.piece_owner(board.get(to)) != player:
                    return True
        return False

    @staticmethod
    def _cased(kind: str, player: int) -> str:
        return kind if player == 0 else kind.lower()


@dataclass(frozen=True)
class UnashogiState(GameState):
    hands: tuple[tuple[int, ...], tuple[int, ...]]
