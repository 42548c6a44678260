"""Chess with full FIDE movement: castling, en passant, and promotion
(``m r1 c1 r2 c2 =Q`` with Q/R/B/N in the mover's case; the tag is
mandatory on promotion and illegal elsewhere). Checkmate wins,
stalemate draws. Threefold repetition and the fifty-move rule are out
of scope.

White is player 0 (uppercase, rows 6-7, moving up); black is player 1
(lowercase, rows 0-1). Castling is entered as the king's two-column
slide.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Slide
from .common import ALL_EIGHT, DIAGONAL, ORTHOGONAL, add, path_clear

START_LAYOUT = "\n".join(
    [
        "rnbqkbnr",
        "pppppppp",
        "________",
        "________",
        "________",
        "________",
        "PPPPPPPP",
        "RNBQKBNR",
    ]
)

KNIGHT_STEPS = ((-2, -1), (-2, 1), (-1, -2), (-1, 2), (1, -2), (1, 2), (2, -1), (2, 1))

# Castling rights, fixed order: white kingside, white queenside,
# black kingside, black queenside.
RIGHTS = ("K", "Q", "k", "q")
KING_HOME = ((7, 4), (0, 4))
ROOK_HOME = {"K": (7, 7), "Q": (7, 0), "k": (0, 7), "q": (0, 0)}


@dataclass(frozen=True)
class ChessState(GameState):
    castling: tuple[bool, bool, bool, bool]
    en_passant: tuple[int, int] | None


class Chess(Game):
    game_id = "chess"
    rows = 8
    cols = 8
    player_count = 2
    player_symbols = (tuple("PNBRQK"), tuple("pnbrqk"))
    promotion_symbols = ("Q", "R", "B", "N", "q", "r", "b", "n")

    def initial_state(self) -> ChessState:
        board = Board.from_layout(8, 8, START_LAYOUT)
        return ChessState(board, 0, 0, (True, True, True, True), None)

    # -- validation --------------------------------------------------------

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Slide) or len(move.waypoints) != 2:
            return False
        frm, to = move.waypoints
        board = state.board
        if not board.in_bounds(frm) or not board.in_bounds(to) or frm == to:
            return False
        piece = board.get(frm)
        if self.piece_owner(piece) != player:
            return False
        if self.piece_owner(board.get(to)) == player:
            return False
        if not self._pseudo_legal(state, frm, to, piece, player, move.promotion):
            return False
        return not self._leaves_king_attacked(state, frm, to, piece, player, move.promotion)

    def _pseudo_legal(self, state, frm, to, piece, player, promotion) -> bool:
        board = state.board
        kind = piece.upper()
        dr, dc = to[0] - frm[0], to[1] - frm[1]
        if promotion is not None and kind != "P":
            return False
        if kind == "P":
            return self._pawn_pseudo(state, frm, to, player, promotion)
        if kind == "N":
            return (dr, dc) in KNIGHT_STEPS
        if kind == "B":
            return abs(dr) == abs(dc) and path_clear(board, frm, to)
        if kind == "R":
            return (dr == 0 or dc == 0) and path_clear(board, frm, to)
        if kind == "Q":
            return (dr == 0 or dc == 0 or abs(dr) == abs(dc)) and path_clear(
                board, frm, to
            )
        # King: single step, or a castling two-step.
        if max(abs(dr), abs(dc)) == 1:
            return True
        if dr == 0 and abs(dc) == 2 and frm == KING_HOME[player]:
            return self._castle_legal(state, player, kingside=dc > 0)
        return False

    def _pawn_pseudo(self, state, frm, to, player, promotion) -> bool:
        board = state.board
        forward = -1 if player == 0 else 1
        start_rank = 6 if player == 0 else 1
        last_rank = 0 if player == 0 else 7
        dr, dc = to[0] - frm[0], to[1] - frm[1]
        if to[0] == last_rank:
            own_promos = ("Q", "R", "B", "N") if player == 0 else ("q", "r", "b", "n")
            if promotion not in own_promos:
                return False
        elif promotion is not None:
            return False
        if dc == 0:
            if board.get(to) != EMPTY:
                return False
            if dr == forward:
                return True
            return (
                dr == 2 * forward
                and frm[0] == start_rank
                and board.get((frm[0] + forward, frm[1])) == EMPTY
            )
        if abs(dc) == 1 and dr == forward:
            target = board.get(to)
            if self.piece_owner(target) == 1 - player:
                return True
            return target == EMPTY and state.en_passant == to
        return False

    def _castle_legal(self, state, player, kingside: bool) -> bool:
        board = state.board
        right = ("K" if kingside else "Q") if player == 0 else ("k" if kingside else "q")
        if not state.castling[RIGHTS.index(right)]:
            return False
        rook_at = ROOK_HOME[right]
        rook = "R" if player == 0 else "r"
        if board.get(rook_at) != rook:
            return False
        king_at = KING_HOME[player]
        row = king_at[0]
        between = range(king_at[1] + 1, rook_at[1]) if kingside else range(
            rook_at[1] + 1, king_at[1]
        )
        if any(board.get((row, c)) != EMPTY for c in between):
            return False
        # King may not castle out of, through, or into check.
        step = 1 if kingside else -1
        enemy = 1 - player
        for c in (king_at[1], king_at[1] + step, king_at[1] + 2 * step):
            if self._attacked(board, (row, c), enemy):
                return False
        return True

    def _leaves_king_attacked(self, state, frm, to, piece, player, promotion) -> bool:
        board = self._board_after(state, frm, to, piece, player, promotion)
        king = "K" if player == 0 else "k"
        spots = board.find(king)
        return bool(spots) and self._attacked(board, spots[0], 1 - player)

    # -- attack detection ---------------------------------------------------

    def _attacked(self, board: Board, at, by_player: int) -> bool:
        enemy = self.player_symbols[by_player]
        pawn = "P" if by_player == 0 else "p"
        pawn_dir = -1 if by_player == 0 else 1
        for dc in (-1, 1):
            spot = (at[0] - pawn_dir, at[1] + dc)
            if board.in_bounds(spot) and board.get(spot) == pawn:
                return True
        knight = "N" if by_player == 0 else "n"
        for d in KNIGHT_STEPS:
            spot = add(at, d)
            if board.in_bounds(spot) and board.get(spot) == knight:
                return True
        king = "K" if by_player == 0 else "k"
        for d in ALL_EIGHT:
            spot = add(at, d)
            if board.in_bounds(spot) and board.get(spot) == king:
                return True
        for dirs, kinds in ((ORTHOGONAL, "RQ"), (DIAGONAL, "BQ")):
            riders = tuple(k if by_player == 0 else k.lower() for k in kinds)
            for d in dirs:
                spot = add(at, d)
                while board.in_bounds(spot):
                    cell = board.get(spot)
                    if cell != EMPTY:
                        if cell in riders:
                            return True
                        break
                    spot = add(spot, d)
        return False

    # -- application ---------------------------------------------------------

    def _board_after(self, state, frm, to, piece, player, promotion) -> Board:
        board = state.board.copy()
        kind = piece.upper()
        if kind == "P" and to == state.en_passant and frm[1] != to[1]:
            board.remove((frm[0], to[1]))  # the passed pawn sits beside frm
        if board.get(to) != EMPTY:
            board.remove(to)
        board.move_piece(frm, to)
        if kind == "K" and abs(to[1] - frm[1]) == 2:
            right = ("K" if to[1] > frm[1] else "Q") if player == 0 else (
                "k" if to[1] > frm[1] else "q"
            )
            rook_at = ROOK_HOME[right]
            board.move_piece(rook_at, (frm[0], (frm[1] + to[1]) // 2))
        if promotion is not None:
            board.remove(to)
            board.place(promotion, to)
        return board

    def apply_move(self, state, move) -> GameState:
        frm, to = move.waypoints
        player = state.current_player
        piece = state.board.get(frm)
        board = self._board_after(state, frm, to, piece, player, move.promotion)

        castling = list(state.castling)
        if piece == "K":
            castling[0] = castling[1] = False
        elif piece == "k":
            castling[2] = castling[3] = False
        for i, right in enumerate(RIGHTS):
            if frm == ROOK_HOME[right] or to == ROOK_HOME[right]:
                castling[i] = False

        en_passant = None
        if piece.upper() == "P" and abs(to[0] - frm[0]) == 2:
            en_passant = ((frm[0] + to[0]) // 2, frm[1])
        return self.advance(
            state, board, castling=tuple(castling), en_passant=en_passant
        )

    # -- enumeration ----------------------------------------------------------

    def legal_moves(self, state) -> list[Move]:
        moves = []
        player = state.current_player
        board = state.board
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            for to in self._pseudo_targets(state, frm, piece, player):
                for promo in self._promotions(piece, to, player):
                    if not self._leaves_king_attacked(
                        state, frm, to, piece, player, promo
                    ):
                        moves.append(Slide((frm, to), promo))
        return moves

    def _promotions(self, piece, to, player):
        if piece.upper() == "P" and to[0] == (0 if player == 0 else 7):
            return ("Q", "R", "B", "N") if player == 0 else ("q", "r", "b", "n")
        return (None,)

    def _pseudo_targets(self, state, frm, piece, player):
        board = state.board
        kind = piece.upper()
        if kind == "P":
            forward = -1 if player == 0 else 1
            start_rank = 6 if player == 0 else 1
            one = (frm[0] + forward, frm[1])
            if board.in_bounds(one) and board.get(one) == EMPTY:
                yield one
                two = (frm[0] + 2 * forward, frm[1])
                if frm[0] == start_rank and board.get(two) == EMPTY:
                    yield two
            for dc in (-1, 1):
                to = (frm[0] + forward, frm[1] + dc)
                if not board.in_bounds(to):
                    continue
                if self.piece_owner(board.get(to)) == 1 - player or to == state.en_passant:
                    yield to
            return
        if kind == "N":
            for d in KNIGHT_STEPS:
                to = add(frm, d)
                if board.in_bounds(to) and self.piece_owner(board.get(to)) != player:
                    yield to
            return
        if kind == "K":
            for d in ALL_EIGHT:
                to = add(frm, d)
                if board.in_bounds(to) and self.piece_owner(board.get(to)) != player:
                    yield to
            for kingside in (True, False):
                if frm == KING_HOME[player] and self._castle_legal(
                    state, player, kingside
                ):
                    yield (frm[0], frm[1] + (2 if kingside else -2))
            return
        dirs = {"B": DIAGONAL, "R": ORTHOGONAL, "Q": ALL_EIGHT}[kind]
        for d in dirs:
            to = add(frm, d)
            while board.in_bounds(to):
                owner = self.piece_owner(board.get(to))
                if owner == player:
                    break
                yield to
                if owner is not None:
                    break
                to = add(to, d)

    # -- termination -------------------------------------------------------------

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def game_finished(self, state) -> bool:
        return not self._has_legal_move(state)

    def get_winner(self, state) -> int | None:
        if self._has_legal_move(state):
            return None
        player = state.current_player
        king = "K" if player == 0 else "k"
        spots = state.board.find(king)
        if spots and self._attacked(state.board, spots[0], 1 - player):
            return 1 - player  # checkmate
        return None  # stalemate

    def _has_legal_move(self, state) -> bool:
        player = state.current_player
        board = state.board
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            for to in self._pseudo_targets(state, frm, piece, player):
                promo = self._promotions(piece, to, player)[0]
                if not self._leaves_king_attacked(state, frm, to, piece, player, promo):
                    return True
        return False
