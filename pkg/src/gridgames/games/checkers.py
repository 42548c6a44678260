"""American checkers (draughts), 8x8 on the dark squares ((r+c) odd);
light squares are void. Player 0 ('M', kings 'K') starts on rows 5-7
and moves up the board; player 1 ('m', kings 'k') starts on rows 0-2
and moves down.

Men step and capture diagonally forward; kings both ways. Captures are
forced: when any capture exists, only capture moves are legal, and a
jump sequence must continue until no further jump is available from
the landing square. The branch taken is free. A man reaching the far
rank is promoted and the move ends there, even mid-sequence. A player
with no pieces or no legal move loses.

A move lists its landing squares as waypoints: ``m r0 c0 r1 c1 ...``.
"""

from __future__ import annotations

from ..board import Board, EMPTY, VOID
from ..game import Game, GameState
from ..moves import Move, Slide
from .common import add


def _start_layout() -> str:
    rows = []
    for r in range(8):
        row = []
        for c in range(8):
            if (r + c) % 2 == 0:
                row.append(VOID)
            elif r <= 2:
                row.append("m")
            elif r >= 5:
                row.append("M")
            else:
                row.append(EMPTY)
        rows.append("".join(row))
    return "\n".join(rows)


class Checkers(Game):
    game_id = "checkers"
    rows = 8
    cols = 8
    player_count = 2
    player_symbols = (("M", "K"), ("m", "k"))
    max_slide_len = 3

    def initial_state(self) -> GameState:
        return GameState(Board.from_layout(8, 8, _start_layout()), 0, 0)

    def _forward(self, player: int) -> int:
        return -1 if player == 0 else 1

    def _far_rank(self, player: int) -> int:
        return 0 if player == 0 else 7

    def _dirs(self, piece: str, player: int):
        if piece in ("K", "k"):
            return ((-1, -1), (-1, 1), (1, -1), (1, 1))
        f = self._forward(player)
        return ((f, -1), (f, 1))

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Slide) or move.promotion or len(move.waypoints) < 2:
            return False
        board = state.board
        waypoints = move.waypoints
        if any(not board.in_bounds(at) for at in waypoints):
            return False
        if len(set(waypoints)) != len(waypoints):
            return False
        frm = waypoints[0]
        piece = board.get(frm)
        if self.piece_owner(piece) != player:
            return False

        first_step = (waypoints[1][0] - frm[0], waypoints[1][1] - frm[1])
        if (abs(first_step[0]), abs(first_step[1])) == (1, 1):
            # Quiet move: single diagonal step, only when no capture exists.
            if len(waypoints) != 2:
                return False
            if first_step not in self._dirs(piece, player):
                return False
            if board.get(waypoints[1]) != EMPTY:
                return False
            return not self._any_capture(board, player)
        return self._check_jump_sequence(board, waypoints, piece, player)

    def _check_jump_sequence(self, board, waypoints, piece, player) -> bool:
        enemy = self.player_symbols[1 - player]
        pos = waypoints[0]
        captured: set = set()
        promoted = False
        for land in waypoints[1:]:
            if promoted:
                return False  # promotion ends the move
            step = (land[0] - pos[0], land[1] - pos[1])
            if (abs(step[0]), abs(step[1])) != (2, 2):
                return False
            d = (step[0] // 2, step[1] // 2)
            if d not in self._dirs(piece, player):
                return False
            over = add(pos, d)
            if over in captured or board.get(over) not in enemy:
                return False
            if board.get(land) != EMPTY:
                return False
            captured.add(over)
            pos = land
            if piece in ("M", "m") and land[0] == self._far_rank(player):
                promoted = True
        if promoted:
            return True
        # Sequence must be complete: no further jump from the last square.
        # Waypoints never repeat, so already-visited squares don't count
        # as continuations.
        return not self._jumps_from(board, pos, piece, player, captured, set(waypoints))

    def _jumps_from(self, board, pos, piece, player, captured, visited) -> list:
        enemy = self.player_symbols[1 - player]
        out = []
        for d in self._dirs(piece, player):
            over = add(pos, d)
            land = add(over, d)
            if not board.in_bounds(land) or over in captured:
                continue
            if board.get(over) not in enemy:
                continue
            if board.get(land) == EMPTY and land not in visited:
                out.append((d, over, land))
        return out

    def _any_capture(self, board, player) -> bool:
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            if self._jumps_from(board, frm, piece, player, set(), set()):
                return True
        return False

    def legal_moves(self, state) -> list[Move]:
        board = state.board
        player = state.current_player
        moves: list[Move] = []
        capture_only = self._any_capture(board, player)
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            if capture_only:
                self._extend_jumps(board, frm, piece, player, [frm], set(), moves)
            else:
                for d in self._dirs(piece, player):
                    to = add(frm, d)
                    if board.in_bounds(to) and board.get(to) == EMPTY:
                        moves.append(Slide((frm, to)))
        return moves

    def _extend_jumps(self, board, pos, piece, player, path, captured, out) -> None:
        if piece in ("M", "m") and len(path) > 1 and pos[0] == self._far_rank(player):
            out.append(Slide(tuple(path)))  # promotion ends the move
            return
        options = [
            (over, land)
            for _, over, land in self._jumps_from(
                board, pos, piece, player, captured, set(path)
            )
        ]
        if not options:
            if len(path) > 1:
                out.append(Slide(tuple(path)))
            return
        for over, land in options:
            self._extend_jumps(
                board, land, piece, player, path + [land], captured | {over}, out
            )

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        board = state.board.copy()
        player = state.current_player
        waypoints = move.waypoints
        piece = board.get(waypoints[0])
        pos = waypoints[0]
        for land in waypoints[1:]:
            step = (land[0] - pos[0], land[1] - pos[1])
            if (abs(step[0]), abs(step[1])) == (2, 2):
                board.remove(add(pos, (step[0] // 2, step[1] // 2)))
            board.move_piece(pos, land)
            pos = land
        if piece in ("M", "m") and pos[0] == self._far_rank(player):
            board.remove(pos)
            board.place("K" if player == 0 else "k", pos)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        board = state.board
        player = state.current_player
        if not any(
            self.piece_owner(board.get(at)) == player for at in board.coords()
        ):
            return True
        return not self._has_move(board, player)

    def get_winner(self, state) -> int | None:
        if self.game_finished(state):
            return (state.current_player + 1) % 2
        return None

    def _has_move(self, board, player) -> bool:
        for frm in board.coords():
            piece = board.get(frm)
            if self.piece_owner(piece) != player:
                continue
            for d in self._dirs(piece, player):
                to = add(frm, d)
                if board.in_bounds(to) and board.get(to) == EMPTY:
                    return True
            if self._jumps_from(board, frm, piece, player, set(), set()):
                return True
        return False
