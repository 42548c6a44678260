"""Game of the Amazons, 10x10.

A move has three waypoints: an amazon makes a queen move along empty
cells, then shoots an arrow (another queen line from its new square)
onto an empty cell; the arrow square is blocked ('1') for the rest of
the game. The square the amazon just vacated is a legal arrow target.
The player to move with no legal move loses.

Player 0 ('A') starts at (6,0), (6,9), (9,3), (9,6); player 1 ('V') at
(0,3), (0,6), (3,0), (3,9).
"""

from __future__ import annotations

from ..board import Board, EMPTY
from ..game import Game, GameState
from ..moves import Move, Slide
from .common import ALL_EIGHT, add

ARROW = "1"


def _line_clear(grid, fr, fc, tr, tc, skip_r, skip_c) -> bool:
    """Queen line from (fr,fc) to (tr,tc): straight, and every cell after
    the start up to and including the target is empty. (skip_r, skip_c)
    is treated as empty (the vacated square during arrow checks)."""
    dr = tr - fr
    dc = tc - fc
    if dr != 0 and dc != 0 and abs(dr) != abs(dc):
        return False
    if dr == 0 and dc == 0:
        return False
    step_r = (dr > 0) - (dr < 0)
    step_c = (dc > 0) - (dc < 0)
    r, c = fr + step_r, fc + step_c
    while True:
        if grid[r][c] != EMPTY and not (r == skip_r and c == skip_c):
            return False
        if r == tr and c == tc:
            return True
        r += step_r
        c += step_c


class Amazons(Game):
    game_id = "amazons"
    rows = 10
    cols = 10
    player_count = 2
    player_symbols = (("A",), ("V",))
    neutral_symbols = (ARROW,)
    max_slide_len = 3

    def initial_state(self) -> GameState:
        board = Board.blank(10, 10)
        for at in ((6, 0), (6, 9), (9, 3), (9, 6)):
            board.place("A", at)
        for at in ((0, 3), (0, 6), (3, 0), (3, 9)):
            board.place("V", at)
        return GameState(board, 0, 0)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        if not isinstance(move, Slide) or move.promotion is not None:
            return False
        waypoints = move.waypoints
        if len(waypoints) != 3:
            return False
        frm, to, arrow = waypoints
        fr, fc = frm
        tr, tc = to
        ar, ac = arrow
        if not (0 <= fr < 10 and 0 <= fc < 10 and 0 <= tr < 10 and 0 <= tc < 10):
            return False
        if not (0 <= ar < 10 and 0 <= ac < 10):
            return False
        grid = state.board.rows_view()
        if grid[fr][fc] != self.player_symbols[player][0]:
            return False
        if not _line_clear(grid, fr, fc, tr, tc, -1, -1):
            return False
        # Arrow line is judged with the amazon already moved: frm is empty.
        if arrow == to:
            return False
        return _line_clear(grid, tr, tc, ar, ac, fr, fc)

    def legal_moves(self, state) -> list[Move]:
        board = state.board
        own = self.player_symbols[state.current_player][0]
        moves = []
        for frm in board.coords():
            if board.get(frm) != own:
                continue
            for d in ALL_EIGHT:
                to = add(frm, d)
                while board.in_bounds(to) and board.get(to) == EMPTY:
                    for ad in ALL_EIGHT:
                        arrow = add(to, ad)
                        while board.in_bounds(arrow) and (
                            board.get(arrow) == EMPTY or arrow == frm
                        ):
                            moves.append(Slide((frm, to, arrow)))
                            arrow = add(arrow, ad)
                    to = add(to, d)
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        frm, to, arrow = move.waypoints
        board = state.board.copy()
        board.move_piece(frm, to)
        board.place(ARROW, arrow)
        return self.advance(state, board)

    def game_finished(self, state) -> bool:
        # A queen step exists iff some amazon has an empty neighbour, and
        # the arrow can then always target the vacated square.
        board = state.board
        own = self.player_symbols[state.current_player][0]
        for frm in board.coords():
            if board.get(frm) != own:
                continue
            for d in ALL_EIGHT:
                to = add(frm, d)
                if board.in_bounds(to) and board.get(to) == EMPTY:
                    return False
        return True

    def get_winner(self, state) -> int | None:
        if not self.game_finished(state):
            return None
        return (state.current_player + 1) % 2
