"""Direction sets and small geometry helpers shared by the games."""

from __future__ import annotations

from ..board import Board, Coord

ORTHOGONAL = ((-1, 0), (1, 0), (0, -1), (0, 1))
DIAGONAL = ((-1, -1), (-1, 1), (1, -1), (1, 1))
ALL_EIGHT = ORTHOGONAL + DIAGONAL


def add(at: Coord, d: Coord) -> Coord:
    return (at[0] + d[0], at[1] + d[1])


def line_direction(frm: Coord, to: Coord) -> Coord | None:
    """Unit step from `frm` to `to` if they share a rank, file or
    diagonal; None otherwise (or if they coincide)."""
    dr = to[0] - frm[0]
    dc = to[1] - frm[1]
    if dr == 0 and dc == 0:
        return None
    if dr != 0 and dc != 0 and abs(dr) != abs(dc):
        return None
    step_r = (dr > 0) - (dr < 0)
    step_c = (dc > 0) - (dc < 0)
    return (step_r, step_c)


def path_clear(board: Board, frm: Coord, to: Coord, empty: str = "_") -> bool:
    """True when every cell strictly between `frm` and `to` (straight
    line assumed) equals `empty`."""
    step = line_direction(frm, to)
    if step is None:
        return False
    at = add(frm, step)
    while at != to:
        if board.get(at) != empty:
            return False
        at = add(at, step)
    return True
