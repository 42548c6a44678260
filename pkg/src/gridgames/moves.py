"""Move values.

Four move shapes cover all twelve games:

* Place     — put a piece symbol on one cell (placements, drops).
* Slide     — a waypoint move: an ordered list of visited/targeted cells.
              Two waypoints is a plain from/to move; extra waypoints encode
              multi-jumps (Checkers), move-then-shoot (Amazons) and
              move-then-remove (Nine Men's Morris). An optional promotion
              symbol covers Chess underpromotion.
* PlacePair — two cells filled or designated in one move (Domineering
              dominoes, Kharebga's two-at-a-time placement, Morris
              place-and-remove). Interpretation is game-specific.
* Pass      — no board action.

Coordinates are (row, col), zero-based, row 0 at the top. Moves carry no
board reference; range and legality are checked by game validation, not
at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

Coord = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Place:
    piece: str
    at: Coord


@dataclass(frozen=True, slots=True)
class Slide:
    waypoints: tuple[Coord, ...]
    promotion: str | None = None


@dataclass(frozen=True, slots=True)
class PlacePair:
    first: Coord
    second: Coord


@dataclass(frozen=True, slots=True)
class Pass:
    pass


PASS = Pass()

Move = Place | Slide | PlacePair | Pass
