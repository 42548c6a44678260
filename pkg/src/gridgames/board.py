"""Rectangular game boards.

A board is a rows x cols matrix of single-character cells. Two characters
are reserved: ``_`` marks an empty playable cell and ``.`` marks a void
cell, a hole in the playing area used to embed cross- or ring-shaped
boards (Peg Solitaire, Nine Men's Morris) in a rectangle. Any other
printable, non-space character is a piece symbol.

The layout text format is the same matrix, one row per line, one
character per cell, rows joined by single newlines. Whitespace inside a
row is always an error: a layout like ``"_ _ _"`` does not denote a
padded row, it denotes a malformed one.

Board is a closed type: games compose it and mutate it only through
place/move_piece/remove. It knows nothing about rules.
"""

from __future__ import annotations

from typing import Iterator

EMPTY = "_"
VOID = "."

Coord = tuple[int, int]


class BoardError(ValueError):
    """Malformed layout or illegal board mutation."""


def is_piece(cell: str) -> bool:
    return cell != EMPTY and cell != VOID


class Board:
    """A rows x cols grid of cells, stored as one string per row."""

    __slots__ = ("rows", "cols", "_grid")

    def __init__(self, rows: int, cols: int, grid: list[str]):
        self.rows = rows
        self.cols = cols
        self._grid = grid

    @classmethod
    def blank(cls, rows: int, cols: int) -> "Board":
        """All-empty board."""
        _check_dims(rows, cols)
        return cls(rows, cols, [EMPTY * cols for _ in range(rows)])

    @classmethod
    def from_layout(cls, rows: int, cols: int, layout: str) -> "Board":
        """Parse a layout string into a board.

        Raises BoardError if the text is not exactly `rows` lines of
        exactly `cols` cell characters each.
        """
        _check_dims(rows, cols)
        lines = layout.split("\n")
        if len(lines) != rows:
            raise BoardError(f"expected {rows} rows, got {len(lines)}")
        for r, line in enumerate(lines):
            if len(line) != cols:
                raise BoardError(f"row {r} has {len(line)} cells, expected {cols}")
            for c, ch in enumerate(line):
                if ch.isspace():
                    raise BoardError(
                        f"whitespace at row {r}, column {c}: cells are single "
                        "characters with no separators"
                    )
                if not ch.isprintable():
                    raise BoardError(f"unprintable character at row {r}, column {c}")
        return cls(rows, cols, list(lines))

    def layout(self) -> str:
        """The board as layout text (inverse of from_layout)."""
        return "\n".join(self._grid)

    def rows_view(self) -> list[str]:
        """The row strings themselves, for read-only hot paths.

        Callers must not mutate the list; cells are read as
        ``rows_view()[r][c]`` with bounds handled by the caller.
        """
        return self._grid

    def copy(self) -> "Board":
        return Board(self.rows, self.cols, list(self._grid))

    def in_bounds(self, at: Coord) -> bool:
        r, c = at
        return 0 <= r < self.rows and 0 <= c < self.cols

    def get(self, at: Coord) -> str:
        if not self.in_bounds(at):
            raise BoardError(f"coordinate {at} out of range")
        return self._grid[at[0]][at[1]]

    def place(self, piece: str, at: Coord) -> None:
        """Put a piece on an empty cell."""
        if len(piece) != 1 or not is_piece(piece) or piece.isspace():
            raise BoardError(f"not a piece symbol: {piece!r}")
        cell = self.get(at)
        if cell == VOID:
            raise BoardError(f"cannot place on void cell {at}")
        if cell != EMPTY:
            raise BoardError(f"cell {at} is occupied by {cell!r}")
        self._set(at, piece)

    def move_piece(self, frm: Coord, to: Coord) -> None:
        """Relocate a piece to an empty cell."""
        piece = self.get(frm)
        if not is_piece(piece):
            raise BoardError(f"no piece at {frm}")
        dest = self.get(to)
        if dest == VOID:
            raise BoardError(f"cannot move onto void cell {to}")
        if dest != EMPTY:
            raise BoardError(f"cell {to} is occupied by {dest!r}")
        self._set(frm, EMPTY)
        self._set(to, piece)

    def remove(self, at: Coord) -> None:
        """Take a piece off the board."""
        if not is_piece(self.get(at)):
            raise BoardError(f"no piece at {at}")
        self._set(at, EMPTY)

    def _set(self, at: Coord, ch: str) -> None:
        r, c = at
        row = self._grid[r]
        self._grid[r] = row[:c] + ch + row[c + 1 :]

    def coords(self) -> Iterator[Coord]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield (r, c)

    def playable_coords(self) -> Iterator[Coord]:
        """All non-void coordinates."""
        for r in range(self.rows):
            row = self._grid[r]
            for c in range(self.cols):
                if row[c] != VOID:
                    yield (r, c)

    def find(self, symbol: str) -> list[Coord]:
        return [at for at in self.coords() if self.get(at) == symbol]

    def count(self, symbol: str) -> int:
        return sum(row.count(symbol) for row in self._grid)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Board):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._grid == other._grid
        )

    def __hash__(self):  # boards are mutable
        raise TypeError("Board is not hashable")

    def __repr__(self) -> str:
        return f"Board({self.rows}x{self.cols})\n{self.layout()}"


def _check_dims(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise BoardError(f"board dimensions must be positive, got {rows}x{cols}")
