"""Move and board text formats.

Move grammar (space-separated tokens, exactly one space, no leading or
trailing whitespace):

    p <piece> <r> <c>                place <piece> at (r, c)
    pp <r1> <c1> <r2> <c2>           two-cell move (pair placement etc.)
    m <r1> <c1> <r2> <c2> [...]      slide through waypoints; an optional
                                     final token ``=X`` names a promotion
    x                                pass

Coordinates are zero-based decimal integers, row-major, row 0 at the
top. This grammar is the single wire format: console prompts, trace
files, the candidate protocol and the HTTP API all speak it bit-exactly.

Board layout text is defined in `gridgames.board`; parse_layout and
format_board are re-exposed here so both text formats live behind one
module.
"""

from __future__ import annotations

from .board import Board, EMPTY, VOID
from .moves import Move, Pass, PASS, Place, PlacePair, Slide


class MoveParseError(ValueError):
    """Move text that does not match the grammar."""


def parse_move(text: str) -> Move:
    """Parse move text, raising MoveParseError on any deviation."""
    if not isinstance(text, str):
        raise MoveParseError("move must be text")
    tokens = text.split(" ")
    if any(tok == "" for tok in tokens):
        raise MoveParseError(f"malformed spacing in {text!r}")
    verb = tokens[0]
    if verb == "x":
        if len(tokens) != 1:
            raise MoveParseError("pass takes no arguments")
        return PASS
    if verb == "p":
        if len(tokens) != 4:
            raise MoveParseError(f"place takes 3 arguments, got {len(tokens) - 1}")
        piece = tokens[1]
        if len(piece) != 1:
            raise MoveParseError(f"piece token must be a single character: {piece!r}")
        if piece in (EMPTY, VOID) or piece.isspace() or not piece.isprintable():
            raise MoveParseError(f"not a piece symbol: {piece!r}")
        return Place(piece, (_coord(tokens[2]), _coord(tokens[3])))
    if verb == "pp":
        if len(tokens) != 5:
            raise MoveParseError(f"pp takes 4 arguments, got {len(tokens) - 1}")
        r1, c1, r2, c2 = (_coord(t) for t in tokens[1:])
        return PlacePair((r1, c1), (r2, c2))
    if verb == "m":
        args = tokens[1:]
        promotion = None
        if args and args[-1].startswith("="):
            tag = args[-1][1:]
            if len(tag) != 1 or tag.isspace() or not tag.isprintable():
                raise MoveParseError(f"bad promotion token: {args[-1]!r}")
            promotion = tag
            args = args[:-1]
        if len(args) < 4 or len(args) % 2 != 0:
            raise MoveParseError("slide needs an even number of coordinates, at least two waypoints")
        nums = [_coord(t) for t in args]
        waypoints = tuple((nums[i], nums[i + 1]) for i in range(0, len(nums), 2))
        return Slide(waypoints, promotion)
    raise MoveParseError(f"unknown verb {verb!r}")


def format_move(move: Move) -> str:
    """Move text for a move value (inverse of parse_move)."""
    if isinstance(move, Pass):
        return "x"
    if isinstance(move, Place):
        return f"p {move.piece} {move.at[0]} {move.at[1]}"
    if isinstance(move, PlacePair):
        (r1, c1), (r2, c2) = move.first, move.second
        return f"pp {r1} {c1} {r2} {c2}"
    if isinstance(move, Slide):
        text = "m " + " ".join(f"{r} {c}" for r, c in move.waypoints)
        if move.promotion is not None:
            text += f" ={move.promotion}"
        return text
    raise TypeError(f"not a move: {move!r}")


def _coord(token: str) -> int:
    if not token.isdigit() or not token.isascii():
        raise MoveParseError(f"not a coordinate: {token!r}")
    return int(token)


def parse_layout(text: str, rows: int, cols: int) -> Board:
    """Parse layout text into a board (see board.Board.from_layout)."""
    return Board.from_layout(rows, cols, text)


def format_board(board: Board) -> str:
    """Layout text for a board (inverse of parse_layout)."""
    return board.layout()
