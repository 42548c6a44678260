import random
import string

import pytest

from gridgames.board import Board, BoardError
from gridgames.moves import PASS, Place, PlacePair, Slide
from gridgames.notation import (
    MoveParseError,
    format_board,
    format_move,
    parse_layout,
    parse_move,
)


class TestParseMove:
    def test_place(self):
        assert parse_move("p A 0 2") == Place("A", (0, 2))

    def test_slide_with_waypoints(self):
        assert parse_move("m 2 3 3 3 4 3") == Slide(((2, 3), (3, 3), (4, 3)))

    def test_pair(self):
        assert parse_move("pp 0 0 1 0") == PlacePair((0, 0), (1, 0))

    def test_pass(self):
        assert parse_move("x") == PASS

    def test_promotion_tag(self):
        assert parse_move("m 1 4 0 4 =Q") == Slide(((1, 4), (0, 4)), "Q")

    @pytest.mark.parametrize(
        "text",
        [
            "move 1 1",
            "",
            " p A 0 0",
            "p A 0 0 ",
            "p  A 0 0",
            "p AB 0 0",
            "p A 0",
            "p A 0 -1",
            "p A 0 x",
            "p _ 0 0",
            "p . 0 0",
            "pp 0 0 1",
            "m 0 0",
            "m 0 0 1",
            "m 0 0 1 1 =QQ",
            "x 1",
            "P A 0 0",
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(MoveParseError):
            parse_move(text)

    def test_fuzz_never_crashes(self):
        rng = random.Random(20_26)
        alphabet = string.printable + "\x00\xff"
        for _ in range(3000):
            text = "".join(
                rng.choice(alphabet) for _ in range(rng.randrange(0, 24))
            )
            try:
                parse_move(text)
            except MoveParseError:
                pass  # structured rejection is the contract


class TestFormatMove:
    def test_pass(self):
        assert format_move(PASS) == "x"

    def test_place(self):
        assert format_move(Place("V", (2, 1))) == "p V 2 1"

    def test_slide_promotion(self):
        assert format_move(Slide(((6, 0), (7, 0)), "q")) == "m 6 0 7 0 =q"


def random_move(rng: random.Random):
    kind = rng.randrange(4)
    coord = lambda: (rng.randrange(30), rng.randrange(30))
    if kind == 0:
        return PASS
    if kind == 1:
        return Place(rng.choice("AVKKQpnrb19Z"), coord())
    if kind == 2:
        return PlacePair(coord(), coord())
    waypoints = tuple(coord() for _ in range(rng.randrange(2, 6)))
    promo = rng.choice([None, "Q", "n"]) if len(waypoints) == 2 else None
    return Slide(waypoints, promo)


def test_move_round_trip_property():
    rng = random.Random(7)
    for _ in range(2000):
        move = random_move(rng)
        assert parse_move(format_move(move)) == move


def test_board_round_trip_property():
    rng = random.Random(11)
    for _ in range(300):
        rows = rng.randrange(1, 9)
        cols = rng.randrange(1, 9)
        chars = "_." + "AVkqZ19"
        text = "\n".join(
            "".join(rng.choice(chars) for _ in range(cols)) for _ in range(rows)
        )
        board = parse_layout(text, rows, cols)
        assert format_board(board) == text
        assert parse_layout(format_board(board), rows, cols) == board


def test_parse_layout_is_board_parse():
    with pytest.raises(BoardError):
        parse_layout("_ _ _\n_ _ _\n_ _ _", 3, 3)
    board = parse_layout("AV_\n___\n___", 3, 3)
    assert isinstance(board, Board)
    assert board.get((0, 0)) == "A"
    assert board.get((0, 1)) == "V"


def test_solitaire_cross_round_trips_byte_identical():
    text = "\n".join(
        [
            "..AAA..",
            "..AAA..",
            "AAAAAAA",
            "AAA_AAA",
            "AAAAAAA",
            "..AAA..",
            "..AAA..",
        ]
    )
    assert format_board(parse_layout(text, 7, 7)) == text
