"""Frozen perft anchors.

Chess and checkers values match long-published tables; the rest were
computed with the grammar-enumeration oracle (perft_by_validation) and
frozen. Full engine-vs-oracle agreement at depth runs in the acceptance
suite; this module pins the numbers so a regression is caught cheaply.
"""

import pytest

from gridgames import create_game
from gridgames.harness import perft

ANCHORS = {
    "tictactoe": (9, 72, 504),
    "pegsolitaire": (4, 12, 60),
    "reversi": (4, 12, 56),
    "morris": (24, 552, 12_144),
    "checkers": (7, 49, 302),
    "chess": (20, 400, 8_902),
    "ardri": (24, 184, 4_144),
    "domineering": (56, 2_940, 146_580),
    "tron": (4, 16, 44),
    "amazons": (2_176,),
    "kharebga": (552, 255_024),
    "unashogi": (558, 307_493),
}


def test_every_game_has_anchors():
    from gridgames import game_ids

    assert set(ANCHORS) == set(game_ids())


@pytest.mark.parametrize("gid", sorted(ANCHORS))
def test_perft_anchors(gid):
    game = create_game(gid)
    for depth, expected in enumerate(ANCHORS[gid], start=1):
        assert perft(game, depth) == expected, f"{gid} depth {depth}"


def test_depth_zero_is_one():
    assert perft(create_game("tictactoe"), 0) == 1


def test_perft_stops_at_terminal_states():
    # tictactoe has no 10-move sequences: the board fills at nine
    assert perft(create_game("tictactoe"), 10) == 0
