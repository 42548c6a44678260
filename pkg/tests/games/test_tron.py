import random

import pytest

from gridgames import Board, create_game, parse_move
from gridgames.game import GameState
from helpers import random_playout


@pytest.fixture
def game():
    return create_game("tron")


def test_initial_heads(game):
    board = game.initial_state().board
    assert board.find("A") == [(4, 1)]
    assert board.find("V") == [(5, 8)]
    assert board.count("1") == 0


def test_vacated_cell_becomes_wall(game):
    state = game.apply_move(game.initial_state(), parse_move("m 4 1 4 2"))
    assert state.board.get((4, 1)) == "1"
    assert state.board.get((4, 2)) == "A"


def test_walls_are_permanent_and_grow(game):
    rng = random.Random(9)
    states = random_playout(game, rng, max_plies=60)
    for before, after in zip(states, states[1:]):
        assert after.board.count("1") == before.board.count("1") + 1
        # walls never vanish
        for at in before.board.coords():
            if before.board.get(at) == "1":
                assert after.board.get(at) == "1"


def test_rejections(game):
    state = game.initial_state()
    for text in [
        "m 4 1 5 2",   # diagonal
        "m 4 1 4 3",   # two cells
        "m 5 8 5 7",   # opponent's head
        "p A 0 0",
        "x",
    ]:
        assert not game.validate_move(state, parse_move(text), 0), text
    # cannot step onto a wall or the other head
    walled = game.apply_move(state, parse_move("m 4 1 4 2"))
    walled = game.apply_move(walled, parse_move("m 5 8 4 8"))
    assert not game.validate_move(walled, parse_move("m 4 2 4 1"), 0)


def test_boxed_in_head_loses(game):
    board = Board.from_layout(
        10,
        10,
        "\n".join(
            [
                "A1________",
                "11________",
                "__________",
                "__________",
                "__________",
                "__________",
                "__________",
                "__________",
                "__________",
                "_________V",
            ]
        ),
    )
    state = GameState(board, 12, 0)
    assert game.game_finished(state)
    assert game.get_winner(state) == 1
