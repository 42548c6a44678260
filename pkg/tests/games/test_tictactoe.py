import pytest

from gridgames import create_game, parse_move
from helpers import play_script


@pytest.fixture
def game():
    return create_game("tictactoe")


def test_initial_state(game):
    state = game.initial_state()
    assert state.round == 0
    assert state.current_player == 0
    assert state.board.layout() == "___\n___\n___"


def test_top_row_wins(game):
    state = play_script(game, ["p A 0 0", "p V 1 1", "p A 0 1", "p V 2 2", "p A 0 2"])
    assert game.game_finished(state)
    assert game.get_winner(state) == 0


def test_column_and_diagonal_wins(game):
    state = play_script(game, ["p A 0 0", "p V 0 1", "p A 1 0", "p V 1 1", "p A 2 0"])
    assert game.get_winner(state) == 0
    state = play_script(game, ["p A 0 0", "p V 0 1", "p A 1 1", "p V 0 2", "p A 2 2"])
    assert game.get_winner(state) == 0


def test_second_player_can_win(game):
    state = play_script(
        game, ["p A 0 0", "p V 1 0", "p A 0 1", "p V 1 1", "p A 2 2", "p V 1 2"]
    )
    assert game.game_finished(state)
    assert game.get_winner(state) == 1


def test_full_board_draws(game):
    state = play_script(
        game,
        [
            "p A 0 0", "p V 0 1", "p A 0 2", "p V 1 1", "p A 1 0",
            "p V 2 0", "p A 1 2", "p V 2 2", "p A 2 1",
        ],
    )
    assert game.game_finished(state)
    assert game.get_winner(state) is None


def test_rejections(game):
    state = game.initial_state()
    for text in ["p V 0 0", "p A 3 0", "p A 0 3", "x", "m 0 0 1 1", "pp 0 0 1 1"]:
        assert not game.validate_move(state, parse_move(text), 0), text
    # occupied cell
    state = game.apply_move(state, parse_move("p A 0 0"))
    assert not game.validate_move(state, parse_move("p V 0 0"), 1)
    # out of turn
    assert not game.validate_move(state, parse_move("p A 0 1"), 0)


def test_not_finished_mid_game(game):
    state = play_script(game, ["p A 0 0", "p V 1 1"])
    assert not game.game_finished(state)
    assert game.get_winner(state) is None
