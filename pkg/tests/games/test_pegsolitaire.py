import pytest

from gridgames import Board, create_game, parse_move
from gridgames.game import GameState


@pytest.fixture
def game():
    return create_game("pegsolitaire")


def test_initial_cross(game):
    board = game.initial_state().board
    assert board.count("A") == 32
    assert len(list(board.playable_coords())) == 33
    assert board.get((3, 3)) == "_"
    assert board.get((0, 0)) == "."


def test_four_symmetric_first_jumps(game):
    state = game.initial_state()
    moves = {m.waypoints for m in game.legal_moves(state)}
    assert moves == {
        ((1, 3), (3, 3)),
        ((5, 3), (3, 3)),
        ((3, 1), (3, 3)),
        ((3, 5), (3, 3)),
    }


def test_jump_removes_jumped_peg(game):
    state = game.initial_state()
    state = game.apply_move(state, parse_move("m 1 3 3 3"))
    assert state.board.get((1, 3)) == "_"
    assert state.board.get((2, 3)) == "_"
    assert state.board.get((3, 3)) == "A"
    assert state.board.count("A") == 31


def test_peg_count_decreases_by_one_per_move(game):
    import random

    from helpers import random_playout

    states = random_playout(game, random.Random(3), max_plies=40)
    for before, after in zip(states, states[1:]):
        assert after.board.count("A") == before.board.count("A") - 1


def test_rejections(game):
    state = game.initial_state()
    for text in [
        "m 3 1 3 2",  # single step, not a jump
        "m 3 3 3 5",  # from an empty cell
        "m 2 3 4 3",  # onto an occupied cell
        "m 0 2 0 0",  # onto void
        "m 1 2 1 4",  # jump over... (1,3) peg but target (1,4) occupied
        "p A 3 3",
        "x",
    ]:
        assert not game.validate_move(state, parse_move(text), 0), text


def test_win_iff_single_peg(game):
    board = Board.from_layout(7, 7, "..___..\n..___..\n_______\n___A___\n_______\n..___..\n..___..")
    state = GameState(board, 30, 0)
    assert game.game_finished(state)
    assert game.get_winner(state) == 0

    board = Board.from_layout(7, 7, "..___..\n..___..\n_A_____\n_______\n_A_____\n..___..\n..___..")
    state = GameState(board, 29, 0)
    assert game.game_finished(state)  # two pegs, no jump available
    assert game.get_winner(state) is None
