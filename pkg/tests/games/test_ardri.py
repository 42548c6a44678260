import pytest

from gridgames import Board, create_game, parse_move
from gridgames.game import GameState


@pytest.fixture
def game():
    return create_game("ardri")


def state_from(rows, player=0, round=10):
    return GameState(Board.from_layout(7, 7, "\n".join(rows)), round, player)


def test_initial_setup(game):
    board = game.initial_state().board
    assert board.count("A") == 16
    assert board.count("v") == 8
    assert board.get((3, 3)) == "k"
    # defenders fill the centre block
    for r in range(2, 5):
        for c in range(2, 5):
            expected = "k" if (r, c) == (3, 3) else "v"
            assert board.get((r, c)) == expected


def test_all_pieces_step_one_orthogonal(game):
    state = game.initial_state()
    assert game.validate_move(state, parse_move("m 0 2 0 1"), 0)
    # two-cell slides and diagonal steps are out
    assert not game.validate_move(state, parse_move("m 0 2 0 0"), 0)
    assert not game.validate_move(state, parse_move("m 1 3 2 2"), 0)


def test_only_king_enters_corners(game):
    state = state_from(
        [
            "_A_____",
            "_______",
            "____k__",
            "_______",
            "_______",
            "_______",
            "_v____A",
        ],
        player=0,
    )
    assert not game.validate_move(state, parse_move("m 0 1 0 0"), 0)
    state = state_from(
        [
            "_k_____",
            "_______",
            "____A__",
            "_______",
            "_______",
            "_______",
            "_v_____",
        ],
        player=1,
    )
    assert game.validate_move(state, parse_move("m 0 1 0 0"), 1)
    assert not game.validate_move(state, parse_move("m 6 1 6 0"), 1)


def test_custodial_capture_on_move(game):
    state = state_from(
        [
            "_______",
            "_______",
            "_A_____",
            "_______",
            "_v_____",
            "_A_____",
            "____k__",
        ],
        player=0,
    )
    state = game.apply_move(state, parse_move("m 2 1 3 1"))
    assert state.board.get((4, 1)) == "_"  # flanked defender removed


def test_moving_between_enemies_is_safe(game):
    state = state_from(
        [
            "_______",
            "_______",
            "_v_____",
            "A_A____",
            "_______",
            "____k__",
            "______A",
        ],
        player=1,
    )
    # the defender walks straight into the gap between two attackers
    state = game.apply_move(state, parse_move("m 2 1 3 1"))
    assert state.board.get((3, 1)) == "v"  # capture needs the mover's move


def test_king_helps_capture(game):
    state = state_from(
        [
            "_______",
            "_______",
            "__k____",
            "__A____",
            "_______",
            "__v____",
            "_______",
        ],
        player=1,
    )
    state = game.apply_move(state, parse_move("m 5 2 4 2"))
    assert state.board.get((3, 2)) == "_"  # attacker flanked king/defender


def test_king_not_captured_custodially(game):
    state = state_from(
        [
            "_______",
            "_______",
            "__A____",
            "__k____",
            "_______",
            "__A____",
            "____v__",
        ],
        player=0,
    )
    state = game.apply_move(state, parse_move("m 5 2 4 2"))
    assert state.board.get((3, 2)) == "k"  # still standing
    assert not game.game_finished(state)


def test_attackers_win_by_full_surround(game):
    state = state_from(
        [
            "_______",
            "_______",
            "__A____",
            "_Ak_A__",
            "__A____",
            "_______",
            "______v",
        ],
        player=0,
    )
    # king at (3,2) surrounded except east; attacker closes the box
    state = game.apply_move(state, parse_move("m 3 4 3 3"))
    assert game.game_finished(state)
    assert game.get_winner(state) == 0


def test_edge_does_not_substitute_for_attacker(game):
    state = state_from(
        [
            "__k____",
            "_A_A___",
            "__A____",
            "_______",
            "_______",
            "_______",
            "______v",
        ],
        player=0,
    )
    # king on the top edge with attackers on the three other sides
    assert not game.game_finished(state)


def test_king_reaches_corner_wins(game):
    state = state_from(
        [
            "_k_____",
            "_______",
            "____A__",
            "_______",
            "_______",
            "_______",
            "_v_____",
        ],
        player=1,
    )
    state = game.apply_move(state, parse_move("m 0 1 0 0"))
    assert game.game_finished(state)
    assert game.get_winner(state) == 1


def test_stuck_player_loses(game):
    state = state_from(
        [
            "_Av____",
            "AAv____",
            "vv_____",
            "_______",
            "____k__",
            "_______",
            "_______",
        ],
        player=0,
    )
    # all three attackers are packed against the corner and the
    # defenders; corner (0,0) is barred to them
    assert game.game_finished(state)
    assert game.get_winner(state) == 1
