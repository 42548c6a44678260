import pytest

from gridgames import Board, create_game, parse_move
from gridgames.games.unashogi import UnashogiState
from gridgames.moves import Slide
from helpers import play_script


@pytest.fixture
def game():
    return create_game("unashogi")


def test_initial_state(game):
    state = game.initial_state()
    assert state.board.find("K") == [(8, 4)]
    assert state.board.find("k") == [(0, 4)]
    assert state.hands == ((2, 2, 2, 2, 1, 1, 9),) * 2
    assert sum(state.hands[0]) == 19


def test_opening_move_count(game):
    # 7 droppable kinds x 79 empty cells + 5 king steps
    assert len(game.legal_moves(game.initial_state())) == 558


def test_drops_and_hand_bookkeeping(game):
    state = play_script(game, ["p G 4 4", "p g 0 0"])
    assert state.board.get((4, 4)) == "G"
    assert state.board.get((0, 0)) == "g"
    assert state.hands[0] == (1, 2, 2, 2, 1, 1, 9)
    assert state.hands[1] == (1, 2, 2, 2, 1, 1, 9)
    # a drop must name your own piece, in hand, on an empty cell
    assert not game.validate_move(state, parse_move("p g 5 5"), 0)
    assert not game.validate_move(state, parse_move("p K 5 5"), 0)
    assert not game.validate_move(state, parse_move("p G 0 0"), 0)


def test_gold_never_moves_diagonally_backward(game):
    state = play_script(game, ["p G 4 4", "p g 0 0"])
    reachable = {
        m.waypoints[1]
        for m in game.legal_moves(state)
        if isinstance(m, Slide) and m.waypoints[0] == (4, 4)
    }
    assert reachable == {(3, 3), (3, 4), (3, 5), (4, 3), (4, 5), (5, 4)}
    for bad in ["m 4 4 5 3", "m 4 4 5 5"]:
        assert not game.validate_move(state, parse_move(bad), 0), bad
    # mirrored for the south-moving player (the enemy gold on (4,4) is
    # capturable; the backward diagonals (3,4) and (3,6) are not moves)
    state = play_script(game, ["p G 4 4", "p g 4 5", "m 8 4 8 3"])
    reachable = {
        m.waypoints[1]
        for m in game.legal_moves(state)
        if isinstance(m, Slide) and m.waypoints[0] == (4, 5)
    }
    assert reachable == {(5, 4), (5, 5), (5, 6), (4, 4), (4, 6), (3, 5)}
    for bad in ["m 4 5 3 4", "m 4 5 3 6"]:
        assert not game.validate_move(state, parse_move(bad), 1), bad


def test_piece_movements(game):
    board = Board.blank(9, 9)
    board.place("K", (8, 4))
    board.place("k", (0, 4))
    for sym, at in [
        ("S", (6, 2)), ("N", (6, 6)), ("L", (7, 1)), ("R", (4, 0)),
        ("B", (5, 5)), ("P", (3, 3)),
    ]:
        board.place(sym, at)
    state = UnashogiState(board, 10, 0, ((0, 0, 0, 0, 0, 0, 0), (2, 2, 2, 2, 1, 1, 9)))
    # silver: forward + diagonals, never sideways or straight back
    assert game.validate_move(state, parse_move("m 6 2 5 2"), 0)
    assert game.validate_move(state, parse_move("m 6 2 7 3"), 0)
    assert not game.validate_move(state, parse_move("m 6 2 6 1"), 0)
    assert not game.validate_move(state, parse_move("m 6 2 7 2"), 0)
    # knight jumps two forward one across, nothing else
    assert game.validate_move(state, parse_move("m 6 6 4 5"), 0)
    assert game.validate_move(state, parse_move("m 6 6 4 7"), 0)
    assert not game.validate_move(state, parse_move("m 6 6 5 6"), 0)
    # lance slides straight ahead only
    assert game.validate_move(state, parse_move("m 7 1 2 1"), 0)
    assert not game.validate_move(state, parse_move("m 7 1 7 2"), 0)
    # rook slides orthogonally, bishop diagonally
    assert game.validate_move(state, parse_move("m 4 0 4 4"), 0)
    assert not game.validate_move(state, parse_move("m 4 0 3 1"), 0)
    assert game.validate_move(state, parse_move("m 5 5 8 2"), 0)
    assert not game.validate_move(state, parse_move("m 5 5 5 8"), 0)
    # pawn one step forward
    assert game.validate_move(state, parse_move("m 3 3 2 3"), 0)
    assert not game.validate_move(state, parse_move("m 3 3 4 3"), 0)
    assert not game.validate_move(state, parse_move("m 3 3 2 4"), 0)


def test_sliders_blocked_by_pieces(game):
    state = play_script(game, ["p R 4 4", "p p 4 6"])
    # rook can reach and capture the pawn but not pass through it
    assert game.validate_move(state, parse_move("m 4 4 4 6"), 0)
    assert not game.validate_move(state, parse_move("m 4 4 4 7"), 0)


def test_capture_joins_hand(game):
    state = play_script(game, ["p R 4 4", "p p 4 6", "m 4 4 4 6"])
    assert state.hands[0][6] == 10  # nine own pawns plus the prize
    assert state.board.get((4, 6)) == "R"


def test_capturing_king_wins(game):
    state = play_script(game, ["p R 4 4", "p p 8 0", "m 4 4 0 4"])
    assert state.board.find("k") == []
    assert game.game_finished(state)
    assert game.get_winner(state) == 0


def test_cannot_capture_own_piece(game):
    state = play_script(game, ["p G 7 4", "p g 0 0"])
    assert not game.validate_move(state, parse_move("m 8 4 7 4"), 0)
