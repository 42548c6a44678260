"""Shared test utilities: playout driving, snapshots, and independent
reference data used to cross-check tables inside the package."""

from __future__ import annotations

import copy
import random

from gridgames.game import Game, GameState
from gridgames.harness.perft import sample_grammar_move
from gridgames.notation import parse_move

# The 24-point mill board, written as a neighbour map (the package keeps
# an edge list; a transcription slip cannot hide in both shapes at once).
MORRIS_NEIGHBOURS = {
    (0, 0): {(0, 3), (3, 0)},
    (0, 3): {(0, 0), (0, 6), (1, 3)},
    (0, 6): {(0, 3), (3, 6)},
    (1, 1): {(1, 3), (3, 1)},
    (1, 3): {(1, 1), (1, 5), (0, 3), (2, 3)},
    (1, 5): {(1, 3), (3, 5)},
    (2, 2): {(2, 3), (3, 2)},
    (2, 3): {(2, 2), (2, 4), (1, 3)},
    (2, 4): {(2, 3), (3, 4)},
    (3, 0): {(0, 0), (6, 0), (3, 1)},
    (3, 1): {(3, 0), (3, 2), (1, 1), (5, 1)},
    (3, 2): {(3, 1), (2, 2), (4, 2)},
    (3, 4): {(2, 4), (4, 4), (3, 5)},
    (3, 5): {(3, 4), (3, 6), (1, 5), (5, 5)},
    (3, 6): {(3, 5), (0, 6), (6, 6)},
    (4, 2): {(3, 2), (4, 3)},
    (4, 3): {(4, 2), (4, 4), (5, 3)},
    (4, 4): {(4, 3), (3, 4)},
    (5, 1): {(3, 1), (5, 3)},
    (5, 3): {(5, 1), (5, 5), (4, 3), (6, 3)},
    (5, 5): {(5, 3), (3, 5)},
    (6, 0): {(3, 0), (6, 3)},
    (6, 3): {(6, 0), (6, 6), (5, 3)},
    (6, 6): {(6, 3), (3, 6)},
}


def snapshot(state: GameState) -> GameState:
    return copy.deepcopy(state)


def random_move(game: Game, state: GameState, rng: random.Random):
    """A uniform random legal move: quick rejection sampling over the
    grammar space, falling back to full enumeration."""
    from gridgames.harness.perft import sample_legal_move

    return sample_legal_move(game, state, rng, max_tries=64)


def random_playout(game: Game, rng: random.Random, max_plies: int = 400):
    """States visited by a random playout, ending at a terminal state or
    at the ply cap."""
    state = game.initial_state()
    states = [state]
    for _ in range(max_plies):
        if game.game_finished(state):
            break
        state = game.apply_move(state, random_move(game, state, rng))
        states.append(state)
    return states


def play_script(game: Game, texts):
    """Apply a list of move texts, asserting each one validates."""
    state = game.initial_state()
    for text in texts:
        move = parse_move(text)
        assert game.validate_move(state, move, state.current_player), text
        state = game.apply_move(state, move)
    return state
