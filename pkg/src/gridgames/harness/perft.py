"""Move-count oracles.

`perft` counts legal move sequences of an exact length using each
game's own legal_moves. `perft_by_validation` recounts them from the
other direction: it enumerates the raw move grammar over the board and
keeps what validate_move accepts, sharing none of the generator logic.
Agreement between the two is the standard evidence that a move
generator and a move validator implement the same rules.

The grammar space is bounded by facts that hold for every game and are
themselves covered by tests:

* void cells never appear in a move;
* a slide's first waypoint holds a piece of the moving player;
* slides are no longer than the game's declared max_slide_len;
* promotion tokens only ever use the game's promotion_symbols, and only
  on two-waypoint slides.
"""

from __future__ import annotations

import random
from typing import Iterator

from ..game import Game, GameState
from ..moves import Move, PASS, Place, PlacePair, Slide


def perft(game: Game, depth: int, state: GameState | None = None) -> int:
    """Legal move sequences of exactly `depth` moves, not expanding past
    terminal states."""
    if state is None:
        state = game.initial_state()
    if depth == 0:
        return 1
    if game.game_finished(state):
        return 0
    if depth == 1:
        return len(game.legal_moves(state))
    return sum(
        perft(game, depth - 1, game.apply_move(state, move))
        for move in game.legal_moves(state)
    )


def perft_by_validation(game: Game, depth: int, state: GameState | None = None) -> int:
    """perft recomputed by grammar enumeration + validate_move filtering."""
    if state is None:
        state = game.initial_state()
    if depth == 0:
        return 1
    if game.game_finished(state):
        return 0
    total = 0
    for move in legal_moves_by_validation(game, state):
        if depth == 1:
            total += 1
        else:
            total += perft_by_validation(game, depth - 1, game.apply_move(state, move))
    return total


def legal_moves_by_validation(game: Game, state: GameState) -> list[Move]:
    """The accept-set of validate_move over the bounded grammar space."""
    player = state.current_player
    validate = game.validate_move
    return [m for m in enumerate_grammar_moves(game, state) if validate(state, m, player)]


class GrammarSpace:
    """The bounded grammar space over one state: enumerable, indexable,
    and cheap to sample from repeatedly."""

    def __init__(self, game: Game, state: GameState):
        self.game = game
        self.state = state
        board = state.board
        self.cells = list(board.playable_coords())
        self.own_cells = [
            at
            for at in self.cells
            if game.piece_owner(board.get(at)) == state.current_player
        ]
        n = len(self.cells)
        own = len(self.own_cells)
        self.promo_mult = 1 + len(game.promotion_symbols)
        self.sizes = (
            1,
            len(game.piece_alphabet) * n,
            n * (n - 1),
            own * (n - 1) * self.promo_mult,
            own * (n - 1) * (n - 1) if game.max_slide_len >= 3 else 0,
        )
        self.total = sum(self.sizes)
        self._index = {at: i for i, at in enumerate(self.cells)}

    def __iter__(self) -> Iterator[Move]:
        game, cells, own_cells = self.game, self.cells, self.own_cells
        yield PASS
        for symbol in game.piece_alphabet:
            for at in cells:
                yield Place(symbol, at)
        for a in cells:
            for b in cells:
                if a != b:
                    yield PlacePair(a, b)
        promos = (None,) + tuple(game.promotion_symbols)
        for frm in own_cells:
            for w1 in cells:
                if w1 == frm:
                    continue
                for promo in promos:
                    yield Slide((frm, w1), promo)
        if game.max_slide_len >= 3:
            for frm in own_cells:
                for w1 in cells:
                    if w1 == frm:
                        continue
                    for w2 in cells:
                        if w2 != w1:
                            yield Slide((frm, w1, w2))

    def sample(self, rng: random.Random) -> Move:
        """Uniform draw over the space."""
        cells, sizes = self.cells, self.sizes
        n = len(cells)
        pick = rng.randrange(self.total)
        if pick < sizes[0]:
            return PASS
        pick -= sizes[0]
        if pick < sizes[1]:
            return Place(self.game.piece_alphabet[pick // n], cells[pick % n])
        pick -= sizes[1]
        if pick < sizes[2]:
            a = cells[pick // (n - 1)]
            return PlacePair(a, self._other(a, pick % (n - 1)))
        pick -= sizes[2]
        if pick < sizes[3]:
            per_from = (n - 1) * self.promo_mult
            frm = self.own_cells[pick // per_from]
            rest = pick % per_from
            w1 = self._other(frm, rest // self.promo_mult)
            promo_i = rest % self.promo_mult
            promo = None if promo_i == 0 else self.game.promotion_symbols[promo_i - 1]
            return Slide((frm, w1), promo)
        pick -= sizes[3]
        per_from = (n - 1) * (n - 1)
        frm = self.own_cells[pick // per_from]
        rest = pick % per_from
        w1 = self._other(frm, rest // (n - 1))
        w2 = self._other(w1, rest % (n - 1))
        return Slide((frm, w1, w2))

    def _other(self, excluded, index):
        """cells[index] counting with `excluded` skipped."""
        skip = self._index[excluded]
        return self.cells[index] if index < skip else self.cells[index + 1]


def enumerate_grammar_moves(game: Game, state: GameState) -> Iterator[Move]:
    """Every in-grammar move within the documented bounds, in a
    deterministic order."""
    return iter(GrammarSpace(game, state))


def sample_grammar_move(game: Game, state: GameState, rng: random.Random) -> Move:
    """Uniform draw from the bounded grammar space."""
    return GrammarSpace(game, state).sample(rng)


def sample_legal_move(
    game: Game, state: GameState, rng: random.Random, max_tries: int = 4000
) -> Move:
    """Uniform draw over legal moves via rejection sampling, falling
    back to full enumeration when acceptance is poor."""
    player = state.current_player
    space = GrammarSpace(game, state)
    validate = game.validate_move
    for _ in range(max_tries):
        move = space.sample(rng)
        if validate(state, move, player):
            return move
    moves = game.legal_moves(state)
    return moves[rng.randrange(len(moves))]


def sample_illegal_move(
    game: Game, state: GameState, rng: random.Random, max_tries: int = 200
) -> Move | None:
    """A grammar move validate_move rejects, if one turns up."""
    player = state.current_player
    space = GrammarSpace(game, state)
    for _ in range(max_tries):
        move = space.sample(rng)
        if not game.validate_move(state, move, player):
            return move
    return None
