"""Machine players: uniform random and flat Monte Carlo.

Both are deterministic for a given seed. The flat MC agent spreads its
playout budget evenly over the legal moves, scores each playout 1 for a
win, 1/2 for a draw or a playout cut off at the length cap, 0 for a
loss, and picks the best mean; ties go to the smallest move text. The
per-move playout streams are split deterministically from the decision
seed (substream i belongs to legal move i), so a parallel evaluation
would reproduce the sequential one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .game import Game, GameResult, GameState, MoveSource, run_game_loop
from .games import create_game
from .moves import Move
from .notation import format_move

_SPLIT = 0x9E37_79B9_7F4A_7C15


@dataclass(frozen=True)
class AgentConfig:
    kind: str  # "random" | "flat_mc"
    seed: int = 0
    playout_budget: int = 1000
    max_playout_length: int = 400

    def build(self) -> "Agent":
        if self.kind == "random":
            return RandomAgent(self.seed)
        if self.kind == "flat_mc":
            return FlatMonteCarloAgent(
                self.seed, self.playout_budget, self.max_playout_length
            )
        raise ValueError(f"unknown agent kind {self.kind!r}")


class Agent:
    def select_move(self, game: Game, state: GameState) -> Move:
        raise NotImplementedError


class RandomAgent(Agent):
    """Uniform choice among the legal moves."""

    def __init__(self, seed: int = 0):
        self._rng = random.Random(seed)

    def select_move(self, game: Game, state: GameState) -> Move:
        moves = game.legal_moves(state)
        if not moves:
            raise RuntimeError(f"{game.game_id}: no legal move to choose from")
        return moves[self._rng.randrange(len(moves))]


class FlatMonteCarloAgent(Agent):
    """Flat Monte Carlo: equal playout budget per legal move, no tree."""

    def __init__(self, seed: int = 0, budget: int = 1000, max_playout_length: int = 400):
        if budget < 1:
            raise ValueError("playout budget must be positive")
        self._rng = random.Random(seed)
        self.budget = budget
        self.max_playout_length = max_playout_length

    def select_move(self, game: Game, state: GameState) -> Move:
        moves = game.legal_moves(state)
        if not moves:
            raise RuntimeError(f"{game.game_id}: no legal move to choose from")
        if len(moves) == 1:
            return moves[0]
        per_move = max(1, self.budget // len(moves))
        mover = state.current_player
        decision_seed = self._rng.getrandbits(63)
        best_score = -1.0
        best_move = None
        best_text = ""
        for index, move in enumerate(moves):
            rng = random.Random((decision_seed + index * _SPLIT) & (2**63 - 1))
            successor = game.apply_move(state, move)
            total = sum(
                self._playout(game, successor, mover, rng) for _ in range(per_move)
            )
            score = total / per_move
            text = format_move(move)
            if score > best_score or (score == best_score and text < best_text):
                best_score, best_move, best_text = score, move, text
        return best_move

    def _playout(self, game: Game, state: GameState, mover: int, rng) -> float:
        for _ in range(self.max_playout_length):
            if game.game_finished(state):
                winner = game.get_winner(state)
                if winner is None:
                    return 0.5
                return 1.0 if winner == mover else 0.0
            moves = game.legal_moves(state)
            state = game.apply_move(state, moves[rng.randrange(len(moves))])
        return 0.5  # cut off: scored as a draw


class AgentSource(MoveSource):
    """Adapter: an agent as a loop move source, emitting move text."""

    def __init__(self, agent: Agent):
        self.agent = agent

    def next_move(self, game: Game, state: GameState) -> str:
        move = self.agent.select_move(game, state)
        assert game.validate_move(state, move, state.current_player), (
            f"{game.game_id}: agent emitted illegal move {move!r}"
        )
        return format_move(move)


def play_match(
    game: Game | str,
    agents: list[Agent],
    max_moves: int = 10_000,
    out=None,
) -> GameResult:
    """Run a full agent-vs-agent game through the standard loop."""
    if isinstance(game, str):
        game = create_game(game)
    sources = [AgentSource(agent) for agent in agents]
    return run_game_loop(game, sources, out=out, max_moves=max_moves)


def parse_agent_token(token: str) -> AgentConfig:
    """CLI agent specs: ``r:<seed>`` or ``mc:<seed>:<budget>``."""
    fields = token.split(":")
    if fields[0] == "r" and len(fields) == 2:
        return AgentConfig("random", seed=int(fields[1]))
    if fields[0] == "mc" and len(fields) in (3, 4):
        budget = int(fields[2])
        config = AgentConfig("flat_mc", seed=int(fields[1]), playout_budget=budget)
        if len(fields) == 4:
            config = AgentConfig(
                "flat_mc",
                seed=int(fields[1]),
                playout_budget=budget,
                max_playout_length=int(fields[3]),
            )
        return config
    raise ValueError(f"bad agent spec {token!r}")
