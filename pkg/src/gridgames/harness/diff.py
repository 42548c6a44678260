"""Differential testing: drive a reference and a candidate with the
same pseudo-random move stream and categorize the first divergence.

The stream mixes legal moves with deliberately illegal probes; legality
is decided by the reference's answers. An in-process copy of the
registry game proposes the moves, so the reference endpoint may itself
be external as long as it implements the same ruleset.
"""

from __future__ import annotations

import random
from typing import Sequence

from ..games import create_game
from ..notation import format_move, parse_move
from .endpoints import CandidateEndpoint, CandidateFailure, Snapshot, connect
from .perft import sample_illegal_move, sample_legal_move
from .report import ComplianceReport


class HarnessError(RuntimeError):
    """The reference itself failed; the comparison is void."""


def diff_candidates(
    game_id: str,
    reference: CandidateEndpoint,
    candidate: CandidateEndpoint,
    seeds: Sequence[int],
    max_moves: int = 120,
    probe_rate: float = 0.25,
) -> ComplianceReport:
    """Compare two endpoints over seeded random games.

    Each seed drives one fresh pair of sessions until the game ends,
    `max_moves` accepted moves have been played, or the candidate
    diverges; the first divergence per seed is recorded. Binary flags
    accumulate across seeds.
    """
    report = ComplianceReport(game_id, f"differential, seeds {list(seeds)}")
    for seed in seeds:
        _diff_one_seed(game_id, reference, candidate, seed, max_moves, probe_rate, report)
    return report


def _diff_one_seed(
    game_id, reference, candidate, seed, max_moves, probe_rate, report
) -> None:
    rng = random.Random(seed)
    proposer = create_game(game_id)
    ref_session = cand_session = None
    step = 0
    try:
        try:
            ref_session = connect(reference)
            ref_snapshot = ref_session.start()
        except CandidateFailure as exc:
            raise HarnessError(f"reference failed to start: {exc.detail}") from exc
        try:
            cand_session = connect(candidate)
            cand_snapshot = cand_session.start()
        except CandidateFailure as failure:
            report.record(failure.category, 0, "healthy candidate", failure.detail)
            report.completed = False
            return

        state = proposer.initial_state()
        if _compare(report, 0, ref_snapshot, cand_snapshot):
            return
        accepted_moves = 0
        while accepted_moves < max_moves and not ref_snapshot.terminal:
            step += 1
            probe = rng.random() < probe_rate
            if probe:
                move = sample_illegal_move(proposer, state, rng)
                if move is None:
                    probe = False
            if not probe:
                move = sample_legal_move(proposer, state, rng)
            text = format_move(move)
            player = state.current_player

            try:
                ref_accepted, ref_new = ref_session.send_move(player, text)
            except CandidateFailure as exc:
                raise HarnessError(f"reference died mid-run: {exc.detail}") from exc
            if ref_accepted != (not probe):
                raise HarnessError(
                    f"reference disagrees with the registry rules on {text!r}; "
                    "cannot keep proposing moves"
                )
            try:
                cand_accepted, cand_new = cand_session.send_move(player, text)
            except CandidateFailure as failure:
                report.record(failure.category, step, "healthy candidate", failure.detail)
                report.completed = False
                return

            if cand_accepted != ref_accepted:
                report.record(
                    "move",
                    step,
                    f"{'valid' if ref_accepted else 'invalid'}: {text}",
                    "valid" if cand_accepted else "invalid",
                )
                return
            if ref_accepted:
                accepted_moves += 1
                state = proposer.apply_move(state, parse_move(text))
                ref_snapshot = ref_new
                cand_snapshot = cand_new
                if _compare(report, step, ref_snapshot, cand_snapshot):
                    return
    finally:
        if ref_session is not None:
            ref_session.close()
        if cand_session is not None:
            cand_session.close()


def _compare(report: ComplianceReport, step: int, ref: Snapshot, cand: Snapshot) -> bool:
    """Record the first difference between two snapshots. True if any."""
    if cand.board != ref.board:
        category = "board" if ref.round == 0 else "effect"
        report.record(category, step, f"board\n{ref.board.layout()}", f"board\n{cand.board.layout()}")
        return True
    if (cand.round, cand.current_player) != (ref.round, ref.current_player):
        report.record(
            "turn_order",
            step,
            f"round {ref.round}, player {ref.current_player}",
            f"round {cand.round}, player {cand.current_player}",
        )
        return True
    if (cand.terminal, cand.winner) != (ref.terminal, ref.winner):
        report.record(
            "ending",
            step,
            f"terminal={ref.terminal}, winner={ref.winner}",
            f"terminal={cand.terminal}, winner={cand.winner}",
        )
        return True
    return False


def self_check(game_id: str, seeds: Sequence[int], max_moves: int = 120) -> ComplianceReport:
    """Reference against itself; anything but `perfect` is a bug."""
    from .endpoints import InProcess

    return diff_candidates(
        game_id,
        InProcess(create_game(game_id)),
        InProcess(create_game(game_id)),
        seeds,
        max_moves,
    )
