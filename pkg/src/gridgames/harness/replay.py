"""Trace replay and trace-suite aggregation."""

from __future__ import annotations

from pathlib import Path
from typing import Callable

from ..board import BoardError
from .endpoints import CandidateEndpoint, CandidateFailure, Snapshot, connect
from .report import ComplianceReport, merge_reports
from .traces import (
    CellAssert,
    InputStep,
    StateAssert,
    TerminalAssert,
    Trace,
    TraceError,
    load_trace,
)


def replay_trace(trace: Trace, candidate: CandidateEndpoint) -> ComplianceReport:
    """Run every step of a trace against a candidate and file each
    discrepancy under its error category.

    Board-cell mismatches are a `board` error while the candidate still
    reports round 0 (bad setup) and an `effect` error afterwards.
    """
    report = ComplianceReport(trace.game_id, trace.description or "trace")
    session = None
    index = 0
    try:
        session = connect(candidate)
        snapshot = session.start()
        for index, step in enumerate(trace.steps):
            if isinstance(step, InputStep):
                accepted, new_snapshot = session.send_move(step.player, step.text)
                if new_snapshot is not None:
                    snapshot = new_snapshot
                if accepted != step.expect_valid:
                    report.record(
                        "move",
                        index,
                        "valid" if step.expect_valid else "invalid",
                        "valid" if accepted else "invalid",
                    )
            elif isinstance(step, CellAssert):
                observed = _cell(snapshot, step.at)
                if observed != step.expected:
                    category = "board" if snapshot.round == 0 else "effect"
                    report.record(
                        category,
                        index,
                        f"cell {step.at} = {step.expected!r}",
                        f"cell {step.at} = {observed!r}",
                    )
            elif isinstance(step, StateAssert):
                if (snapshot.round, snapshot.current_player) != (
                    step.round,
                    step.current_player,
                ):
                    report.record(
                        "turn_order",
                        index,
                        f"round {step.round}, player {step.current_player}",
                        f"round {snapshot.round}, player {snapshot.current_player}",
                    )
            elif isinstance(step, TerminalAssert):
                observed = (snapshot.terminal, snapshot.winner)
                expected = (step.terminal, step.winner)
                mismatch = (
                    observed[0] != expected[0]
                    or (step.terminal and observed[1] != expected[1])
                )
                if mismatch:
                    report.record(
                        "ending",
                        index,
                        _terminal_text(*expected),
                        _terminal_text(*observed),
                    )
    except CandidateFailure as failure:
        report.record(failure.category, index, "healthy candidate", failure.detail)
        report.completed = False
    finally:
        if session is not None:
            session.close()
    return report


def _cell(snapshot: Snapshot, at) -> str:
    try:
        return snapshot.board.get(at)
    except BoardError:
        return "?"


def _terminal_text(terminal: bool, winner) -> str:
    if not terminal:
        return "ongoing"
    return f"terminal, winner {winner if winner is not None else 'none'}"


def run_suite(
    directory: str | Path,
    candidate_for: Callable[[str], CandidateEndpoint],
    game_filter: str | None = None,
) -> tuple[ComplianceReport, list[ComplianceReport]]:
    """Replay every ``*.trace`` file in a directory.

    `candidate_for(game_id)` supplies a fresh endpoint per trace; a
    candidate session is never shared between traces. Returns the
    rolled-up report plus the per-trace reports. Unreadable files are
    reported (as api-category evidence on a synthetic report) without
    stopping the suite.
    """
    directory = Path(directory)
    paths = sorted(directory.glob("*.trace"))
    if game_filter is not None:
        kept = []
        for path in paths:
            try:
                if load_trace(path).game_id == game_filter:
                    kept.append(path)
            except TraceError:
                kept.append(path)
        paths = kept
    if not paths:
        raise FileNotFoundError(f"no trace files in {directory}")
    reports = []
    for path in paths:
        try:
            trace = load_trace(path)
        except (TraceError, OSError) as exc:
            broken = ComplianceReport("unknown", path.name)
            broken.record("api", 0, "readable trace file", str(exc))
            broken.completed = False
            reports.append(broken)
            continue
        reports.append(replay_trace(trace, candidate_for(trace.game_id)))
    merged = merge_reports(
        game_filter or "suite", f"{len(paths)} traces from {directory}", reports
    )
    return merged, reports
