"""Rule-compliance harness: perft oracles, trace replay, and
differential testing of candidate implementations."""

from .diff import HarnessError, diff_candidates, self_check
from .endpoints import (
    CandidateEndpoint,
    CandidateFailure,
    External,
    InProcess,
    Snapshot,
)
from .perft import (
    enumerate_grammar_moves,
    legal_moves_by_validation,
    perft,
    perft_by_validation,
    sample_grammar_move,
    sample_illegal_move,
    sample_legal_move,
)
from .replay import replay_trace, run_suite
from .report import (
    CATEGORIES,
    ComplianceReport,
    ERRONEOUS,
    Evidence,
    PERFECT,
    UNPLAYABLE,
    merge_reports,
)
from .traces import (
    CellAssert,
    InputStep,
    StateAssert,
    TerminalAssert,
    Trace,
    TraceError,
    format_trace,
    load_trace,
    parse_trace,
)

__all__ = [
    "CATEGORIES",
    "CandidateEndpoint",
    "CandidateFailure",
    "CellAssert",
    "ComplianceReport",
    "ERRONEOUS",
    "Evidence",
    "External",
    "HarnessError",
    "InProcess",
    "InputStep",
    "PERFECT",
    "Snapshot",
    "StateAssert",
    "TerminalAssert",
    "Trace",
    "TraceError",
    "UNPLAYABLE",
    "diff_candidates",
    "enumerate_grammar_moves",
    "format_trace",
    "legal_moves_by_validation",
    "load_trace",
    "merge_reports",
    "parse_trace",
    "perft",
    "perft_by_validation",
    "replay_trace",
    "run_suite",
    "sample_grammar_move",
    "sample_illegal_move",
    "sample_legal_move",
    "self_check",
]
