"""Compliance reports.

Discrepancies found while replaying a trace or diffing two candidates
are filed under exactly one of seven categories:

    crash      — the candidate died, timed out, or stopped answering
    api        — the candidate broke the protocol or the game contract
    move       — a move accepted/rejected against expectation
    ending     — terminal status or winner wrong
    effect     — board wrong after play began (side effects misresolved)
    board      — board wrong before any move (bad initial setup)
    turn_order — round counter or player-to-move wrong

Flags are binary per category; raw evidence is kept for diagnostics.
A report is `perfect` with no flags, `unplayable` when a crash or api
failure cut the run short, and `erroneous` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

CATEGORIES = ("crash", "api", "move", "ending", "effect", "board", "turn_order")

PERFECT = "perfect"
ERRONEOUS = "erroneous"
UNPLAYABLE = "unplayable"


@dataclass(frozen=True)
class Evidence:
    step: int
    expected: str
    observed: str


@dataclass
class ComplianceReport:
    game_id: str
    subject: str  # trace description or diff summary
    evidence: dict[str, list[Evidence]] = field(
        default_factory=lambda: {c: [] for c in CATEGORIES}
    )
    completed: bool = True

    def record(self, category: str, step: int, expected: str, observed: str) -> None:
        if category not in CATEGORIES:
            raise ValueError(f"unknown category {category!r}")
        self.evidence[category].append(Evidence(step, expected, observed))

    def flag(self, category: str) -> bool:
        return bool(self.evidence[category])

    @property
    def flags(self) -> dict[str, bool]:
        return {c: self.flag(c) for c in CATEGORIES}

    @property
    def discrepancy_count(self) -> int:
        return sum(len(v) for v in self.evidence.values())

    @property
    def verdict(self) -> str:
        if self.discrepancy_count == 0:
            return PERFECT
        if (self.flag("crash") or self.flag("api")) and not self.completed:
            return UNPLAYABLE
        return ERRONEOUS

    def to_dict(self) -> dict:
        return {
            "game": self.game_id,
            "subject": self.subject,
            "verdict": self.verdict,
            "completed": self.completed,
            "discrepancy_count": self.discrepancy_count,
            "categories": [
                {
                    "category": c,
                    "flag": self.flag(c),
                    "evidence": [
                        {"step": e.step, "expected": e.expected, "observed": e.observed}
                        for e in self.evidence[c]
                    ],
                }
                for c in CATEGORIES
            ],
        }

    def summary(self) -> str:
        lines = [f"{self.game_id}: {self.subject}", f"verdict: {self.verdict}"]
        width = max(len(c) for c in CATEGORIES)
        for c in CATEGORIES:
            mark = "X" if self.flag(c) else "-"
            lines.append(f"  {c.ljust(width)}  {mark}  ({len(self.evidence[c])})")
        return "\n".join(lines)


def merge_reports(game_id: str, subject: str, reports: list[ComplianceReport]) -> ComplianceReport:
    """Roll per-trace reports up into one binary-flag report."""
    merged = ComplianceReport(game_id, subject)
    merged.completed = all(r.completed for r in reports) if reports else True
    for r in reports:
        for c in CATEGORIES:
            merged.evidence[c].extend(r.evidence[c])
    return merged
