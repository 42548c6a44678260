"""Trace files: scripted game sessions with expectations.

A trace is line-delimited text. The first meaningful line is the
header; each following line is one step. Blank lines and ``#`` comments
are skipped.

    game <game_id> <free-text description>
    input <player> <valid|invalid> <move text>
    cell <r> <c> <expected cell character>
    state <round> <current_player>
    terminal <true|false> <winner: id|none|->

`input` plays a move and checks the candidate's accept/reject against
the expectation; `cell` asserts one board cell; `state` asserts the
round counter and player to move; `terminal` asserts the terminal flag
and (when true) the winner. At most one ``terminal true`` step is
allowed and nothing may follow it.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


class TraceError(ValueError):
    """Malformed trace file."""


@dataclass(frozen=True)
class InputStep:
    player: int
    text: str
    expect_valid: bool


@dataclass(frozen=True)
class CellAssert:
    at: tuple[int, int]
    expected: str


@dataclass(frozen=True)
class StateAssert:
    round: int
    current_player: int


@dataclass(frozen=True)
class TerminalAssert:
    terminal: bool
    winner: int | None


Step = InputStep | CellAssert | StateAssert | TerminalAssert


@dataclass(frozen=True)
class Trace:
    game_id: str
    description: str
    steps: tuple[Step, ...]


def parse_trace(text: str) -> Trace:
    game_id = None
    description = ""
    steps: list[Step] = []
    ended = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if game_id is None:
            if kind != "game" or len(fields) < 2:
                raise TraceError(f"line {lineno}: expected 'game <id> <description>'")
            game_id = fields[1]
            description = " ".join(fields[2:])
            continue
        if ended:
            raise TraceError(f"line {lineno}: steps after 'terminal true'")
        if kind == "input":
            if len(fields) < 4 or fields[2] not in ("valid", "invalid"):
                raise TraceError(f"line {lineno}: expected 'input <player> <valid|invalid> <move>'")
            steps.append(
                InputStep(_int(fields[1], lineno), " ".join(fields[3:]), fields[2] == "valid")
            )
        elif kind == "cell":
            if len(fields) != 4 or len(fields[3]) != 1:
                raise TraceError(f"line {lineno}: expected 'cell <r> <c> <char>'")
            steps.append(CellAssert((_int(fields[1], lineno), _int(fields[2], lineno)), fields[3]))
        elif kind == "state":
            if len(fields) != 3:
                raise TraceError(f"line {lineno}: expected 'state <round> <player>'")
            steps.append(StateAssert(_int(fields[1], lineno), _int(fields[2], lineno)))
        elif kind == "terminal":
            if len(fields) != 3 or fields[1] not in ("true", "false"):
                raise TraceError(f"line {lineno}: expected 'terminal <true|false> <winner>'")
            terminal = fields[1] == "true"
            winner = None if fields[2] in ("none", "-") else _int(fields[2], lineno)
            steps.append(TerminalAssert(terminal, winner))
            if terminal:
                ended = True
        else:
            raise TraceError(f"line {lineno}: unknown step {kind!r}")
    if game_id is None:
        raise TraceError("empty trace: missing 'game' header")
    return Trace(game_id, description, tuple(steps))


def load_trace(path: str | Path) -> Trace:
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def format_trace(trace: Trace) -> str:
    lines = [f"game {trace.game_id} {trace.description}".rstrip()]
    for step in trace.steps:
        if isinstance(step, InputStep):
            word = "valid" if step.expect_valid else "invalid"
            lines.append(f"input {step.player} {word} {step.text}")
        elif isinstance(step, CellAssert):
            lines.append(f"cell {step.at[0]} {step.at[1]} {step.expected}")
        elif isinstance(step, StateAssert):
            lines.append(f"state {step.round} {step.current_player}")
        else:
            winner = "none" if step.winner is None else str(step.winner)
            if not step.terminal:
                winner = "-"
            lines.append(f"terminal {'true' if step.terminal else 'false'} {winner}")
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise TraceError(f"line {lineno}: not an integer: {token!r}") from None
