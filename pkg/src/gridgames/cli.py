"""Command-line interface.

    gridgames list
    gridgames play <game> --players h,h [--seed N] [--max-moves N]
    gridgames replay <game> <trace> [--report PATH]
    gridgames check <game> --candidate CMD [--seeds ...] [--trace-dir D]
    gridgames perft <game> <depth> [--oracle]
    gridgames selfplay <game> [--n N] [--seed N] [--max-moves N]
    gridgames serve [--port P] [--ui-dir DIR]

Machine output (perft counts, JSON reports) goes to stdout; diagnostics
go to stderr. Exit codes: 0 success, 2 usage, 3 game/file error,
4 compliance failure, 5 candidate crash.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path

from .agents import AgentSource, parse_agent_token, play_match, RandomAgent
from .game import COMPLETE, ConsoleSource, run_game_loop
from .games import UnknownGameError, create_game, GAME_CLASSES
from .harness import (
    External,
    HarnessError,
    InProcess,
    TraceError,
    diff_candidates,
    load_trace,
    perft,
    perft_by_validation,
    replay_trace,
    run_suite,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GAME_ERROR = 3
EXIT_COMPLIANCE = 4
EXIT_CANDIDATE_CRASH = 5

PERFT_DEPTH_CAP = 6


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownGameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GAME_ERROR
    except (TraceError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GAME_ERROR
    except HarnessError as exc:
        print(f"harness error: {exc}", file=sys.stderr)
        return EXIT_GAME_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridgames")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list the available games")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("play", help="play interactively or against agents")
    p.add_argument("game")
    p.add_argument("--players", default=None, help="comma list: h, r:<seed>, mc:<seed>:<budget>")
    p.add_argument("--max-moves", type=int, default=10_000)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("replay", help="replay a trace against the reference rules")
    p.add_argument("game")
    p.add_argument("trace")
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("check", help="differential-test a candidate implementation")
    p.add_argument("game")
    p.add_argument("--candidate", required=True, help="command line of the candidate")
    p.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    p.add_argument("--max-moves", type=int, default=120)
    p.add_argument("--trace-dir", default=None, help="also replay this trace suite")
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("perft", help="count move sequences of exact depth")
    p.add_argument("game")
    p.add_argument("depth", type=int)
    p.add_argument("--oracle", action="store_true", help="recount by grammar enumeration")
    p.set_defaults(func=cmd_perft)

    p = sub.add_parser("selfplay", help="seeded random-vs-random matches")
    p.add_argument("game")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-moves", type=int, default=1000)
    p.set_defaults(func=cmd_selfplay)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None, help="static bundle to serve at /")
    p.add_argument("--session-ttl", type=float, default=3600.0, help="idle expiry, seconds")
    p.set_defaults(func=cmd_serve)

    return parser


def cmd_list(args) -> int:
    for game_id, cls in GAME_CLASSES.items():
        print(f"{game_id} {cls.player_count} {cls.rows}x{cls.cols}")
    return EXIT_OK


def cmd_play(args) -> int:
    game = create_game(args.game)
    spec = args.players or ",".join(["h"] * game.player_count)
    tokens = spec.split(",")
    if len(tokens) != game.player_count:
        print(
            f"error: {args.game} needs {game.player_count} players, got {len(tokens)}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    sources = []
    for token in tokens:
        if token == "h":
            sources.append(ConsoleSource())
        else:
            try:
                sources.append(AgentSource(parse_agent_token(token).build()))
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
    result = run_game_loop(game, sources, out=sys.stdout, max_moves=args.max_moves)
    if result.status != COMPLETE:
        print(f"aborted: {result.status}", file=sys.stderr)
        return EXIT_GAME_ERROR
    return EXIT_OK


def cmd_replay(args) -> int:
    trace = load_trace(args.trace)
    if trace.game_id != args.game:
        print(
            f"error: trace is for {trace.game_id!r}, not {args.game!r}",
            file=sys.stderr,
        )
        return EXIT_GAME_ERROR
    report = replay_trace(trace, InProcess(create_game(trace.game_id)))
    emit_report(report, args.report)
    return EXIT_OK if report.verdict == "perfect" else EXIT_COMPLIANCE


def cmd_check(args) -> int:
    argv = tuple(shlex.split(args.candidate))
    reference = InProcess(create_game(args.game))
    report = diff_candidates(
        args.game,
        reference,
        External(argv, args.game),
        seeds=args.seeds,
        max_moves=args.max_moves,
    )
    if args.trace_dir:
        from .harness import merge_reports

        suite_report, _ = run_suite(
            args.trace_dir,
            lambda gid: External(argv, gid),
            game_filter=args.game,
        )
        report = merge_reports(args.game, f"{report.subject} + trace suite", [report, suite_report])
    emit_report(report, args.report)
    if report.flag("crash"):
        return EXIT_CANDIDATE_CRASH
    return EXIT_OK if report.verdict == "perfect" else EXIT_COMPLIANCE


def cmd_perft(args) -> int:
    if not 0 <= args.depth <= PERFT_DEPTH_CAP:
        print(f"error: depth must be 0..{PERFT_DEPTH_CAP}", file=sys.stderr)
        return EXIT_USAGE
    game = create_game(args.game)
    count = (perft_by_validation if args.oracle else perft)(game, args.depth)
    print(count)
    return EXIT_OK


def cmd_selfplay(args) -> int:
    game = create_game(args.game)
    tallies: dict[str, int] = {}
    for i in range(args.n):
        agents = [
            RandomAgent(args.seed * 1_000_003 + i * 2 + p)
            for p in range(game.player_count)
        ]
        result = play_match(create_game(args.game), agents, max_moves=args.max_moves)
        if result.status != COMPLETE:
            key = f"aborted:{result.status}"
        elif result.winner is None:
            key = "draws"
        else:
            key = f"player {result.winner}"
        tallies[key] = tallies.get(key, 0) + 1
    for key in sorted(tallies):
        print(f"{key}: {tallies[key]}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .server import serve

    serve(
        host=args.host,
        port=args.port,
        ui_dir=args.ui_dir,
        session_ttl=args.session_ttl,
    )
    return EXIT_OK


def emit_report(report, path: str | None) -> None:
    text = json.dumps(report.to_dict(), indent=2)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
        print(report.summary(), file=sys.stderr)
    else:
        print(text)
        print(report.summary(), file=sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
