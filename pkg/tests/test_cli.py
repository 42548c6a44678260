import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import TRACES_DIR, subprocess_env

STUB_DIR = Path(__file__).parent / "stubs"


def run_cli(*args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "gridgames.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=subprocess_env(),
        timeout=120,
    )


def test_list():
    proc = run_cli("list")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert len(lines) == 12
    assert "tictactoe 2 3x3" in lines
    assert "amazons 2 10x10" in lines
    assert "pegsolitaire 1 7x7" in lines


def test_play_scripted_win():
    script = "p A 0 0\np V 1 1\np A 0 1\np V 2 2\np A 0 2\n"
    proc = run_cli("play", "tictactoe", "--players", "h,h", stdin=script)
    assert proc.returncode == 0
    assert proc.stdout.endswith("winner: 0\n")
    assert "player 0 move> " in proc.stdout


def test_play_invalid_input_reprompts():
    script = "foo\np A 0 0\np V 1 1\np A 0 1\np V 2 2\np A 0 2\n"
    proc = run_cli("play", "tictactoe", "--players", "h,h", stdin=script)
    assert proc.returncode == 0
    assert "invalid move\n" in proc.stdout
    assert proc.stdout.endswith("winner: 0\n")


def test_play_single_player_spec():
    proc = run_cli("play", "pegsolitaire", "--players", "h", stdin="m 1 3 3 3\n")
    # input runs dry before the game ends
    assert proc.returncode == 3
    assert "aborted: input_exhausted" in proc.stderr


def test_play_agents():
    proc = run_cli("play", "tictactoe", "--players", "r:1,r:2")
    assert proc.returncode == 0
    assert "winner:" in proc.stdout


def test_play_wrong_player_count():
    proc = run_cli("play", "tictactoe", "--players", "h")
    assert proc.returncode == 2


def test_unknown_game_exit_code():
    proc = run_cli("perft", "nosuchgame", "1")
    assert proc.returncode == 3
    assert "error" in proc.stderr


def test_perft_prints_single_integer():
    proc = run_cli("perft", "chess", "3")
    assert proc.returncode == 0
    assert proc.stdout == "8902\n"


def test_perft_oracle_flag():
    proc = run_cli("perft", "tictactoe", "2", "--oracle")
    assert proc.stdout == "72\n"


def test_perft_depth_cap():
    proc = run_cli("perft", "tictactoe", "7")
    assert proc.returncode == 2


def test_replay_reference_trace():
    proc = run_cli("replay", "checkers", str(TRACES_DIR / "checkers_forced_capture.trace"))
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["verdict"] == "perfect"
    assert "verdict: perfect" in proc.stderr


def test_replay_game_mismatch():
    proc = run_cli("replay", "chess", str(TRACES_DIR / "tictactoe_win.trace"))
    assert proc.returncode == 3


def test_replay_missing_file():
    proc = run_cli("replay", "chess", "nope.trace")
    assert proc.returncode == 3


def test_replay_report_file(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli(
        "replay",
        "tictactoe",
        str(TRACES_DIR / "tictactoe_win.trace"),
        "--report",
        str(out),
    )
    assert proc.returncode == 0
    report = json.loads(out.read_text())
    assert report["verdict"] == "perfect"
    categories = {c["category"] for c in report["categories"]}
    assert categories == {
        "crash", "api", "move", "ending", "effect", "board", "turn_order"
    }


def test_check_healthy_candidate():
    candidate = f"{sys.executable} -m gridgames.harness.shim tictactoe"
    proc = run_cli(
        "check", "tictactoe", "--candidate", candidate, "--seeds", "1", "2",
        "--max-moves", "20",
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["verdict"] == "perfect"


def test_check_always_valid_stub_fails_with_move_flag():
    candidate = f"{sys.executable} {STUB_DIR / 'always_valid_stub.py'}"
    proc = run_cli(
        "check", "tictactoe", "--candidate", candidate,
        "--seeds", "1", "2", "3", "--max-moves", "30",
    )
    assert proc.returncode == 4
    report = json.loads(proc.stdout)
    move = next(c for c in report["categories"] if c["category"] == "move")
    assert move["flag"] is True


def test_check_crashing_candidate_exit_5():
    proc = run_cli(
        "check", "tictactoe", "--candidate", f"{sys.executable} -c pass",
        "--seeds", "1",
    )
    assert proc.returncode == 5


def test_check_unspawnable_candidate_exit_5():
    proc = run_cli("check", "tictactoe", "--candidate", "/no/such/binary", "--seeds", "1")
    assert proc.returncode == 5


def test_selfplay_tallies():
    proc = run_cli("selfplay", "tictactoe", "--n", "8", "--seed", "3")
    assert proc.returncode == 0
    total = sum(
        int(line.rsplit(":", 1)[1]) for line in proc.stdout.strip().split("\n")
    )
    assert total == 8


def test_usage_error_exit_2():
    proc = run_cli("play")
    assert proc.returncode == 2
