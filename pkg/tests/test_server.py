import json
import threading
import urllib.error
import urllib.request

import pytest

from gridgames.server import make_server


@pytest.fixture(scope="module")
def base_url():
    server = make_server(port=0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()


def request(method, url, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(url, data=data, method=method)
    if data is not None:
        req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            payload = resp.read()
            return resp.status, json.loads(payload) if payload else None
    except urllib.error.HTTPError as exc:
        payload = exc.read()
        return exc.code, json.loads(payload) if payload else None


def test_meta_games(base_url):
    status, games = request("GET", f"{base_url}/meta/games")
    assert status == 200
    assert len(games) == 12
    entry = next(g for g in games if g["id"] == "tictactoe")
    assert entry == {"id": "tictactoe", "players": 2, "rows": 3, "cols": 3}


def test_create_session(base_url):
    status, view = request("POST", f"{base_url}/games", {"game": "tictactoe"})
    assert status == 201
    assert view["round"] == 0
    assert view["current_player"] == 0
    assert view["terminal"] is False
    assert view["board"] == "___\n___\n___"
    assert len(view["legal_moves"]) == 9


def test_create_unknown_game(base_url):
    status, body = request("POST", f"{base_url}/games", {"game": "nosuchgame"})
    assert status == 400
    assert "error" in body


def test_malformed_body(base_url):
    status, _ = request("POST", f"{base_url}/games", {"nope": 1})
    assert status == 400
    req = urllib.request.Request(
        f"{base_url}/games", data=b"{not json", method="POST"
    )
    try:
        with urllib.request.urlopen(req) as resp:
            status = resp.status
    except urllib.error.HTTPError as exc:
        status = exc.code
    assert status == 400


def test_get_state_and_play(base_url):
    _, view = request("POST", f"{base_url}/games", {"game": "tictactoe"})
    sid = view["id"]
    status, view = request("GET", f"{base_url}/games/{sid}")
    assert status == 200

    status, outcome = request(
        "POST", f"{base_url}/games/{sid}/moves", {"move": "p A 0 0"}
    )
    assert status == 200
    assert outcome["valid"] is True
    assert outcome["round"] == 1
    assert outcome["current_player"] == 1
    assert outcome["board"].startswith("A__")
    assert outcome["history"] == ["p A 0 0"]


def test_invalid_move_returns_valid_false_with_state_unchanged(base_url):
    _, view = request("POST", f"{base_url}/games", {"game": "tictactoe"})
    sid = view["id"]
    request("POST", f"{base_url}/games/{sid}/moves", {"move": "p A 0 0"})
    # same symbol again, out of turn
    status, outcome = request(
        "POST", f"{base_url}/games/{sid}/moves", {"move": "p A 0 1"}
    )
    assert status == 200
    assert outcome["valid"] is False
    assert outcome["round"] == 1
    assert outcome["board"].startswith("A__")
    # unparseable text is also a rule-level rejection, not a 4xx
    status, outcome = request(
        "POST", f"{base_url}/games/{sid}/moves", {"move": "garbage"}
    )
    assert status == 200
    assert outcome["valid"] is False


def test_unknown_session_404(base_url):
    status, _ = request("GET", f"{base_url}/games/doesnotexist")
    assert status == 404
    status, _ = request(
        "POST", f"{base_url}/games/doesnotexist/moves", {"move": "x"}
    )
    assert status == 404


def test_finished_session_409(base_url):
    _, view = request("POST", f"{base_url}/games", {"game": "tictactoe"})
    sid = view["id"]
    for move in ["p A 0 0", "p V 1 1", "p A 0 1", "p V 2 2", "p A 0 2"]:
        status, outcome = request(
            "POST", f"{base_url}/games/{sid}/moves", {"move": move}
        )
        assert outcome["valid"] is True
    assert outcome["terminal"] is True
    assert outcome["winner"] == 0
    assert outcome["legal_moves"] == []
    status, _ = request("POST", f"{base_url}/games/{sid}/moves", {"move": "p V 2 0"})
    assert status == 409


def test_delete_session(base_url):
    _, view = request("POST", f"{base_url}/games", {"game": "reversi"})
    sid = view["id"]
    status, _ = request("DELETE", f"{base_url}/games/{sid}")
    assert status == 204
    status, _ = request("GET", f"{base_url}/games/{sid}")
    assert status == 404


def test_board_text_round_trips(base_url):
    from gridgames import parse_layout

    _, view = request("POST", f"{base_url}/games", {"game": "pegsolitaire"})
    board = parse_layout(view["board"], view["rows"], view["cols"])
    assert board.count("A") == 32


def test_legal_moves_match_engine(base_url):
    from gridgames import create_game, format_move

    _, view = request("POST", f"{base_url}/games", {"game": "morris"})
    game = create_game("morris")
    expected = {format_move(m) for m in game.legal_moves(game.initial_state())}
    assert set(view["legal_moves"]) == expected


def test_concurrent_posts_serialize(base_url):
    _, view = request("POST", f"{base_url}/games", {"game": "tictactoe"})
    sid = view["id"]
    results = []

    def fire():
        results.append(
            request("POST", f"{base_url}/games/{sid}/moves", {"move": "p A 0 0"})
        )

    threads = [threading.Thread(target=fire) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    accepted = [body for status, body in results if body["valid"]]
    assert len(accepted) == 1  # exactly one of the racing identical moves lands
    _, view = request("GET", f"{base_url}/games/{sid}")
    assert view["round"] == 1
