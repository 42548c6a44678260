"""HTTP session service.

    POST   /games                {"game": "<id>"}        -> 201 session view
    GET    /games/{id}                                   -> 200 session view
    POST   /games/{id}/moves     {"move": "<move text>"} -> 200 {"valid": ..., ...view}
    DELETE /games/{id}                                   -> 204
    GET    /meta/games                                   -> 200 game list

A session view carries the board as layout text plus round,
current_player, terminal, winner, and the legal move texts. A rejected
move is not a transport error: it returns 200 with valid=false and the
unchanged state. Posting to a finished session is 409; unknown sessions
are 404; malformed bodies and unknown games are 400.

Sessions are in-memory, expire after an idle hour, and are mutated
under a per-session lock so concurrent posts serialize cleanly.
"""

from __future__ import annotations

import json
import re
import secrets
import threading
import time
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .game import Game, GameState
from .games import GAME_CLASSES, UnknownGameError, create_game
from .notation import MoveParseError, format_move, parse_move

SESSION_TTL = 3600.0


class Session:
    def __init__(self, session_id: str, game: Game):
        self.id = session_id
        self.game = game
        self.state: GameState = game.initial_state()
        self.history: list[str] = []
        self.created = self.last_active = time.time()
        self.lock = threading.Lock()

    def touch(self) -> None:
        self.last_active = time.time()

    def view(self) -> dict:
        game, state = self.game, self.state
        terminal = game.game_finished(state)
        winner = game.get_winner(state) if terminal else None
        return {
            "id": self.id,
            "game": game.game_id,
            "board": state.board.layout(),
            "rows": state.board.rows,
            "cols": state.board.cols,
            "round": state.round,
            "current_player": state.current_player,
            "players": game.player_count,
            "terminal": terminal,
            "winner": winner,
            "legal_moves": [] if terminal else [format_move(m) for m in game.legal_moves(state)],
            "history": list(self.history),
        }


class SessionStore:
    def __init__(self, ttl: float = SESSION_TTL):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, game_id: str) -> Session:
        session = Session(secrets.token_urlsafe(16), create_game(game_id))
        with self._lock:
            self._evict()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            self._evict()
            session = self._sessions.get(session_id)
        if session is not None:
            session.touch()
        return session

    def delete(self, session_id: str) -> bool:
        with self._lock:
            return self._sessions.pop(session_id, None) is not None

    def _evict(self) -> None:
        cutoff = time.time() - self.ttl
        for sid in [s for s, v in self._sessions.items() if v.last_active < cutoff]:
            del self._sessions[sid]


def games_meta() -> list[dict]:
    return [
        {
            "id": game_id,
            "players": cls.player_count,
            "rows": cls.rows,
            "cols": cls.cols,
        }
        for game_id, cls in GAME_CLASSES.items()
    ]


class SessionHandler(BaseHTTPRequestHandler):
    store: SessionStore = None  # set by make_server
    ui_dir: Path | None = None
    protocol_version = "HTTP/1.1"

    # -- routing ---------------------------------------------------------

    def do_GET(self):
        if self.path == "/meta/games":
            return self._json(HTTPStatus.OK, games_meta())
        match = re.fullmatch(r"/games/([A-Za-z0-9_-]+)", self.path)
        if match:
            session = self.store.get(match.group(1))
            if session is None:
                return self._error(HTTPStatus.NOT_FOUND, "unknown session")
            with session.lock:
                return self._json(HTTPStatus.OK, session.view())
        return self._static()

    def do_POST(self):
        if self.path == "/games":
            body = self._body()
            if body is None or not isinstance(body.get("game"), str):
                return self._error(HTTPStatus.BAD_REQUEST, "body must carry a game id")
            try:
                session = self.store.create(body["game"])
            except UnknownGameError as exc:
                return self._error(HTTPStatus.BAD_REQUEST, str(exc))
            return self._json(HTTPStatus.CREATED, session.view())
        match = re.fullmatch(r"/games/([A-Za-z0-9_-]+)/moves", self.path)
        if match:
            return self._post_move(match.group(1))
        return self._error(HTTPStatus.NOT_FOUND, "no such endpoint")

    def do_DELETE(self):
        match = re.fullmatch(r"/games/([A-Za-z0-9_-]+)", self.path)
        if match and self.store.delete(match.group(1)):
            self.send_response(HTTPStatus.NO_CONTENT)
            self.send_header("Content-Length", "0")
            self._cors()
            self.end_headers()
            return
        return self._error(HTTPStatus.NOT_FOUND, "unknown session")

    def do_OPTIONS(self):
        self.send_response(HTTPStatus.NO_CONTENT)
        self.send_header("Content-Length", "0")
        self._cors()
        self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    # -- handlers ----------------------------------------------------------

    def _post_move(self, session_id: str):
        session = self.store.get(session_id)
        if session is None:
            return self._error(HTTPStatus.NOT_FOUND, "unknown session")
        body = self._body()
        if body is None or not isinstance(body.get("move"), str):
            return self._error(HTTPStatus.BAD_REQUEST, "body must carry a move")
        with session.lock:
            game, state = session.game, session.state
            if game.game_finished(state):
                return self._error(HTTPStatus.CONFLICT, "session is finished")
            try:
                move = parse_move(body["move"])
            except MoveParseError:
                return self._json(
                    HTTPStatus.OK, {"valid": False, **session.view()}
                )
            if not game.validate_move(state, move, state.current_player):
                return self._json(
                    HTTPStatus.OK, {"valid": False, **session.view()}
                )
            session.state = game.apply_move(state, move)
            session.history.append(body["move"])
            session.touch()
            return self._json(HTTPStatus.OK, {"valid": True, **session.view()})

    def _static(self):
        if self.ui_dir is None:
            return self._error(HTTPStatus.NOT_FOUND, "no such endpoint")
        path = self.path.split("?", 1)[0]
        if path == "/":
            path = "/index.html"
        target = (self.ui_dir / path.lstrip("/")).resolve()
        if not str(target).startswith(str(self.ui_dir.resolve())) or not target.is_file():
            return self._error(HTTPStatus.NOT_FOUND, "not found")
        data = target.read_bytes()
        types = {
            ".html": "text/html; charset=utf-8",
            ".js": "text/javascript; charset=utf-8",
            ".css": "text/css; charset=utf-8",
            ".map": "application/json",
        }
        self.send_response(HTTPStatus.OK)
        self.send_header("Content-Type", types.get(target.suffix, "application/octet-stream"))
        self.send_header("Content-Length", str(len(data)))
        self._cors()
        self.end_headers()
        self.wfile.write(data)

    # -- plumbing ----------------------------------------------------------

    def _body(self) -> dict | None:
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            data = json.loads(raw.decode("utf-8")) if raw else {}
        except (ValueError, UnicodeDecodeError):
            return None
        return data if isinstance(data, dict) else None

    def _json(self, status: HTTPStatus, payload) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self._cors()
        self.end_headers()
        self.wfile.write(data)

    def _error(self, status: HTTPStatus, message: str) -> None:
        self._json(status, {"error": message})

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")

    def log_message(self, fmt, *args):  # quiet by default
        pass


def make_server(
    host: str = "127.0.0.1",
    port: int = 8080,
    ui_dir: str | None = None,
    session_ttl: float = SESSION_TTL,
):
    handler = type(
        "BoundSessionHandler",
        (SessionHandler,),
        {
            "store": SessionStore(ttl=session_ttl),
            "ui_dir": Path(ui_dir) if ui_dir else _default_ui_dir(),
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def _default_ui_dir() -> Path | None:
    candidate = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def serve(
    host: str = "127.0.0.1",
    port: int = 8080,
    ui_dir: str | None = None,
    session_ttl: float = SESSION_TTL,
) -> None:
    server = make_server(host, port, ui_dir, session_ttl)
    actual = server.server_address[1]
    print(f"listening on http://{host}:{actual}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
