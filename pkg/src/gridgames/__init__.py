"""gridgames: a grid board game engine with twelve reference games, a
rule-compliance harness, simple agents, and a play server."""

from .board import Board, BoardError, EMPTY, VOID, is_piece
from .game import (
    COMPLETE,
    ConsoleSource,
    Game,
    GameResult,
    GameState,
    IllegalMoveError,
    INPUT_EXHAUSTED,
    MOVE_CAP,
    MoveSource,
    ScriptedSource,
    run_game_loop,
)
from .games import GAME_CLASSES, UnknownGameError, create_game, game_ids
from .moves import Move, PASS, Pass, Place, PlacePair, Slide
from .notation import (
    MoveParseError,
    format_board,
    format_move,
    parse_layout,
    parse_move,
)

__all__ = [
    "Board",
    "BoardError",
    "COMPLETE",
    "ConsoleSource",
    "EMPTY",
    "GAME_CLASSES",
    "Game",
    "GameResult",
    "GameState",
    "IllegalMoveError",
    "INPUT_EXHAUSTED",
    "MOVE_CAP",
    "Move",
    "MoveParseError",
    "MoveSource",
    "PASS",
    "Pass",
    "Place",
    "PlacePair",
    "ScriptedSource",
    "Slide",
    "UnknownGameError",
    "VOID",
    "create_game",
    "format_board",
    "format_move",
    "game_ids",
    "is_piece",
    "parse_layout",
    "parse_move",
    "run_game_loop",
]
