"""The twelve reference games and their registry."""

from __future__ import annotations

from ..game import Game
from .amazons import Amazons
from .ardri import ArdRi
from .checkers import Checkers
from .chess import Chess
from .domineering import Domineering
from .kharebga import Kharebga
from .morris import Morris
from .pegsolitaire import PegSolitaire
from .reversi import Reversi
from .tictactoe import TicTacToe
from .tron import Tron
from .unashogi import Unashogi


class UnknownGameError(ValueError):
    pass


GAME_CLASSES: dict[str, type[Game]] = {
    cls.game_id: cls
    for cls in (
        TicTacToe,
        PegSolitaire,
        Reversi,
        Morris,
        Checkers,
        Chess,
        ArdRi,
        Domineering,
        Tron,
        Amazons,
        Kharebga,
        Unashogi,
    )
}


def game_ids() -> list[str]:
    return list(GAME_CLASSES)


def create_game(game_id: str) -> Game:
    """Instantiate a registered game by id."""
    try:
        cls = GAME_CLASSES[game_id]
    except KeyError:
        raise UnknownGameError(f"unknown game {game_id!r}") from None
    return cls()
