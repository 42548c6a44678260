"""Nine Men's Morris: 24 points embedded in a 7x7 grid (all other cells
void). The movement graph is the standard mill-board graph, kept as an
explicit edge table; grid adjacency is irrelevant and two points that
look adjacent in the layout are NOT connected unless the table says so.

Each player places 9 pieces, one per turn, then moves along edges; a
player down to exactly 3 pieces may fly to any empty point. Closing a
mill removes one enemy piece as part of the same move:

    placement closing a mill:  ``pp <place> <remove>``
    movement closing a mill:   ``m <from> <to> <remove>``

A plain ``p``/two-waypoint ``m`` that would close a mill is illegal, as
is a removal form that closes none. The removed piece must not stand in
a mill unless every enemy piece does. A player loses with fewer than 3
pieces in total (hand plus board) or with no legal move on their turn.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..board import Board, EMPTY, VOID
from ..game import Game, GameState
from ..moves import Move, Place, PlacePair, Slide

POINTS = (
    (0, 0), (0, 3), (0, 6),
    (1, 1), (1, 3), (1, 5),
    (2, 2), (2, 3), (2, 4),
    (3, 0), (3, 1), (3, 2), (3, 4), (3, 5), (3, 6),
    (4, 2), (4, 3), (4, 4),
    (5, 1), (5, 3), (5, 5),
    (6, 0), (6, 3), (6, 6),
)

# 32 edges: three concentric rings plus four spokes.
EDGES = (
    ((0, 0), (0, 3)), ((0, 3), (0, 6)), ((0, 6), (3, 6)), ((3, 6), (6, 6)),
    ((6, 6), (6, 3)), ((6, 3), (6, 0)), ((6, 0), (3, 0)), ((3, 0), (0, 0)),
    ((1, 1), (1, 3)), ((1, 3), (1, 5)), ((1, 5), (3, 5)), ((3, 5), (5, 5)),
    ((5, 5), (5, 3)), ((5, 3), (5, 1)), ((5, 1), (3, 1)), ((3, 1), (1, 1)),
    ((2, 2), (2, 3)), ((2, 3), (2, 4)), ((2, 4), (3, 4)), ((3, 4), (4, 4)),
    ((4, 4), (4, 3)), ((4, 3), (4, 2)), ((4, 2), (3, 2)), ((3, 2), (2, 2)),
    ((0, 3), (1, 3)), ((1, 3), (2, 3)),
    ((3, 0), (3, 1)), ((3, 1), (3, 2)),
    ((3, 4), (3, 5)), ((3, 5), (3, 6)),
    ((4, 3), (5, 3)), ((5, 3), (6, 3)),
)

MILLS = (
    ((0, 0), (0, 3), (0, 6)),
    ((1, 1), (1, 3), (1, 5)),
    ((2, 2), (2, 3), (2, 4)),
    ((3, 0), (3, 1), (3, 2)),
    ((3, 4), (3, 5), (3, 6)),
    ((4, 2), (4, 3), (4, 4)),
    ((5, 1), (5, 3), (5, 5)),
    ((6, 0), (6, 3), (6, 6)),
    ((0, 0), (3, 0), (6, 0)),
    ((1, 1), (3, 1), (5, 1)),
    ((2, 2), (3, 2), (4, 2)),
    ((0, 3), (1, 3), (2, 3)),
    ((4, 3), (5, 3), (6, 3)),
    ((2, 4), (3, 4), (4, 4)),
    ((1, 5), (3, 5), (5, 5)),
    ((0, 6), (3, 6), (6, 6)),
)

ADJACENT: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
for _a, _b in EDGES:
    ADJACENT.setdefault(_a, ())
    ADJACENT.setdefault(_b, ())
    ADJACENT[_a] += (_b,)
    ADJACENT[_b] += (_a,)

MILLS_AT: dict[tuple[int, int], tuple[tuple[tuple[int, int], ...], ...]] = {}
for _mill in MILLS:
    for _p in _mill:
        MILLS_AT.setdefault(_p, ())
        MILLS_AT[_p] += (_mill,)


@dataclass(frozen=True)
class MorrisState(GameState):
    hands: tuple[int, int]


class Morris(Game):
    game_id = "morris"
    rows = 7
    cols = 7
    player_count = 2
    player_symbols = (("A",), ("V",))
    max_slide_len = 3

    def initial_state(self) -> MorrisState:
        board = Board.from_layout(7, 7, self._blank_layout())
        return MorrisState(board, 0, 0, (9, 9))

    @staticmethod
    def _blank_layout() -> str:
        rows = [[VOID] * 7 for _ in range(7)]
        for r, c in POINTS:
            rows[r][c] = EMPTY
        return "\n".join("".join(row) for row in rows)

    def validate_move(self, state, move, player) -> bool:
        if player != state.current_player:
            return False
        board = state.board
        own = self.player_symbols[player][0]
        enemy = self.player_symbols[1 - player][0]
        placing = state.hands[player] > 0

        if isinstance(move, Place):
            if not placing or move.piece != own:
                return False
            if move.at not in ADJACENT or board.get(move.at) != EMPTY:
                return False
            return not self._would_close_mill(board, move.at, own)
        if isinstance(move, PlacePair):
            if not placing:
                return False
            at, target = move.first, move.second
            if at not in ADJACENT or board.get(at) != EMPTY:
                return False
            if not self._would_close_mill(board, at, own):
                return False
            return self._removable(board, target, enemy, placed=(at, own))
        if isinstance(move, Slide) and not move.promotion:
            if placing:
                return False
            waypoints = move.waypoints
            if len(waypoints) not in (2, 3):
                return False
            frm, to = waypoints[0], waypoints[1]
            if frm not in ADJACENT or to not in ADJACENT:
                return False
            if board.get(frm) != own or board.get(to) != EMPTY:
                return False
            flying = board.count(own) == 3
            if not flying and to not in ADJACENT[frm]:
                return False
            closes = self._would_close_mill_move(board, frm, to, own)
            if len(waypoints) == 2:
                return not closes
            if not closes:
                return False
            return self._removable(board, waypoints[2], enemy, moved=(frm, to, own))
        return False

    def legal_moves(self, state) -> list[Move]:
        player = state.current_player
        board = state.board
        own = self.player_symbols[player][0]
        enemy = self.player_symbols[1 - player][0]
        moves: list[Move] = []
        if state.hands[player] > 0:
            for at in POINTS:
                if board.get(at) != EMPTY:
                    continue
                if self._would_close_mill(board, at, own):
                    for target in self._removal_targets(board, enemy, placed=(at, own)):
                        moves.append(PlacePair(at, target))
                else:
                    moves.append(Place(own, at))
            return moves
        flying = board.count(own) == 3
        for frm in POINTS:
            if board.get(frm) != own:
                continue
            targets = POINTS if flying else ADJACENT[frm]
            for to in targets:
                if board.get(to) != EMPTY:
                    continue
                if self._would_close_mill_move(board, frm, to, own):
                    for target in self._removal_targets(
                        board, enemy, moved=(frm, to, own)
                    ):
                        moves.append(Slide((frm, to, target)))
                else:
                    moves.append(Slide((frm, to)))
        return moves

    def next_player(self, state) -> int:
        return (state.current_player + 1) % 2

    def apply_move(self, state, move) -> GameState:
        player = state.current_player
        own = self.player_symbols[player][0]
        board = state.board.copy()
        hands = state.hands
        if isinstance(move, Place):
            board.place(own, move.at)
            hands = self._take_from_hand(hands, player)
        elif isinstance(move, PlacePair):
            board.place(own, move.first)
            board.remove(move.second)
            hands = self._take_from_hand(hands, player)
        else:
            frm, to = move.waypoints[0], move.waypoints[1]
            board.move_piece(frm, to)
            if len(move.waypoints) == 3:
                board.remove(move.waypoints[2])
        return self.advance(state, board, hands=hands)

    @staticmethod
    def _take_from_hand(hands, player):
        out = list(hands)
        out[player] -= 1
        return tuple(out)

    def game_finished(self, state) -> bool:
        for player in (0, 1):
            if state.hands[player] == 0 and state.board.count(
                self.player_symbols[player][0]
            ) < 3:
                return True
        return not self.legal_moves(state)

    def get_winner(self, state) -> int | None:
        for player in (0, 1):
            if state.hands[player] == 0 and state.board.count(
                self.player_symbols[player][0]
            ) < 3:
                return 1 - player
        if not self.legal_moves(state):
            return (state.current_player + 1) % 2
        return None

    # -- mill helpers ----------------------------------------------------

    def _would_close_mill(self, board, at, own) -> bool:
        """Placing `own` at `at` completes some mill."""
        return any(
            all(board.get(p) == own for p in mill if p != at)
            for mill in MILLS_AT[at]
        )

    def _would_close_mill_move(self, board, frm, to, own) -> bool:
        """Moving `own` frm->to completes a mill at `to` (frm vacated)."""
        for mill in MILLS_AT[to]:
            if frm in mill:
                continue
            if all(board.get(p) == own for p in mill if p != to):
                return True
        return False

    def _in_mill(self, cells: dict, at) -> bool:
        symbol = cells[at]
        return any(
            all(cells.get(p) == symbol for p in mill) for mill in MILLS_AT[at]
        )

    def _post_move_cells(self, board, placed=None, moved=None) -> dict:
        cells = {p: board.get(p) for p in POINTS}
        if placed is not None:
            at, own = placed
            cells[at] = own
        if moved is not None:
            frm, to, own = moved
            cells[frm] = EMPTY
            cells[to] = own
        return cells

    def _removable(self, board, target, enemy, placed=None, moved=None) -> bool:
        if target not in ADJACENT:
            return False
        cells = self._post_move_cells(board, placed, moved)
        if cells[target] != enemy:
            return False
        if not self._in_mill(cells, target):
            return True
        return all(
            self._in_mill(cells, p) for p in POINTS if cells[p] == enemy
        )

    def _removal_targets(self, board, enemy, placed=None, moved=None) -> list:
        cells = self._post_move_cells(board, placed, moved)
        enemies = [p for p in POINTS if cells[p] == enemy]
        free = [p for p in enemies if not self._in_mill(cells, p)]
        return free if free else enemies
