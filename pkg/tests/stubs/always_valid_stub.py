"""External candidate that answers VALID to every move it is sent."""

import sys

from gridgames.games.tictactoe import TicTacToe
from gridgames.harness.shim import serve


class AlwaysValid(TicTacToe):
    def validate_move(self, state, move, player):
        return True

    def apply_move(self, state, move):
        try:
            return super().apply_move(state, move)
        except Exception:
            return self.advance(state, state.board.copy())


if __name__ == "__main__":
    serve(AlwaysValid(), sys.stdin, sys.stdout)
