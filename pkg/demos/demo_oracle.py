"""The exhaustive oracle: exact answers on small boards, budgets beyond.

The oracle searches the whole click tree with memoization on canonical
board keys.  Small boards resolve exactly in milliseconds; a budget
turns it into a best-effort solver whose witness is still replayable.
"""

from random import Random

from clickomania.engine import click, parse_board, render_board, replay
from clickomania.enumeration import random_board
from clickomania.oracle import Budget, best_move, is_solvable, search

board = parse_board("aab\nbab")
print("Board:")
print(render_board(board))
result = search(board)
print(f"exact={result.exact}, removable {result.max_removed}/{result.total},"
      f" {result.states} states")
print("witness:", [m.cell for m in result.witness])
print()

print("Playing the witness:")
state = board
for move in result.witness:
    state = click(state, move.cell)
    print(render_board(state) if not state.is_empty else "(empty)")
    print()

rng = Random(4)
big = random_board(10, 10, 4, rng)
print("A 10x10 four-color board under tight and loose budgets:")
for budget in (Budget(max_states=100), Budget(max_states=200_000)):
    result = search(big, budget)
    final, removed = replay(big, result.witness)
    print(f"  max_states={budget.max_states:7}: exact={result.exact},"
          f" removable>={result.max_removed:3} of {result.total},"
          f" witness replays {removed}")
print()
print("Tri-state answers under a tiny budget are honest about it:")
print(f"  is_solvable -> {is_solvable(big, Budget(max_states=100))!r}")
print(f"  suggested opening move: {best_move(big).cell}")
