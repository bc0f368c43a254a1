"""A walking tour of the board rules: groups, gravity, column shifting.

Run as a script; it prints each board state as it plays.  Coordinates
are (column, row) with row 0 at the bottom; board text is written with
its top row first, the way the board looks.
"""

from clickomania.engine import click, find_groups, legal_moves, parse_board, render_board

TEXT = """\
acb
aab
bcb
"""


def show(title, board):
    print(f"--- {title} ---")
    print(render_board(board) if not board.is_empty else "(empty)")
    print()


board = parse_board(TEXT)
show("start", board)

print("Groups (maximal same-colored connected sets):")
for group in find_groups(board):
    kind = "clickable" if len(group.cells) >= 2 else "singleton"
    print(f"  color {group.color} at {group.representative}: {len(group.cells)} cells, {kind}")
print()

print("Only groups of two or more can be clicked:")
print(" ", [m.cell for m in legal_moves(board)])
print()

# Click the L-shaped a-group.  The two c singletons in the middle column
# were separated by one of its cells; gravity drops the upper c onto the
# lower one and they merge into a clickable pair.
board = click(board, (0, 1))
show("after clicking the a-group (the two c's fall together)", board)

# Click the b-column on the right.  The column empties entirely and is
# excised, so the remaining columns close ranks.
board = click(board, (2, 0))
show("after clicking the b-column (the empty column closes)", board)

board = click(board, (1, 0))
show("after clicking the merged c-pair", board)

print("The last b is a singleton, so the board is stuck one block short.")
print("Legal moves:", [m.cell for m in legal_moves(board)])
