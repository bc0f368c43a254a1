"""Core game mechanics: boards, groups, clicking, settling, column shifting.

Coordinates are (column, row) pairs with row 0 at the bottom of the grid.
Columns are stored bottom to top with gravity already applied, so removing
blocks is plain list surgery and settling is free.  A column that empties
out is excised immediately, which keeps the remaining columns adjacent
(the column-shifting rule).  Boards are immutable values.

Text boards list the top row first, use '.' for empty cells and the
characters 'a'-'z' then '0'-'9' for colors 0..35.  An optional first line
"#colors=k" declares the palette size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789"
EMPTY_CHAR = "."
COLOR_OF_CHAR = {ch: i for i, ch in enumerate(ALPHABET)}

Cell = tuple[int, int]


class BoardParseError(ValueError):
    """Raised for malformed board text."""


class IllegalMoveError(ValueError):
    """Raised when a click targets an empty cell or a singleton group."""


@dataclass(frozen=True, order=True)
class Move:
    """A click, identified by one cell of the targeted group."""

    cell: Cell


@dataclass(frozen=True)
class Solution:
    """An ordered sequence of clicks, replayable from an initial board."""

    moves: tuple[Move, ...]

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    @staticmethod
    def of(cells: Sequence[Cell]) -> "Solution":
        return Solution(tuple(Move((int(c), int(r))) for c, r in cells))


@dataclass(frozen=True)
class Group:
    """A maximal edge-connected set of equal-colored blocks."""

    color: int
    cells: frozenset[Cell]

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def representative(self) -> Cell:
        """Lexicographically smallest (column, row) cell of the group."""
        return min(self.cells)


@dataclass(frozen=True)
class Board:
    """Immutable board state.  Stored columns are never empty."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for col in self.columns:
            if not col:
                raise ValueError("Board may not store an empty column")

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return max((len(col) for col in self.columns), default=0)

    @property
    def is_empty(self) -> bool:
        return not self.columns

    def color_at(self, cell: Cell) -> Optional[int]:
        col, row = cell
        if 0 <= col < len(self.columns) and 0 <= row < len(self.columns[col]):
            return self.columns[col][row]
        return None

    def cells(self) -> Iterator[Cell]:
        for c, col in enumerate(self.columns):
            for r in range(len(col)):
                yield (c, r)


EMPTY_BOARD = Board(())


def board_from_columns(columns: Sequence[Sequence[int]]) -> Board:
    """Build a board from bottom-to-top columns, excising empty ones."""
    return Board(tuple(tuple(col) for col in columns if len(col) > 0))


def _parse_header(line: str) -> int:
    body = line[1:].strip()
    if not body.startswith("colors="):
        raise BoardParseError(f"unknown directive {line!r}")
    try:
        k = int(body[len("colors="):])
    except ValueError:
        raise BoardParseError(f"bad color count in {line!r}") from None
    if not 1 <= k <= len(ALPHABET):
        raise BoardParseError(f"color count {k} out of range 1..{len(ALPHABET)}")
    return k


def parse_board(text: str) -> Board:
    """Parse board text (top row first) into a gravity-normal Board.

    Raises BoardParseError on ragged rows, unknown characters, or a block
    floating above an empty cell.  Empty columns are excised so the result
    round-trips with render_board up to that excision.
    """
    lines = text.splitlines()
    declared: Optional[int] = None
    if lines and lines[0].startswith("#"):
        declared = _parse_header(lines[0])
        lines = lines[1:]
    rows = [line for line in lines if line.strip() != ""]
    if not rows:
        return EMPTY_BOARD
    width = len(rows[0])
    for line in rows:
        if len(line) != width:
            raise BoardParseError("ragged rows in board text")
    height = len(rows)
    columns = []
    for c in range(width):
        col: list[int] = []
        blocked = False  # seen an empty cell going up
        for r in range(height):
            ch = rows[height - 1 - r][c]
            if ch == EMPTY_CHAR:
                blocked = True
                continue
            if ch not in COLOR_OF_CHAR:
                raise BoardParseError(f"unknown cell character {ch!r}")
            if blocked:
                raise BoardParseError(
                    f"floating block at column {c}: {ch!r} above an empty cell"
                )
            color = COLOR_OF_CHAR[ch]
            if declared is not None and color >= declared:
                raise BoardParseError(
                    f"color {ch!r} outside declared palette of {declared}"
                )
            col.append(color)
        columns.append(col)
    return board_from_columns(columns)


def render_board(board: Board) -> str:
    """Render a board as text, top row first, minimal bounding box."""
    h = board.height
    lines = []
    for r in range(h - 1, -1, -1):
        cells = []
        for col in board.columns:
            if r < len(col):
                v = col[r]
                if v >= len(ALPHABET):
                    raise ValueError(f"color {v} has no text representation")
                cells.append(ALPHABET[v])
            else:
                cells.append(EMPTY_CHAR)
        lines.append("".join(cells))
    return "\n".join(lines)


def _flood(board: Board, start: Cell) -> list[Cell]:
    color = board.color_at(start)
    seen = {start}
    stack = [start]
    acc = []
    while stack:
        cell = stack.pop()
        acc.append(cell)
        c, r = cell
        for nb in ((c - 1, r), (c + 1, r), (c, r - 1), (c, r + 1)):
            if nb not in seen and board.color_at(nb) == color:
                seen.add(nb)
                stack.append(nb)
    return acc


def find_groups(board: Board) -> list[Group]:
    """All maximal groups, ordered by their smallest (column, row) cell."""
    groups = []
    seen: set[Cell] = set()
    for start in board.cells():
        if start in seen:
            continue
        cells = _flood(board, start)
        seen.update(cells)
        groups.append(Group(board.color_at(start), frozenset(cells)))
    return groups


def group_at(board: Board, cell: Cell) -> Optional[Group]:
    """The group containing cell, or None for an empty cell."""
    color = board.color_at(cell)
    if color is None:
        return None
    return Group(color, frozenset(_flood(board, cell)))


def click(board: Board, cell: Cell) -> Board:
    """Remove the group at cell, settle blocks, excise empty columns.

    Raises IllegalMoveError for an empty cell or a singleton group.
    """
    if board.color_at(cell) is None:
        raise IllegalMoveError(f"no block at {cell}")
    removed = _flood(board, cell)
    if len(removed) < 2:
        raise IllegalMoveError(f"group at {cell} has a single block")
    dead: dict[int, set[int]] = {}
    for c, r in removed:
        dead.setdefault(c, set()).add(r)
    new_columns = []
    for c, col in enumerate(board.columns):
        gone = dead.get(c)
        if gone:
            col = tuple(v for r, v in enumerate(col) if r not in gone)
        if col:
            new_columns.append(col)
    return Board(tuple(new_columns))


def legal_moves(board: Board) -> list[Move]:
    """One Move per clickable group, keyed by the group representative."""
    return [Move(g.representative) for g in find_groups(board) if g.size >= 2]


def remaining_blocks(board: Board) -> int:
    return sum(len(col) for col in board.columns)


def canonical_key(board: Board) -> bytes:
    """Injective byte encoding of the board state (no symmetry folding)."""
    flat = [v for col in board.columns for v in col]
    if all(v < 255 for v in flat):
        return b"\x00".join(bytes(v + 1 for v in col) for col in board.columns)
    return b"T" + repr(board.columns).encode()


def replay(board: Board, solution: Solution) -> tuple[Board, int]:
    """Apply a solution move by move.  Returns (final board, blocks removed).

    Raises IllegalMoveError as soon as any move is illegal.
    """
    removed = 0
    for mv in solution:
        before = remaining_blocks(board)
        board = click(board, mv.cell)
        removed += before - remaining_blocks(board)
    return board, removed
