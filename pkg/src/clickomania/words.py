"""Run-length words for one-column and one-row puzzles.

A word is a sequence of runs (color, count) with adjacent runs of distinct
colors, equivalent to reading a single column bottom to top or a single row
left to right.  Gravity is irrelevant in one dimension, so clicking a group
just deletes a run and merges its neighbors if they match.

Text form: comma-separated "char:count" runs, e.g. "a:2,b:3,a:1".  A bare
string of color characters ("aabba") is also accepted and compressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .engine import ALPHABET, COLOR_OF_CHAR, Board, board_from_columns

Run = tuple[int, int]


@dataclass(frozen=True)
class Word:
    """A run-length encoded block string."""

    runs: tuple[Run, ...]

    def __post_init__(self) -> None:
        prev = None
        for color, count in self.runs:
            if count < 1:
                raise ValueError(f"run count {count} must be positive")
            if color < 0:
                raise ValueError(f"negative color {color}")
            if color == prev:
                raise ValueError("adjacent runs share a color")
            prev = color

    @property
    def length(self) -> int:
        """Total number of blocks."""
        return sum(count for _, count in self.runs)

    @property
    def group_count(self) -> int:
        return len(self.runs)

    def colors(self) -> set[int]:
        return {color for color, _ in self.runs}

    def reversed(self) -> "Word":
        return Word(tuple(reversed(self.runs)))


EMPTY_WORD = Word(())


def compress(colors: Iterable[int]) -> Word:
    """Run-length encode a block color sequence."""
    runs: list[list[int]] = []
    for color in colors:
        if runs and runs[-1][0] == color:
            runs[-1][1] += 1
        else:
            runs.append([color, 1])
    return Word(tuple((c, n) for c, n in runs))


def expand(word: Word) -> list[int]:
    """Block color sequence of a word."""
    out: list[int] = []
    for color, count in word.runs:
        out.extend([color] * count)
    return out


def cap_runs(word: Word, cap: int) -> Word:
    """Clamp every run to at most cap blocks."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    return Word(tuple((color, min(count, cap)) for color, count in word.runs))


def word_from_text(text: str) -> Word:
    text = text.strip()
    if not text:
        return EMPTY_WORD
    if ":" not in text:
        try:
            return compress(COLOR_OF_CHAR[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"unknown color character {exc.args[0]!r}") from None
    runs = []
    for part in text.split(","):
        part = part.strip()
        try:
            ch, count_text = part.split(":")
            count = int(count_text)
        except ValueError:
            raise ValueError(f"bad run {part!r}, expected char:count") from None
        if ch not in COLOR_OF_CHAR:
            raise ValueError(f"unknown color character {ch!r}")
        runs.append((COLOR_OF_CHAR[ch], count))
    return Word(tuple(runs))


def word_to_text(word: Word) -> str:
    for color, _ in word.runs:
        if color >= len(ALPHABET):
            raise ValueError(f"color {color} has no text representation")
    return ",".join(f"{ALPHABET[color]}:{count}" for color, count in word.runs)


def word_to_board(word: Word, orientation: str = "column") -> Board:
    """Materialize a word as a one-column (bottom up) or one-row board."""
    blocks = expand(word)
    if orientation == "column":
        return board_from_columns([blocks])
    if orientation == "row":
        return board_from_columns([[b] for b in blocks])
    raise ValueError(f"unknown orientation {orientation!r}")


def word_from_board(board: Board) -> Word:
    """Read a one-column or one-row board back as a word.

    One-column boards read bottom to top, one-row boards left to right.
    A single block is treated as a column.
    """
    if board.is_empty:
        return EMPTY_WORD
    if board.width == 1:
        return compress(board.columns[0])
    if board.height == 1:
        return compress(col[0] for col in board.columns)
    raise ValueError("board is neither one column nor one row")


def word_from_runs(pairs: Sequence[tuple[int, int]]) -> Word:
    """Build a word from (color, count) pairs, merging equal neighbors."""
    out: list[int] = []
    for color, count in pairs:
        out.extend([color] * count)
    return compress(out)
