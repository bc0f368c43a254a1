"""Exhaustive enumeration of small one-column puzzles.

Enumeration walks raw block strings rather than run-length words so that
every board of a given size appears exactly once; compression to words
happens on the way out.  Mainly a harness for cross-checking the fast
deciders against ground truth on complete universes.
"""

from __future__ import annotations

from itertools import product
from random import Random
from typing import Callable, Iterator

from .engine import Board, board_from_columns
from .grammar import decide_cfg
from .words import EMPTY_WORD, Word, compress


def iter_block_strings(colors: int, length: int) -> Iterator[tuple[int, ...]]:
    """All block color strings of exactly the given length."""
    yield from product(range(colors), repeat=length)


def iter_words(colors: int, max_blocks: int, include_empty: bool = True) -> Iterator[Word]:
    """All words of up to max_blocks blocks over a color count."""
    if include_empty:
        yield EMPTY_WORD
    for length in range(1, max_blocks + 1):
        for blocks in iter_block_strings(colors, length):
            yield compress(blocks)


def count_strings(colors: int, max_blocks: int) -> int:
    """Number of words iter_words yields, including the empty one."""
    return 1 + sum(colors**n for n in range(1, max_blocks + 1))


def solvable_counts(colors: int, max_blocks: int) -> dict[int, tuple[int, int]]:
    """Per block count: (solvable strings, total strings)."""
    out: dict[int, tuple[int, int]] = {0: (1, 1)}
    for length in range(1, max_blocks + 1):
        good = total = 0
        for blocks in iter_block_strings(colors, length):
            total += 1
            if decide_cfg(compress(blocks), with_derivation=False).solvable:
                good += 1
        out[length] = (good, total)
    return out


def cross_check(
    words: Iterator[Word],
    reference: Callable[[Word], bool],
    candidate: Callable[[Word], bool],
    limit: int = 20,
) -> list[Word]:
    """Words where two deciders disagree, up to limit of them."""
    mismatches = []
    for word in words:
        if reference(word) != candidate(word):
            mismatches.append(word)
            if len(mismatches) >= limit:
                break
    return mismatches


def random_two_color_word(blocks: int, rng: Random, max_run: int = 2) -> Word:
    """Random two-color word with the given block count and short runs.

    Short runs keep singleton stretches frequent, which is where the
    two-color decision logic actually branches; long monochrome runs
    would make almost every sample trivially solvable.
    """
    runs: list[tuple[int, int]] = []
    color = rng.randrange(2)
    left = blocks
    while left > 0:
        run = min(left, rng.randint(1, max_run))
        runs.append((color, run))
        color ^= 1
        left -= run
    return Word(tuple(runs))


def random_board(width: int, height: int, colors: int, rng: Random) -> Board:
    """Random fully filled board, uniform cell colors."""
    return board_from_columns(
        [[rng.randrange(colors) for _ in range(height)] for _ in range(width)]
    )
