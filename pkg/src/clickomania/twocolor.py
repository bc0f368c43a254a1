"""Linear-time solvability and solutions for two-color words.

With two colors the group colors strictly alternate, so a word is just
its sequence of group sizes.  Solvability of an odd-length size sequence
hinges on its longest stretch of consecutive singleton groups: short
stretches leave enough doubles to absorb every singleton, an overlong
stretch strands one, and at the tipping point the middle group decides.
An even-length word must split into two independently solvable halves of
odd length.

Plans click one group at a time.  Removing a group always merges its two
neighbors (they share the other color), which keeps the sequence an
alternating word two groups shorter.  All clicks before a half's final
one stay clear of its outermost groups, so the two halves of an even
split never interfere until their closing clicks.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .engine import Solution
from .witness import solution_from_group_clicks
from .words import Word


def _check_two_colors(word: Word) -> None:
    if len(word.colors()) > 2:
        raise ValueError("word uses more than two colors")


def longest_singleton_stretch(sizes: Sequence[int]) -> int:
    """Length of the longest run of consecutive 1s."""
    best = cur = 0
    for s in sizes:
        cur = cur + 1 if s == 1 else 0
        if cur > best:
            best = cur
    return best


def _odd_prefix_flags(sizes: Sequence[int]) -> list[int]:
    """flags[p] for odd p: whether the first p groups form a solvable word.

    One scan; p compares twice the longest singleton stretch seen so far
    against itself, with the middle group breaking the borderline case.
    """
    n = len(sizes)
    flags = [False] * (n + 1)
    best = 0
    run_start = 0
    for pos in range(n):
        if sizes[pos] == 1:
            if pos - run_start + 1 > best:
                best = pos - run_start + 1
        else:
            run_start = pos + 1
        p = pos + 1
        if p & 1:
            doubled = 2 * best
            if doubled <= p - 3:
                flags[p] = True
            elif doubled >= p + 1:
                flags[p] = False
            else:
                flags[p] = sizes[(p + 1) // 2 - 1] >= 2
    return flags


def decide_two_color(word: Word) -> bool:
    """Whether a two-color word is fully clearable.  Linear time."""
    _check_two_colors(word)
    sizes = [count for _, count in word.runs]
    n = len(sizes)
    if n == 0:
        return True
    if n & 1:
        return _odd_prefix_flags(sizes)[n]
    forward = _odd_prefix_flags(sizes)
    backward = _odd_prefix_flags(sizes[::-1])
    return any(forward[i] and backward[n - i] for i in range(1, n, 2))


def certifying_split(word: Word) -> Optional[int]:
    """For a solvable even word, the smallest odd group index to cut at.

    Returns 0 for solvable odd or empty words and None for unsolvable
    ones, so a non-None value always describes a valid decomposition.
    """
    _check_two_colors(word)
    sizes = [count for _, count in word.runs]
    n = len(sizes)
    if n == 0:
        return 0
    if n & 1:
        return 0 if _odd_prefix_flags(sizes)[n] else None
    forward = _odd_prefix_flags(sizes)
    backward = _odd_prefix_flags(sizes[::-1])
    for i in range(1, n, 2):
        if forward[i] and backward[n - i]:
            return i
    return None


Entry = tuple[int, frozenset[int]]  # (size, original group indices)


def _click(entries: list[Entry], at: int) -> frozenset[int]:
    """Remove entry at, merging its neighbors, and return its group set."""
    size, gids = entries[at]
    if size < 2:
        raise RuntimeError("plan tried to click a singleton group")
    left = entries[: at - 1] if at > 0 else []
    right = entries[at + 2 :]
    middle: list[Entry] = []
    if 0 < at < len(entries) - 1:
        (ls, lg), (rs, rg) = entries[at - 1], entries[at + 1]
        middle = [(ls + rs, lg | rg)]
    elif at > 0:
        middle = [entries[at - 1]]
    elif at < len(entries) - 1:
        middle = [entries[at + 1]]
    entries[:] = left + middle + right
    return gids


def _odd_plan(entries: list[Entry]) -> list[frozenset[int]]:
    """Clicks clearing an odd-length solvable alternating word.

    Strategy: click the middle group when it can be clicked; otherwise
    the middle sits in a stretch of singletons, and clicking the flanking
    group on the nearer end of the stretch shrinks it while keeping the
    word solvable.  Every click before the last stays off the outermost
    groups.
    """
    clicks: list[frozenset[int]] = []
    while entries:
        n = len(entries)
        if n == 1:
            clicks.append(_click(entries, 0))
            break
        m = (n - 1) // 2
        if entries[m][0] >= 2:
            clicks.append(_click(entries, m))
            continue
        lo = m
        while lo > 0 and entries[lo - 1][0] == 1:
            lo -= 1
        hi = m
        while hi < n - 1 and entries[hi + 1][0] == 1:
            hi += 1
        if lo == 0 or hi == n - 1:
            raise RuntimeError("plan ran on an unsolvable word")
        target = lo - 1 if hi - m <= m - lo else hi + 1
        clicks.append(_click(entries, target))
    return clicks


def two_color_group_clicks(word: Word) -> Optional[list[frozenset[int]]]:
    """Full-clearing clicks as original group index sets, or None."""
    _check_two_colors(word)
    cut = certifying_split(word)
    if cut is None:
        return None
    n = word.group_count
    if n == 0:
        return []
    entries = [(count, frozenset([g])) for g, (_, count) in enumerate(word.runs)]
    if cut == 0:
        return _odd_plan(entries)
    left = _odd_plan(entries[:cut])
    right = _odd_plan(entries[cut:])
    return left[:-1] + right[:-1] + [left[-1], right[-1]]


def two_color_solution(word: Word, orientation: str = "column") -> Optional[Solution]:
    """A replayable full-clearing solution for a two-color word, or None."""
    clicks = two_color_group_clicks(word)
    if clicks is None:
        return None
    return solution_from_group_clicks(word, clicks, orientation)
