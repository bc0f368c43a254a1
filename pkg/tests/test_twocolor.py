"""Linear two-color decision against the grammar, plus plan properties."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from clickomania.engine import click, group_at, replay
from clickomania.grammar import decide_cfg
from clickomania.twocolor import (
    _odd_prefix_flags,
    certifying_split,
    decide_two_color,
    longest_singleton_stretch,
    two_color_solution,
)
from clickomania.words import word_from_runs, word_from_text, word_to_board


def alternating(sizes):
    return word_from_runs([(i % 2, s) for i, s in enumerate(sizes)])


def iter_size_words(size_choices, max_groups):
    yield alternating(())
    for n in range(1, max_groups + 1):
        for sizes in itertools.product(size_choices, repeat=n):
            yield alternating(sizes)


def test_three_colors_rejected():
    word = word_from_text("abc")
    with pytest.raises(ValueError):
        decide_two_color(word)
    with pytest.raises(ValueError):
        certifying_split(word)
    with pytest.raises(ValueError):
        two_color_solution(word)


def test_frozen_decisions():
    assert decide_two_color(word_from_text("")) is True
    assert decide_two_color(word_from_text("a:4")) is True
    assert decide_two_color(word_from_text("a:1,b:2,a:1")) is True
    assert decide_two_color(word_from_text("a:1,b:1,a:1")) is False
    assert decide_two_color(word_from_text("ab")) is False
    assert decide_two_color(word_from_text("aabb")) is True


def test_longest_singleton_stretch():
    assert longest_singleton_stretch([]) == 0
    assert longest_singleton_stretch([2, 3]) == 0
    assert longest_singleton_stretch([1]) == 1
    assert longest_singleton_stretch([1, 1, 2, 1]) == 2
    assert longest_singleton_stretch([2, 1, 1, 1]) == 3


def test_matches_cfg_exhaustive():
    checked = 0
    for choices, max_groups in (((1, 2), 12), ((1, 2, 3), 8)):
        for word in iter_size_words(choices, max_groups):
            checked += 1
            expected = decide_cfg(word, with_derivation=False).solvable
            assert decide_two_color(word) == expected, word
    assert checked > 15000


def test_certifying_split_properties():
    for word in iter_size_words((1, 2, 3), 8):
        n = word.group_count
        cut = certifying_split(word)
        if not decide_two_color(word):
            assert cut is None
            continue
        if n == 0 or n % 2 == 1:
            assert cut == 0
            continue
        assert cut % 2 == 1 and 0 < cut < n
        halves_solvable = [
            decide_two_color(word_from_runs(word.runs[:i]))
            and decide_two_color(word_from_runs(word.runs[i:]))
            for i in range(1, n, 2)
        ]
        assert halves_solvable[(cut - 1) // 2]
        # smallest such cut
        assert not any(halves_solvable[: (cut - 1) // 2])


def _walk_moves(board, solution):
    """Click through a solution, yielding (index, board, group) per move."""
    for idx, move in enumerate(solution):
        target = group_at(board, move.cell)
        yield idx, board, target
        board = click(board, move.cell)


def test_solutions_replay_and_stay_internal():
    """Plans clear the board, touching the edge groups only at the end.

    Until the final two clicks a plan never removes the group holding the
    current bottom or top block, so the word's ends survive to the last
    merges.
    """
    solvable = 0
    for word in iter_size_words((1, 2, 3), 8):
        solution = two_color_solution(word)
        if not decide_two_color(word):
            assert solution is None
            continue
        solvable += 1
        board = word_to_board(word)
        final, removed = replay(board, solution)
        assert final.is_empty and removed == word.length
        for idx, current, target in _walk_moves(board, solution):
            if idx >= len(solution) - 2:
                continue
            ends = {(0, 0), (0, current.height - 1)}
            assert not (ends & set(target.cells)), word
    assert solvable > 2000


def test_row_orientation_replays():
    for text in ("a:1,b:2,a:1", "aabb", "a:2,b:2,a:1,b:2"):
        word = word_from_text(text)
        solution = two_color_solution(word, orientation="row")
        final, removed = replay(word_to_board(word, "row"), solution)
        assert final.is_empty and removed == word.length


@given(st.lists(st.integers(min_value=1, max_value=4), max_size=25))
def test_prefix_flags_match_full_decision(sizes):
    flags = _odd_prefix_flags(sizes)
    for p in range(1, len(sizes) + 1, 2):
        assert flags[p] == decide_two_color(alternating(sizes[:p]))


def test_solvable_words_respect_singleton_bounds():
    """Solvable words keep runs of singleton groups short.

    A maximal stretch of L consecutive size-1 groups needs L matching
    groups on one side to absorb it, so 2L <= n-1 when the stretch
    touches an end and 2L <= n-2 when it sits strictly inside.
    """
    for word in iter_size_words((1, 2), 11):
        if not decide_two_color(word):
            continue
        sizes = [count for _, count in word.runs]
        n = len(sizes)
        for start, run in _singleton_stretches(sizes):
            touches_end = start == 0 or start + run == n
            limit = n - 1 if touches_end else n - 2
            assert 2 * run <= limit, word


def _singleton_stretches(sizes):
    start = None
    for pos, size in enumerate(sizes):
        if size == 1 and start is None:
            start = pos
        elif size != 1 and start is not None:
            yield start, pos - start
            start = None
    if start is not None:
        yield start, len(sizes) - start
