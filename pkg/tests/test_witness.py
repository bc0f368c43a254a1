from __future__ import annotations

from clickomania.engine import group_at, remaining_blocks, replay
from clickomania.enumeration import iter_words
from clickomania.grammar import decide_cfg
from clickomania.witness import extract_group_clicks, extract_solution
from clickomania.words import word_from_text, word_to_board


def test_simple_extraction_replays_clean():
    word = word_from_text("aabb")
    solution = extract_solution(word)
    board = word_to_board(word)
    final, removed = replay(board, solution)
    assert final.is_empty and removed == 4


def test_unsolvable_words_have_no_witness():
    assert extract_solution(word_from_text("a:1,b:1,a:1")) is None
    assert extract_group_clicks(word_from_text("ab")) is None


def test_empty_word_has_empty_witness():
    solution = extract_solution(word_from_text(""))
    assert solution is not None and len(solution) == 0


def test_row_orientation_replays_clean():
    word = word_from_text("a:1,b:2,a:1")
    solution = extract_solution(word, orientation="row")
    board = word_to_board(word, "row")
    final, removed = replay(board, solution)
    assert final.is_empty and removed == 4


def test_extraction_exhaustive_small():
    """Witnesses replay to empty and finish at the left edge late.

    Over every word up to 10 blocks on two colors and 7 on three, any
    word the grammar accepts must yield clicks that clear its board, and
    the click that removes the original bottom block comes within the
    final two.
    """
    checked = solvable = 0
    for colors, max_blocks in ((2, 10), (3, 7)):
        for word in iter_words(colors, max_blocks):
            checked += 1
            if not decide_cfg(word, with_derivation=False).solvable:
                assert extract_solution(word) is None
                continue
            solvable += 1
            solution = extract_solution(word)
            board = word_to_board(word)
            # track the group that currently contains the original bottom
            # block; it must be removed in the last two clicks
            final, removed = replay(board, solution)
            assert final.is_empty and removed == word.length
            if word.length == 0:
                continue
            when = _when_bottom_block_removed(board, solution)
            assert when >= len(solution) - 2, word
    assert solvable > 0 and checked > 3000


def _when_bottom_block_removed(board, solution):
    from clickomania.engine import click

    for idx, move in enumerate(solution):
        target = group_at(board, move.cell)
        if (0, 0) in target.cells:
            return idx
        board = click(board, move.cell)
        assert board.columns, "bottom block vanished without a recorded click"
    raise AssertionError("bottom block never removed")
