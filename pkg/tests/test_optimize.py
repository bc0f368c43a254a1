from __future__ import annotations

from clickomania.engine import replay
from clickomania.enumeration import iter_words
from clickomania.grammar import decide_cfg
from clickomania.optimize import max_removable_word, optimize_word
from clickomania.oracle import search
from clickomania.words import word_from_text, word_to_board


def test_known_values():
    assert optimize_word(word_from_text("a:1,b:2,a:1,c:1")).removable == 4
    assert optimize_word(word_from_text("a:2,b:1,a:1,b:2,a:1")).removable == 6
    assert optimize_word(word_from_text("")).removable == 0
    assert optimize_word(word_from_text("a")).removable == 0
    assert optimize_word(word_from_text("ab")).removable == 0


def test_solvable_words_clear_completely():
    result = optimize_word(word_from_text("a:1,b:2,a:1"))
    assert result.cleared_all and result.removable == result.total == 4
    assert len(result.cleared_stretches) == 1


def test_witness_replays_to_claimed_count():
    word = word_from_text("a:2,b:1,a:1,b:2,a:1")
    result = optimize_word(word)
    final, removed = replay(word_to_board(word), result.solution)
    assert removed == result.removable == 6
    assert not final.is_empty


def test_row_orientation_witness():
    word = word_from_text("a:1,b:2,a:1,c:1")
    result = optimize_word(word, orientation="row")
    final, removed = replay(word_to_board(word, "row"), result.solution)
    assert removed == result.removable == 4


def test_max_removable_word_matches_full_result():
    for text in ("", "a", "a:1,b:2,a:1,c:1", "a:2,b:1,a:1,b:2,a:1"):
        word = word_from_text(text)
        assert max_removable_word(word) == optimize_word(word).removable


def test_against_search_exhaustive_small():
    """DP value equals exhaustive search; witnesses replay exactly.

    Also pins the equivalence: the DP clears everything precisely when
    the grammar accepts the word.
    """
    for colors, max_blocks in ((2, 9), (3, 6)):
        for word in iter_words(colors, max_blocks):
            result = optimize_word(word)
            truth = search(word_to_board(word))
            assert truth.exact
            assert result.removable == truth.max_removed, word
            final, removed = replay(word_to_board(word), result.solution)
            assert removed == result.removable
            assert result.cleared_all == decide_cfg(word, with_derivation=False).solvable
            assert result.cleared_all == (result.removable == result.total)
