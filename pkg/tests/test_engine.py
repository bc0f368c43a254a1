from __future__ import annotations

from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clickomania.engine import (
    Board,
    BoardParseError,
    EMPTY_BOARD,
    IllegalMoveError,
    board_from_columns,
    canonical_key,
    click,
    find_groups,
    group_at,
    legal_moves,
    parse_board,
    remaining_blocks,
    render_board,
    replay,
    Solution,
)
from clickomania.enumeration import random_board


def test_parse_render_roundtrip():
    text = "aab\nbab"
    board = parse_board(text)
    assert render_board(board) == text
    assert board.width == 3 and board.height == 2
    assert remaining_blocks(board) == 6


def test_parse_empty_text_is_empty_board():
    assert parse_board("").is_empty
    assert parse_board("\n\n").is_empty
    assert render_board(EMPTY_BOARD) == ""


def test_parse_rejects_ragged_rows():
    with pytest.raises(BoardParseError):
        parse_board("ab\nabc")


def test_parse_rejects_unknown_characters():
    with pytest.raises(BoardParseError):
        parse_board("a?\nab")


def test_parse_rejects_floating_blocks():
    with pytest.raises(BoardParseError):
        parse_board("a\n.\na")


def test_parse_header_declares_palette():
    board = parse_board("#colors=2\nab\nab")
    assert board.width == 2
    with pytest.raises(BoardParseError):
        parse_board("#colors=2\nac\nab")


def test_ragged_columns_allowed_via_empty_cells():
    board = parse_board(".b\nab")
    assert board.width == 2
    assert len(board.columns[0]) == 1 and len(board.columns[1]) == 2


def test_board_rejects_stored_empty_column():
    with pytest.raises(ValueError):
        Board(((), (0,)))


def test_board_from_columns_excises_empty_columns():
    board = board_from_columns([[0, 0], [], [1]])
    assert board.width == 2


def test_find_groups_on_l_shape_board():
    board = parse_board("aab\nbab")
    groups = find_groups(board)
    assert len(groups) == 3
    by_rep = {g.representative: g for g in groups}
    assert by_rep[(0, 0)].cells == frozenset({(0, 0)})
    assert by_rep[(0, 1)].cells == frozenset({(0, 1), (1, 0), (1, 1)})
    assert by_rep[(2, 0)].cells == frozenset({(2, 0), (2, 1)})
    assert [g.representative for g in groups] == [(0, 0), (0, 1), (2, 0)]


def test_group_at_matches_find_groups():
    board = parse_board("aab\nbab")
    g = group_at(board, (1, 1))
    assert g is not None and g.size == 3
    assert group_at(board, (9, 9)) is None


def test_click_removes_group_and_settles():
    board = parse_board("aab\nbab")
    after = click(board, (0, 1))
    assert render_board(after) == ".b\nbb"
    assert remaining_blocks(after) == 3


def test_click_excises_empty_columns():
    board = parse_board("ab\nab")
    after = click(board, (0, 0))
    assert after.width == 1
    assert render_board(after) == "b\nb"


def test_click_drops_blocks_straight_down():
    board = parse_board("a\nb\nb\na")
    after = click(board, (0, 1))
    assert render_board(after) == "a\na"


def test_click_rejects_singletons_and_empty_cells():
    board = parse_board("aab\nbab")
    with pytest.raises(IllegalMoveError):
        click(board, (0, 0))
    with pytest.raises(IllegalMoveError):
        click(board, (5, 5))
    with pytest.raises(IllegalMoveError):
        click(EMPTY_BOARD, (0, 0))


def test_legal_moves_one_per_clickable_group():
    board = parse_board("aab\nbab")
    moves = {m.cell for m in legal_moves(board)}
    assert moves == {(0, 1), (2, 0)}
    assert legal_moves(EMPTY_BOARD) == []


def test_replay_counts_removed_blocks():
    board = parse_board("aab\nbab")
    (move,) = [m for m in legal_moves(board) if m.cell == (2, 0)]
    final, removed = replay(board, Solution((move,)))
    assert removed == 2
    assert final.width == 2


def test_canonical_key_distinguishes_colors_and_mirrors():
    assert canonical_key(parse_board("aa")) != canonical_key(parse_board("bb"))
    board = parse_board("ab\nab")
    mirror = parse_board("ba\nba")
    assert canonical_key(board) != canonical_key(mirror)


def test_canonical_key_is_click_order_independent():
    board = parse_board("aabb\naabb")
    via_left = click(click(board, (0, 0)), (0, 0))
    via_right = click(click(board, (2, 0)), (0, 0))
    assert via_left == via_right
    assert canonical_key(via_left) == canonical_key(via_right)


def test_canonical_key_handles_wide_palettes():
    small = board_from_columns([[0, 1]])
    huge = board_from_columns([[0, 300]])
    assert canonical_key(small) != canonical_key(huge)


@given(st.integers(0, 2**32 - 1))
def test_click_conserves_blocks(seed):
    rng = Random(seed)
    board = random_board(rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 3), rng)
    moves = legal_moves(board)
    if not moves:
        return
    move = rng.choice(moves)
    size = group_at(board, move.cell).size
    after = click(board, move.cell)
    assert size >= 2
    assert remaining_blocks(after) == remaining_blocks(board) - size
    # settled normal form survives a text roundtrip
    assert parse_board(render_board(after)) == after
