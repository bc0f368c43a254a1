"""Exhaustive search over click sequences, used as ground truth.

The oracle explores the full game tree with memoization on canonical board
keys and branch-and-bound pruning against the best sequence found so far.
Within budget the reported maximum is exact; once the state or time budget
trips, the result is marked inexact and only the witness (a replayable
click sequence) can still be trusted.

Memo entries are stored only for positions whose subtree was explored
completely, so a pruned or truncated branch never poisons the table.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .engine import (
    Board,
    Cell,
    Move,
    Solution,
    canonical_key,
    click,
    find_groups,
    remaining_blocks,
)


@dataclass
class Budget:
    """Limits for one oracle search."""

    max_states: int = 1_000_000
    max_time: float = 10.0


@dataclass
class OracleResult:
    max_removed: int
    witness: Solution
    exact: bool
    total: int
    states: int = 0
    elapsed: float = 0.0

    @property
    def solved(self) -> bool:
        """True when the witness clears the whole board."""
        return self.max_removed == self.total


@dataclass
class _Search:
    budget: Budget
    use_table: bool
    total: int
    memo: dict[bytes, tuple[int, tuple[Cell, ...]]] = field(default_factory=dict)
    best_value: int = -1
    best_witness: tuple[Cell, ...] = ()
    states: int = 0
    started: float = 0.0
    truncated: bool = False
    done: bool = False

    def _tick(self) -> None:
        self.states += 1
        if self.states > self.budget.max_states:
            self.truncated = True
        elif self.states % 256 == 0:
            if time.monotonic() - self.started > self.budget.max_time:
                self.truncated = True

    def run(self, board: Board) -> None:
        self.started = time.monotonic()
        self._dfs(board, 0, ())

    def _dfs(
        self, board: Board, removed_above: int, path: tuple[Cell, ...]
    ) -> tuple[int, tuple[Cell, ...], bool]:
        """Returns (best removable from here, witness tail, subtree complete)."""
        if self.done or self.truncated:
            return 0, (), False
        key = canonical_key(board)
        if self.use_table:
            hit = self.memo.get(key)
            if hit is not None:
                value, tail = hit
                if removed_above + value > self.best_value:
                    self.best_value = removed_above + value
                    self.best_witness = path + tail
                    if self.best_value == self.total:
                        self.done = True
                return value, tail, True

        self._tick()
        if self.truncated:
            return 0, (), False

        if removed_above > self.best_value:
            self.best_value = removed_above
            self.best_witness = path
            if self.best_value == self.total:
                self.done = True
                return 0, (), True

        groups = [g for g in find_groups(board) if g.size >= 2]
        if not groups:
            if self.use_table:
                self.memo[key] = (0, ())
            return 0, (), True

        # Nothing below can beat the incumbent even with a full clear.
        if removed_above + remaining_blocks(board) <= self.best_value:
            return 0, (), False

        groups.sort(key=lambda g: (-g.size, g.representative))
        value = 0
        tail: tuple[Cell, ...] = ()
        complete = True
        for g in groups:
            cell = g.representative
            child = click(board, cell)
            sub_value, sub_tail, sub_complete = self._dfs(
                child, removed_above + g.size, path + (cell,)
            )
            complete = complete and sub_complete
            if g.size + sub_value > value:
                value = g.size + sub_value
                tail = (cell,) + sub_tail
            if self.done:
                # A full clear through this child is exact for this node too.
                if self.use_table and sub_complete:
                    self.memo[key] = (value, tail)
                return value, tail, sub_complete
            if self.truncated:
                return value, tail, False
        if complete and self.use_table:
            self.memo[key] = (value, tail)
        return value, tail, complete


def search(
    board: Board, budget: Optional[Budget] = None, use_table: bool = True
) -> OracleResult:
    """Best-effort maximum removable block count with a replayable witness."""
    budget = budget or Budget()
    total = remaining_blocks(board)
    limit = sys.getrecursionlimit()
    need = total // 2 + 128
    if need > limit:
        sys.setrecursionlimit(need)
    s = _Search(budget=budget, use_table=use_table, total=total)
    try:
        s.run(board)
    finally:
        if need > limit:
            sys.setrecursionlimit(limit)
    return OracleResult(
        max_removed=max(s.best_value, 0),
        witness=Solution.of(s.best_witness),
        exact=not s.truncated,
        total=total,
        states=s.states,
        elapsed=time.monotonic() - s.started,
    )


def max_removable(board: Board, budget: Optional[Budget] = None) -> int:
    return search(board, budget).max_removed


def is_solvable(board: Board, budget: Optional[Budget] = None) -> str:
    """'yes', 'no', or 'unknown' when the budget ran out undecided.

    A full-clear witness answers yes regardless of truncation; a definite
    no requires the exhaustive search to have completed.
    """
    result = search(board, budget)
    if result.solved:
        return "yes"
    if result.exact:
        return "no"
    return "unknown"


def best_move(board: Board, budget: Optional[Budget] = None) -> Optional[Move]:
    """First move of the best witness found, or None on a dead board."""
    result = search(board, budget)
    if len(result.witness) == 0:
        return None
    return result.witness.moves[0]
