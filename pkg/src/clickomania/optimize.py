"""Maximum removable blocks of a one-column puzzle.

Any click sequence partitions the word's groups into stretches that get
fully cleared and groups that never move, because a clearable stretch can
be cleared without disturbing its neighbors and adjacent clearable
stretches concatenated are again clearable.  The best total is therefore
a prefix dynamic program over group boundaries: either the last group is
abandoned, or some suffix stretch of groups is clearable and its whole
block count is banked.

The witness replays left to right, one extracted clearing per chosen
stretch.  Stretch edges never color-match their surviving neighbors, and
each extraction keeps its own edge groups alive until its final clicks,
so the clearings compose without accidental merges across stretch
boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Solution
from .grammar import RUN_CAP, derivation_from_spans, span_table
from .witness import capped_group_of, clicks_for_derivation, solution_from_group_clicks
from .words import Word, cap_runs, expand


@dataclass(frozen=True)
class OptimizeResult:
    """Best removable block count with a witness achieving it exactly."""

    removable: int
    total: int
    cleared_stretches: tuple[tuple[int, int], ...]
    group_clicks: tuple[frozenset[int], ...]
    solution: Solution

    @property
    def cleared_all(self) -> bool:
        return self.removable == self.total


def optimize_word(word: Word, orientation: str = "column") -> OptimizeResult:
    """Maximize removed blocks; the witness replays to exactly that count."""
    n = word.group_count
    capped = expand(cap_runs(word, RUN_CAP)) if n else []
    table = span_table(capped)
    offsets = [0] * (n + 1)
    prefix_blocks = [0] * (n + 1)
    for g, (_, count) in enumerate(word.runs):
        offsets[g + 1] = offsets[g] + min(count, RUN_CAP)
        prefix_blocks[g + 1] = prefix_blocks[g] + count

    best = [0] * (n + 1)
    take: list[int] = [-1] * (n + 1)  # stretch start banked at j, -1 = abandon
    for j in range(1, n + 1):
        best[j] = best[j - 1]
        take[j] = -1
        for g in range(j):
            if table.solvable(offsets[g], offsets[j]):
                value = best[g] + prefix_blocks[j] - prefix_blocks[g]
                if value > best[j]:
                    best[j] = value
                    take[j] = g

    stretches: list[tuple[int, int]] = []
    j = n
    while j > 0:
        g = take[j]
        if g < 0:
            j -= 1
        else:
            stretches.append((g, j))
            j = g
    stretches.reverse()

    owner = capped_group_of(word)
    group_clicks: list[frozenset[int]] = []
    for g, h in stretches:
        node = derivation_from_spans(table, offsets[g], offsets[h])
        for run in clicks_for_derivation(node, capped, offsets[g], offsets[h]):
            group_clicks.append(frozenset(owner[p] for p in run))
    solution = solution_from_group_clicks(word, group_clicks, orientation)
    return OptimizeResult(
        removable=best[n],
        total=prefix_blocks[n],
        cleared_stretches=tuple(stretches),
        group_clicks=tuple(group_clicks),
        solution=solution,
    )


def max_removable_word(word: Word) -> int:
    """The best value alone, skipping witness construction."""
    n = word.group_count
    capped = expand(cap_runs(word, RUN_CAP)) if n else []
    table = span_table(capped)
    offsets = [0] * (n + 1)
    prefix_blocks = [0] * (n + 1)
    for g, (_, count) in enumerate(word.runs):
        offsets[g + 1] = offsets[g] + min(count, RUN_CAP)
        prefix_blocks[g + 1] = prefix_blocks[g] + count
    best = [0] * (n + 1)
    for j in range(1, n + 1):
        best[j] = best[j - 1]
        for g in range(j):
            if table.solvable(offsets[g], offsets[j]):
                value = best[g] + prefix_blocks[j] - prefix_blocks[g]
                if value > best[j]:
                    best[j] = value
    return best[n]
