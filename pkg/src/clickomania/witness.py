"""Turning derivations into replayable click sequences.

Extraction runs on a live copy of the capped block string.  Each grammar
case first clears its inner parts, then sweeps up the leftover boundary
runs.  Children are always told to spare the runs containing their span
edges (the dl and dr flags), because those blocks either pair up with the
enclosing flanks or belong to a neighboring part; clicking them early
would strand a flank as an unremovable singleton.  The sweep clicks
interior leftovers before boundary ones so that flank blocks merge before
their run is finally removed.

With both flags off at the top level everything is swept, and the runs
containing the first and last block fall in the final clicks.  Clicks are
recorded as sets of original group indices and materialized into board
moves by replaying the uncapped word.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .engine import Move, Solution
from .grammar import RUN_CAP, Derivation, decide_cfg
from .words import Word


class _Line:
    """Live blocks of a capped span; clicking removes a maximal run."""

    def __init__(self, positions: Sequence[int], colors: Sequence[int]):
        self.blocks = [(p, colors[p]) for p in positions]

    def alive(self, pos: int) -> bool:
        return any(p == pos for p, _ in self.blocks)

    def run_of(self, pos: int) -> list[int]:
        """Positions of the maximal equal-color run containing pos."""
        idx = next(k for k, (p, _) in enumerate(self.blocks) if p == pos)
        color = self.blocks[idx][1]
        lo = idx
        while lo > 0 and self.blocks[lo - 1][1] == color:
            lo -= 1
        hi = idx
        while hi + 1 < len(self.blocks) and self.blocks[hi + 1][1] == color:
            hi += 1
        return [p for p, _ in self.blocks[lo : hi + 1]]

    def click(self, pos: int) -> list[int]:
        run = self.run_of(pos)
        if len(run) < 2:
            raise RuntimeError(f"attempted click on singleton run at {pos}")
        gone = set(run)
        self.blocks = [b for b in self.blocks if b[0] not in gone]
        return run


def _finish(
    reps: Sequence[int],
    span: tuple[int, int],
    dl: bool,
    dr: bool,
    line: _Line,
    clicks: list[list[int]],
) -> None:
    """Sweep leftover runs at reps, interior first, sparing flagged edges."""
    i, j = span
    while True:
        candidates = []
        seen: set[int] = set()
        for r in reps:
            if not line.alive(r):
                continue
            run = line.run_of(r)
            if run[0] in seen:
                continue
            seen.add(run[0])
            touches_left = i in run
            touches_right = (j - 1) in run
            if (dl and touches_left) or (dr and touches_right):
                continue
            boundary = touches_left or touches_right
            candidates.append(((boundary, run[0]), run[0]))
        if not candidates:
            return
        candidates.sort()
        clicks.append(line.click(candidates[0][1]))


def _emit(
    node: Derivation, dl: bool, dr: bool, line: _Line, clicks: list[list[int]]
) -> None:
    if node.kind == "empty":
        return
    i, j = node.span
    if node.kind == "split":
        left, right = node.parts
        _emit(left, dl, True, line, clicks)
        _emit(right, True, dr, line, clicks)
        _finish([node.mid - 1, node.mid], (i, j), dl, dr, line, clicks)
    elif node.kind == "wrap2":
        (inner,) = node.parts
        _emit(inner, True, True, line, clicks)
        _finish([i + 1, j - 2, i], (i, j), dl, dr, line, clicks)
    elif node.kind == "wrap3":
        first, second = node.parts
        p = node.mid
        _emit(first, True, True, line, clicks)
        _emit(second, True, True, line, clicks)
        _finish([i + 1, p - 1, p + 1, j - 2, i], (i, j), dl, dr, line, clicks)
    else:
        raise AssertionError(f"unexpected derivation kind {node.kind}")


def clicks_for_derivation(
    node: Derivation, capped: Sequence[int], lo: int, hi: int
) -> list[list[int]]:
    """Clearing clicks (capped position runs) for a derivation over [lo, hi)."""
    line = _Line(range(lo, hi), capped)
    clicks: list[list[int]] = []
    _emit(node, False, False, line, clicks)
    if line.blocks:
        raise RuntimeError(f"extraction left blocks behind in span {(lo, hi)}")
    return clicks


def capped_group_of(word: Word) -> list[int]:
    """Original group index of each capped block position."""
    out: list[int] = []
    for g, (_, count) in enumerate(word.runs):
        out.extend([g] * min(count, RUN_CAP))
    return out


def extract_group_clicks(word: Word) -> Optional[list[frozenset[int]]]:
    """A full-clearing click sequence as sets of original group indices.

    None when the word is not solvable.  The sequence clears the word with
    the run containing the first block removed in one of the last two
    clicks, and likewise for the last block.
    """
    decision = decide_cfg(word, with_derivation=True)
    if not decision.solvable:
        return None
    position_clicks = clicks_for_derivation(
        decision.derivation, decision.capped, 0, len(decision.capped)
    )
    owner = capped_group_of(word)
    return [frozenset(owner[p] for p in run) for run in position_clicks]


def solution_from_group_clicks(
    word: Word, group_clicks: Sequence[frozenset[int]], orientation: str = "column"
) -> Solution:
    """Materialize group-index clicks as moves on the word's board.

    Each click must cover exactly one maximal run of the surviving blocks;
    the move points at its lowest (column) or leftmost (row) block.
    """
    if orientation not in ("column", "row"):
        raise ValueError(f"unknown orientation {orientation!r}")
    blocks: list[tuple[int, int]] = []
    for g, (color, count) in enumerate(word.runs):
        blocks.extend([(g, color)] * count)
    moves = []
    for gids in group_clicks:
        idxs = [k for k, (g, _) in enumerate(blocks) if g in gids]
        if not idxs:
            raise RuntimeError("click refers only to removed groups")
        if idxs != list(range(idxs[0], idxs[-1] + 1)):
            raise RuntimeError(f"click on non-contiguous groups {sorted(gids)}")
        color = blocks[idxs[0]][1]
        if any(blocks[k][1] != color for k in idxs):
            raise RuntimeError(f"click spans colors in groups {sorted(gids)}")
        if len(idxs) < 2:
            raise RuntimeError(f"click of single block in groups {sorted(gids)}")
        if idxs[0] > 0 and blocks[idxs[0] - 1][1] == color:
            raise RuntimeError("click is not a maximal run on the left")
        if idxs[-1] + 1 < len(blocks) and blocks[idxs[-1] + 1][1] == color:
            raise RuntimeError("click is not a maximal run on the right")
        at = idxs[0]
        moves.append(Move((0, at) if orientation == "column" else (at, 0)))
        dead = set(idxs)
        blocks = [b for k, b in enumerate(blocks) if k not in dead]
    return Solution(tuple(moves))


def extract_solution(word: Word, orientation: str = "column") -> Optional[Solution]:
    """A replayable full-clearing solution, or None if the word keeps blocks."""
    group_clicks = extract_group_clicks(word)
    if group_clicks is None:
        return None
    return solution_from_group_clicks(word, group_clicks, orientation)
