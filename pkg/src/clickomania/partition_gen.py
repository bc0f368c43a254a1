"""Two-column boards that encode number partitioning puzzles.

An instance asks whether 3m positive elements summing to m times a target
can be split into m triples that each hit the target exactly.  Its board
uses five colors in two columns of uneven height.  The left column is an
alternating black/white core that mirrors itself around the top so it can
collapse pairwise from the center, but only once every red indicator
wedged between its chunks is gone.  The right column stacks one green bar
of height 4m times each element, separated by single blue cells, then one
three-cell section per set to assemble: a red matcher with two blues
above it.  A red indicator can only be clicked when the right column has
shrunk enough to land a matcher beside it, and the required drop is
exactly one target worth of element bars per set.

Boards of yes instances can be cleared completely and boards of no
instances cannot; deciding that is exactly as hard as the partitioning
question, which is why these make good stress inputs for the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random
from typing import Optional

from .engine import Board, COLOR_OF_CHAR, board_from_columns

BLACK = COLOR_OF_CHAR["k"]
WHITE = COLOR_OF_CHAR["w"]
RED = COLOR_OF_CHAR["r"]
BLUE = COLOR_OF_CHAR["b"]
GREEN = COLOR_OF_CHAR["g"]


@dataclass(frozen=True)
class PartitionInstance:
    """3m positive elements with triple target sum `target`."""

    target: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) == 0 or len(self.elements) % 3 != 0:
            raise ValueError("element count must be a positive multiple of 3")
        if any(a < 1 for a in self.elements):
            raise ValueError("elements must be positive")
        if sum(self.elements) != self.target * self.m:
            raise ValueError(
                f"elements sum to {sum(self.elements)}, "
                f"expected target*m = {self.target * self.m}"
            )

    @property
    def m(self) -> int:
        return len(self.elements) // 3

    @property
    def hard_regime(self) -> bool:
        """Whether every element is strictly between target/4 and target/2.

        In that regime every target-hitting subset has exactly three
        elements, the classically hard shape of the problem.
        """
        return all(4 * a > self.target and 2 * a < self.target for a in self.elements)


def random_instance(m: int, target: int, rng: Random) -> PartitionInstance:
    """A uniform random composition of target*m into 3m positive parts."""
    if target < 3:
        raise ValueError("target must be at least 3 for positive elements")
    total = target * m
    cuts = sorted(rng.sample(range(1, total), 3 * m - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return PartitionInstance(target, tuple(parts))


def find_partition(
    instance: PartitionInstance,
) -> Optional[tuple[tuple[int, ...], ...]]:
    """Search for a valid split into target-sum triples.  Exponential.

    Returns the triples as index tuples, or None.  Only sensible for the
    small instances used to sanity-check the board constructions.
    """
    indices = list(range(3 * instance.m))

    def solve(remaining: list[int]) -> Optional[list[tuple[int, ...]]]:
        if not remaining:
            return []
        first = remaining[0]
        for pair in combinations(remaining[1:], 2):
            triple = (first,) + pair
            if sum(instance.elements[i] for i in triple) != instance.target:
                continue
            used = set(triple)
            rest = solve([i for i in remaining if i not in used])
            if rest is not None:
                return [triple] + rest
        return None

    result = solve(indices)
    return tuple(result) if result is not None else None


def _core_length(m: int, target: int) -> int:
    """Black/white cells below the mirror point of the left column."""
    return 3 * m + (m - 1) * (4 * m * target - 1)


def height_bound(instance: PartitionInstance) -> int:
    """Guaranteed ceiling on both column heights."""
    m, t = instance.m, instance.target
    return 8 * m * m * t + 6 * m


def partition_board(instance: PartitionInstance) -> Board:
    """The two-column board encoding the instance."""
    m, t = instance.m, instance.target
    left: list[int] = []
    phase = 0

    def core_cell() -> int:
        nonlocal phase
        color = BLACK if phase % 2 == 0 else WHITE
        phase += 1
        return color

    for _ in range(3 * m):
        left.append(core_cell())
    for _ in range(m - 1):
        for _ in range(4 * m * t - 1):
            left.append(core_cell())
        left.append(RED)
    half = phase
    for k in range(half - 1, -1, -1):
        left.append(BLACK if k % 2 == 0 else WHITE)

    right: list[int] = [GREEN] * (4 * m * instance.elements[0])
    for a in instance.elements[1:]:
        right.append(BLUE)
        right.extend([GREEN] * (4 * m * a))
    for _ in range(m - 1):
        right.extend([RED, BLUE, BLUE])
    return board_from_columns([left, right])


def validate_partition_board(board: Board, instance: PartitionInstance) -> bool:
    """Re-derive the whole layout from the instance and check every cell.

    Walks both columns independently of the constructor: indicator
    placement, core alternation and mirroring, element bars recovered by
    run lengths, set sections, and the height ceiling.
    """
    m, t = instance.m, instance.target
    if board.width != 2:
        return False
    left, right = board.columns
    half = _core_length(m, t)
    if len(left) != 2 * half + (m - 1):
        return False
    if len(right) != 4 * m * m * t + 6 * m - 4:
        return False
    if board.height > height_bound(instance):
        return False

    reds = [idx for idx, c in enumerate(left) if c == RED]
    expected_reds = [3 * m + k * (4 * m * t - 1) + (k - 1) for k in range(1, m)]
    if reds != expected_reds:
        return False
    core = [c for c in left if c != RED]
    if len(core) != 2 * half:
        return False
    for idx in range(half):
        if core[idx] != (BLACK if idx % 2 == 0 else WHITE):
            return False
    for idx in range(half):
        if core[half + idx] != core[half - 1 - idx]:
            return False

    pos = 0
    seen: list[int] = []
    for e in range(3 * m):
        if e > 0:
            if pos >= len(right) or right[pos] != BLUE:
                return False
            pos += 1
        run = 0
        while pos < len(right) and right[pos] == GREEN:
            run += 1
            pos += 1
        if run == 0 or run % (4 * m) != 0:
            return False
        seen.append(run // (4 * m))
    for _ in range(m - 1):
        if tuple(right[pos : pos + 3]) != (RED, BLUE, BLUE):
            return False
        pos += 3
    if pos != len(right):
        return False
    return tuple(seen) == instance.elements
