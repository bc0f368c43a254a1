"""Five-column boards that encode 3-SAT formulas in three colors.

The two leftmost columns carry one tall section per variable, plus a
dummy section at the bottom; the three rightmost columns carry the
clauses.  Gray appears only on the clause side: a tall gray rectangle at
the bottom, one lone gray block just above it in the last column, and
one more lone gray block capping the middle clause column.  The puzzle
boils down to merging those two stray gray singletons into the
rectangle, which the white mass around them prevents until the clause
machinery has been worked through.

Each variable section stacks two white sliding groups of heights 2*h0
and h0 under the variable body, fenced by single black rows.  Clicking
away exactly one of the sliders drops every section above it by h0 or
2*h0, which is how a truth value is chosen.  The clause side is divided
into chunks of height 8*h0, one per clause, and each variable body
repeats the same chunk grid.  A chunk reserves one slot per variable;
the variable body carries a black key in its own slot, and a clause that
uses the variable carries a black-and-white lock in the matching slot of
its chunk, two chunk levels below the key for a positive literal and one
level below for a negated one.  Only the slide matching the literal's
sign brings a key flush with its lock so the pair can be clicked away.

Opening a lock for clause j removes b_j black blocks from the first
clause column.  Each chunk ends with a barrier: a single black block in
the middle clause column with a bomb block one column to its left,
b_1+..+b_j rows higher.  The bomb sinks level with its barrier exactly
when every clause below has had one lock opened, so the barriers come
down only along a satisfying assignment.  The constructions here are
emitted and checked structurally; deciding the boards is left to the
search, and is as hard as the formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Optional

from .engine import Board, COLOR_OF_CHAR, board_from_columns

WHITE = COLOR_OF_CHAR["w"]
GRAY = COLOR_OF_CHAR["e"]
BLACK = COLOR_OF_CHAR["k"]


@dataclass(frozen=True)
class CnfFormula:
    """CNF with 1..3 literals per clause, DIMACS sign convention."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        if len(self.clauses) == 0:
            raise ValueError("need at least one clause")
        for clause in self.clauses:
            if not 1 <= len(clause) <= 3:
                raise ValueError(f"clause size {len(clause)} outside 1..3")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def lock_vars(self, clause_idx: int, positive: bool) -> list[int]:
        """Distinct variables needing a lock of the given sign, ascending."""
        wanted = {abs(l) for l in self.clauses[clause_idx] if (l > 0) == positive}
        return sorted(wanted)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF. Comment lines start with 'c', '%' ends the file."""
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            num_vars, num_clauses = int(fields[2]), int(fields[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ValueError("missing 'p cnf' line")
    if current:
        raise ValueError("unterminated clause")
    if len(clauses) != num_clauses:
        raise ValueError(f"{len(clauses)} clauses, header says {num_clauses}")
    return CnfFormula(num_vars, tuple(clauses))


def random_formula(num_vars: int, num_clauses: int, rng: Random) -> CnfFormula:
    clauses = []
    for _ in range(num_clauses):
        clause = tuple(
            rng.randrange(1, num_vars + 1) * rng.choice((1, -1)) for _ in range(3)
        )
        clauses.append(clause)
    return CnfFormula(num_vars, tuple(clauses))


@dataclass(frozen=True)
class SatGenParams:
    """Heights and lock sizes for one board.

    h0 is the unit the whole layout is ruled in: chunks are 8*h0 tall,
    sliders are h0 and 2*h0, and the two legal key slides are h0 and
    2*h0.  Each chunk reserves num_vars slots of height h1; a key is hk
    black rows centered in its slot with hs white rows of margin.
    locks[j] is the black-block count of every lock in clause j+1.
    """

    num_vars: int
    num_clauses: int
    h0: int
    locks: tuple[int, ...]
    h1: int
    hk: int
    hs: int

    def __post_init__(self) -> None:
        if min(self.h0, self.h1, self.hk, self.hs) < 1:
            raise ValueError("all heights must be positive")
        if len(self.locks) != self.num_clauses:
            raise ValueError("need one lock size per clause")
        if any(b < 1 for b in self.locks):
            raise ValueError("lock sizes must be positive")
        # Slots must tile a chunk level, keys must fit their slot, locks
        # must fit below a key top, and bombs must stay inside their chunk.
        if self.num_vars * self.h1 > self.h0:
            raise ValueError("variable slots overflow a chunk level")
        if self.hk + 2 * self.hs > self.h1:
            raise ValueError("key and margins overflow the slot")
        if 2 * max(self.locks) > self.hs + self.hk + 1:
            raise ValueError("a lock pokes out below its slot")
        if sum(self.locks) >= self.h0:
            raise ValueError("bomb offsets overflow the barrier chunk")

    @classmethod
    def defaults(
        cls,
        formula: CnfFormula,
        h0: Optional[int] = None,
        locks: Optional[tuple[int, ...]] = None,
    ) -> SatGenParams:
        n, m = formula.num_vars, formula.num_clauses
        if h0 is None:
            h0 = 4 * n * (m + 1)
        if locks is None:
            locks = tuple(j + 1 for j in range(1, m + 1))
        h1 = h0 // n
        hk = h1 // 3
        hs = (h1 - hk) // 2
        return cls(n, m, h0, locks, h1, hk, hs)

    @property
    def chunk_height(self) -> int:
        return 8 * self.h0

    @property
    def clause_band_height(self) -> int:
        return self.num_clauses * self.chunk_height

    @property
    def var_height(self) -> int:
        return self.clause_band_height + 3 * self.h0

    @property
    def section_height(self) -> int:
        """One variable section: sliders, body, and three black fences."""
        return self.var_height + 3 * self.h0 + 3

    def key_slot_top(self, var: int) -> int:
        """Top row of variable `var`'s key, relative to its chunk base."""
        return 6 * self.h0 + (var - 1) * self.h1 + self.hs + self.hk - 1


def _lock_rows(params: SatGenParams, clause_idx: int, var: int, drop: int) -> list[int]:
    """Chunk-relative black rows of one lock, `drop` rows below the key top."""
    top = params.key_slot_top(var) - drop
    return [top - 2 * t for t in range(params.locks[clause_idx])]


def sat_board(formula: CnfFormula, params: Optional[SatGenParams] = None) -> Board:
    if params is None:
        params = SatGenParams.defaults(formula)
    h0, hv = params.h0, params.var_height
    n, m = formula.num_vars, formula.num_clauses

    # Variable side: for i = 0..n (0 is the dummy), a black fence row,
    # the 2*h0 slider, a fence, the h0 slider, a fence, then the body.
    left = [WHITE] * ((n + 1) * params.section_height)
    keys = [WHITE] * len(left)
    for i in range(n + 1):
        base = i * params.section_height
        for fence in (base, base + 2 * h0 + 1, base + 3 * h0 + 2):
            left[fence] = keys[fence] = BLACK
        body = base + 3 * h0 + 3
        if i == 0:
            continue
        for j in range(m):
            top = body + j * params.chunk_height + params.key_slot_top(i)
            for row in range(top - params.hk + 1, top + 1):
                keys[row] = BLACK

    # Clause side: gray plinth, one black and one gray marker row, white
    # spacer, then the clause chunks; the middle column gets the capping
    # gray singleton under a white block.
    plinth = [GRAY] * hv
    spacer = [WHITE] * (6 * h0 - 2)
    locks_col = plinth + [WHITE, WHITE] + spacer
    barrier_col = plinth + [BLACK, WHITE] + spacer
    cap_col = plinth + [WHITE, GRAY] + spacer
    for j in range(m):
        chunk = [WHITE] * params.chunk_height
        for var in formula.lock_vars(j, positive=True):
            for row in _lock_rows(params, j, var, 2 * h0):
                chunk[row] = BLACK
        for var in formula.lock_vars(j, positive=False):
            for row in _lock_rows(params, j, var, h0):
                chunk[row] = BLACK
        chunk[7 * h0 + sum(params.locks[: j + 1])] = BLACK  # bomb
        locks_col += chunk
        barrier_col += [WHITE] * (7 * h0) + [BLACK] + [WHITE] * (h0 - 1)
        cap_col += [WHITE] * params.chunk_height
    barrier_col += [GRAY, WHITE]

    return board_from_columns([left, keys, locks_col, barrier_col, cap_col])


def validate_sat_board(
    board: Board, formula: CnfFormula, params: Optional[SatGenParams] = None
) -> bool:
    """Recount the whole layout cell by cell, independently of the builder.

    Checks column heights, color placement (gray strictly on the clause
    side), the fence/slider grid, key rectangles, lock alternation with
    the h0 and 2*h0 sign offsets, and bomb-to-barrier distances.
    """
    if params is None:
        params = SatGenParams.defaults(formula)
    try:
        return _recount(board, formula, params)
    except (IndexError, ValueError):
        return False


def _recount(board: Board, formula: CnfFormula, params: SatGenParams) -> bool:
    h0, hv = params.h0, params.var_height
    n, m = formula.num_vars, formula.num_clauses
    if board.width != 5:
        return False
    left, keys, locks_col, barrier_col, cap_col = board.columns
    if set(c for col in board.columns for c in col) != {WHITE, GRAY, BLACK}:
        return False
    if any(GRAY in col for col in (left, keys)):
        return False

    vh = (n + 1) * params.section_height
    if len(left) != vh or len(keys) != vh:
        return False
    fences = set()
    for i in range(n + 1):
        base = i * params.section_height
        fences.update((base, base + 2 * h0 + 1, base + 3 * h0 + 2))
    if {r for r, c in enumerate(left) if c == BLACK} != fences:
        return False
    key_rows = set(fences)
    for i in range(1, n + 1):
        body = i * params.section_height + 3 * h0 + 3
        for j in range(m):
            top = body + j * params.chunk_height + params.key_slot_top(i)
            key_rows.update(range(top - params.hk + 1, top + 1))
    if {r for r, c in enumerate(keys) if c == BLACK} != key_rows:
        return False

    ch = hv + 6 * h0 + m * params.chunk_height
    if (len(locks_col), len(barrier_col), len(cap_col)) != (ch, ch + 2, ch):
        return False
    for col in (locks_col, barrier_col, cap_col):
        if tuple(col[:hv]) != (GRAY,) * hv:
            return False
    grays = [
        (x, r)
        for x, col in ((2, locks_col), (3, barrier_col), (4, cap_col))
        for r in range(hv, len(col))
        if col[r] == GRAY
    ]
    if sorted(grays) != [(3, ch), (4, hv + 1)]:
        return False
    if (barrier_col[hv], barrier_col[ch + 1]) != (BLACK, WHITE):
        return False

    barriers = {hv} | {
        hv + 6 * h0 + j * params.chunk_height + 7 * h0 for j in range(m)
    }
    if {r for r, c in enumerate(barrier_col) if c == BLACK} != barriers:
        return False
    if BLACK in cap_col:
        return False

    # Locks are placed relative to the measured key tops, not the
    # builder's formula: a lock sits drop rows below its key within the
    # chunk grid, 2*h0 for a positive literal and h0 for a negated one,
    # and a bomb sits b_1+..+b_j rows above its measured barrier.
    black_rows = set()
    for j in range(m):
        chunk_base = hv + 6 * h0 + j * params.chunk_height
        for positive, drop in ((True, 2 * h0), (False, h0)):
            for var in formula.lock_vars(j, positive):
                body = var * params.section_height + 3 * h0 + 3
                slot = body + j * params.chunk_height + 6 * h0 + (var - 1) * params.h1
                in_slot = [r for r in range(slot, slot + params.h1) if keys[r] == BLACK]
                if not in_slot:
                    return False
                top_rel = max(in_slot) - body - j * params.chunk_height
                top = chunk_base + top_rel - drop
                black_rows.update(top - 2 * t for t in range(params.locks[j]))
        black_rows.add(chunk_base + 7 * h0 + sum(params.locks[: j + 1]))
    return {r for r, c in enumerate(locks_col) if c == BLACK} == black_rows
