"""Solvability of one-column puzzles via a context-free grammar.

A one-column word is fully clearable exactly when its block string, with
every run clamped to three blocks, belongs to the language generated by

    S -> empty | S S | c S c | c S c S c      (one rule family per color c)

Two decision paths implement the same test.  Short words go through an
explicit CYK chart over a Chomsky normal form of the grammar, which keeps
backpointers and therefore produces a derivation directly.  Longer words
use a bitset dynamic program over spans that evaluates the three grammar
cases with word-parallel mask intersections; a derivation can then be
recovered by rescanning the finished table.  Both paths yield derivations
in the same shape, so downstream consumers never care which ran.

Spans are half-open index pairs (i, j) over the capped block string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .words import Word, cap_runs, expand

RUN_CAP = 3
CHART_LIMIT = 64

_S = 0


def _nt_ids(q: int) -> tuple[int, int, int, int, int, int]:
    """Nonterminal ids (C, A, T1, T2, U, E) for dense color index q."""
    base = 1 + 6 * q
    return base, base + 1, base + 2, base + 3, base + 4, base + 5


def _cnf_rules(ncolors: int) -> list[tuple[int, int, int, tuple]]:
    """Binary rules (head, left, right, role) of the normal form.

    Per color: S -> C A covers c S c, S -> C C the empty-middle pair,
    and S -> C {T1, T2, U, E} the four emptiness patterns of c S c S c.
    Helpers chain the remainder: A -> S C, T1 -> S T2, T2 -> C A,
    U -> S E, E -> C C.
    """
    rules: list[tuple[int, int, int, tuple]] = []
    for q in range(ncolors):
        c, a, t1, t2, u, e = _nt_ids(q)
        rules.extend(
            [
                (_S, c, a, ("wrap2", q)),
                (_S, c, c, ("wrap2e", q)),
                (_S, c, t1, ("wrap3", q)),
                (_S, c, t2, ("wrap3x", q)),
                (_S, c, u, ("wrap3y", q)),
                (_S, c, e, ("wrap3xy", q)),
                (a, _S, c, ("helpA", q)),
                (t1, _S, t2, ("helpT1", q)),
                (t2, c, a, ("helpT2", q)),
                (u, _S, e, ("helpU", q)),
                (e, c, c, ("helpE", q)),
            ]
        )
    rules.append((_S, _S, _S, ("split",)))
    return rules


@dataclass(frozen=True)
class Derivation:
    """One node of a derivation over the capped block string.

    kind 'empty' spans nothing; 'split' concatenates two solvable parts at
    mid; 'wrap2' is color-flanked with one inner part; 'wrap3' additionally
    has a middle block of the flank color at position mid and two inner
    parts, each possibly empty.
    """

    kind: str
    span: tuple[int, int]
    mid: Optional[int]
    parts: tuple["Derivation", ...]


def _empty_at(i: int) -> Derivation:
    return Derivation("empty", (i, i), None, ())


class ParseChart:
    """CYK chart over the normal form, with backpointer decoding."""

    def __init__(self, blocks: Sequence[int]):
        palette = sorted(set(blocks))
        dense = {c: q for q, c in enumerate(palette)}
        self.blocks = [dense[c] for c in blocks]
        self.rules = _cnf_rules(len(palette))
        by_left: dict[int, list[int]] = {}
        for idx, (_, left, _, _) in enumerate(self.rules):
            by_left.setdefault(left, []).append(idx)
        L = len(self.blocks)
        sets: dict[tuple[int, int], set[int]] = {}
        back: dict[tuple[int, int, int], tuple[int, int]] = {}
        for i, q in enumerate(self.blocks):
            sets[(i, i + 1)] = {_nt_ids(q)[0]}
        for d in range(2, L + 1):
            for i in range(L - d + 1):
                j = i + d
                cell: set[int] = set()
                for mid in range(i + 1, j):
                    left_cell = sets[(i, mid)]
                    right_cell = sets[(mid, j)]
                    for left_nt in left_cell:
                        for idx in by_left.get(left_nt, ()):
                            head, _, right_nt, _ = self.rules[idx]
                            if head not in cell and right_nt in right_cell:
                                cell.add(head)
                                back[(i, j, head)] = (idx, mid)
                sets[(i, j)] = cell
        self.sets = sets
        self.back = back
        self.length = L

    @property
    def accepts(self) -> bool:
        if self.length == 0:
            return True
        return _S in self.sets[(0, self.length)]

    def derivation(self) -> Derivation:
        if self.length == 0:
            return _empty_at(0)
        if not self.accepts:
            raise ValueError("word is not in the language")
        return self._decode(0, self.length)

    def _decode(self, i: int, j: int) -> Derivation:
        """Expand the S backpointer at (i, j) into a derivation node."""
        idx, mid = self.back[(i, j, _S)]
        tag = self.rules[idx][3][0]
        if tag == "split":
            return Derivation(
                "split", (i, j), mid, (self._decode(i, mid), self._decode(mid, j))
            )
        if tag == "wrap2e":
            return Derivation("wrap2", (i, j), None, (_empty_at(i + 1),))
        if tag == "wrap2":
            return Derivation("wrap2", (i, j), None, (self._decode(i + 1, j - 1),))
        if tag == "wrap3":
            # S -> C T1, T1 -> S T2 splits at the middle flank block.
            _, p = self.back[(i + 1, j, self.rules[idx][2])]
            return Derivation(
                "wrap3", (i, j), p, (self._decode(i + 1, p), self._decode(p + 1, j - 1))
            )
        if tag == "wrap3x":
            return Derivation(
                "wrap3", (i, j), i + 1, (_empty_at(i + 1), self._decode(i + 2, j - 1))
            )
        if tag == "wrap3y":
            _, p = self.back[(i + 1, j, self.rules[idx][2])]
            return Derivation(
                "wrap3", (i, j), p, (self._decode(i + 1, p), _empty_at(p + 1))
            )
        if tag == "wrap3xy":
            return Derivation(
                "wrap3", (i, j), i + 1, (_empty_at(i + 1), _empty_at(i + 2))
            )
        raise AssertionError(f"unexpected rule tag {tag}")


def _span_bits_python(colors: Sequence[int]) -> list[int]:
    """Row bitmasks rowS[i] with bit j set iff span (i, j) is solvable."""
    L = len(colors)
    rowS = [0] * (L + 1)
    colS = [0] * (L + 1)
    rowE = [1 << i for i in range(L + 1)]
    colE2 = [0] + [1 << (j - 1) for j in range(1, L + 1)]
    colorpos: dict[int, int] = {}
    for p, c in enumerate(colors):
        colorpos[c] = colorpos.get(c, 0) | (1 << p)
    for d in range(2, L + 1):
        for i in range(L - d + 1):
            j = i + d
            s = False
            ci = colors[i]
            if ci == colors[j - 1]:
                if d == 2 or (rowS[i + 1] >> (j - 1)) & 1:
                    s = True
                elif rowE[i + 1] & colE2[j - 1] & colorpos[ci]:
                    s = True
            if not s and rowS[i] & colS[j]:
                s = True
            if s:
                bit = 1 << j
                rowS[i] |= bit
                rowE[i] |= bit
                colS[j] |= 1 << i
                if i >= 1:
                    colE2[j] |= 1 << (i - 1)
    return rowS


_NUMBA_KERNEL = None
_NUMBA_FAILED = False


def _get_numba_kernel():
    global _NUMBA_KERNEL, _NUMBA_FAILED
    if _NUMBA_KERNEL is not None or _NUMBA_FAILED:
        return _NUMBA_KERNEL
    try:
        import numba
        import numpy as np
    except ImportError:
        _NUMBA_FAILED = True
        return None

    @numba.njit(cache=True)
    def kernel(colors, ncolors, W):  # pragma: no cover - jitted
        L = colors.shape[0]
        rowS = np.zeros((L + 1, W), np.uint64)
        colS = np.zeros((L + 1, W), np.uint64)
        rowE = np.zeros((L + 1, W), np.uint64)
        colE2 = np.zeros((L + 1, W), np.uint64)
        colorpos = np.zeros((ncolors, W), np.uint64)
        one = np.uint64(1)
        for i in range(L + 1):
            rowE[i, i >> 6] |= one << np.uint64(i & 63)
        for j in range(1, L + 1):
            colE2[j, (j - 1) >> 6] |= one << np.uint64((j - 1) & 63)
        for p in range(L):
            colorpos[colors[p], p >> 6] |= one << np.uint64(p & 63)
        for d in range(2, L + 1):
            for i in range(L - d + 1):
                j = i + d
                s = False
                ci = colors[i]
                if ci == colors[j - 1]:
                    if d == 2:
                        s = True
                    elif (rowS[i + 1, (j - 1) >> 6] >> np.uint64((j - 1) & 63)) & one:
                        s = True
                    if not s:
                        for w in range(W):
                            if rowE[i + 1, w] & colE2[j - 1, w] & colorpos[ci, w]:
                                s = True
                                break
                if not s:
                    for w in range(W):
                        if rowS[i, w] & colS[j, w]:
                            s = True
                            break
                if s:
                    jb = one << np.uint64(j & 63)
                    rowS[i, j >> 6] |= jb
                    rowE[i, j >> 6] |= jb
                    colS[j, i >> 6] |= one << np.uint64(i & 63)
                    if i >= 1:
                        colE2[j, (i - 1) >> 6] |= one << np.uint64((i - 1) & 63)
        return rowS

    _NUMBA_KERNEL = kernel
    return kernel


@dataclass
class SpanTable:
    """Solvability of every span of a capped block string.

    rows[i] is a bitmask whose bit j answers span (i, j); empty spans are
    clearable by definition so callers use clearable() when either applies.
    """

    colors: tuple[int, ...]
    rows: list[int]

    def solvable(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def clearable(self, i: int, j: int) -> bool:
        return i == j or self.solvable(i, j)

    @property
    def length(self) -> int:
        return len(self.colors)


def span_table(blocks: Sequence[int], engine: str = "auto") -> SpanTable:
    """Build a SpanTable, preferring the compiled kernel for long words."""
    palette = sorted(set(blocks))
    if len(palette) > 255:
        raise ValueError("more than 255 distinct colors")
    dense = {c: q for q, c in enumerate(palette)}
    colors = [dense[c] for c in blocks]
    kernel = None
    if engine == "auto" and len(colors) > 128:
        kernel = _get_numba_kernel()
    elif engine == "numba":
        kernel = _get_numba_kernel()
        if kernel is None:
            raise RuntimeError("compiled span kernel unavailable")
    elif engine not in ("auto", "python"):
        raise ValueError(f"unknown engine {engine!r}")
    if kernel is None:
        rows = _span_bits_python(colors)
    else:
        import numpy as np

        L = len(colors)
        W = (L + 1 + 63) // 64
        arr = kernel(np.asarray(colors, dtype=np.uint8), len(palette), W)
        rows = [int.from_bytes(arr[i].tobytes(), "little") for i in range(L + 1)]
    return SpanTable(tuple(blocks), rows)


def derivation_from_spans(table: SpanTable, i: int = 0, j: Optional[int] = None) -> Derivation:
    """Recover a derivation for a solvable span by rescanning the table."""
    if j is None:
        j = table.length
    if i == j:
        return _empty_at(i)
    if not table.solvable(i, j):
        raise ValueError(f"span {(i, j)} is not solvable")
    colors = table.colors
    if colors[i] == colors[j - 1]:
        if j - i == 2:
            return Derivation("wrap2", (i, j), None, (_empty_at(i + 1),))
        if table.solvable(i + 1, j - 1):
            inner = derivation_from_spans(table, i + 1, j - 1)
            return Derivation("wrap2", (i, j), None, (inner,))
        for p in range(i + 1, j - 1):
            if (
                colors[p] == colors[i]
                and table.clearable(i + 1, p)
                and table.clearable(p + 1, j - 1)
            ):
                return Derivation(
                    "wrap3",
                    (i, j),
                    p,
                    (
                        derivation_from_spans(table, i + 1, p),
                        derivation_from_spans(table, p + 1, j - 1),
                    ),
                )
    hits = table.rows[i]
    for mid in range(i + 2, j - 1):
        if (hits >> mid) & 1 and table.solvable(mid, j):
            return Derivation(
                "split",
                (i, j),
                mid,
                (
                    derivation_from_spans(table, i, mid),
                    derivation_from_spans(table, mid, j),
                ),
            )
    raise AssertionError(f"no grammar case matched solvable span {(i, j)}")


@dataclass(frozen=True)
class CfgDecision:
    solvable: bool
    capped: tuple[int, ...]
    derivation: Optional[Derivation] = None


def decide_cfg(
    word: Word, *, with_derivation: bool = True, engine: str = "auto"
) -> CfgDecision:
    """Decide one-column solvability; optionally return a derivation.

    The derivation, when requested and the word is solvable, is over the
    capped block string (runs clamped to three).
    """
    capped = tuple(expand(cap_runs(word, RUN_CAP))) if word.runs else ()
    L = len(capped)
    if L == 0:
        return CfgDecision(True, capped, _empty_at(0) if with_derivation else None)
    if with_derivation and L <= CHART_LIMIT and engine == "auto":
        chart = ParseChart(capped)
        if not chart.accepts:
            return CfgDecision(False, capped)
        return CfgDecision(True, capped, chart.derivation())
    table = span_table(capped, engine=engine)
    if not table.solvable(0, L):
        return CfgDecision(False, capped)
    if not with_derivation:
        return CfgDecision(True, capped)
    return CfgDecision(True, capped, derivation_from_spans(table))
