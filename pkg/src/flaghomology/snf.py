"""
Exact Smith normal form over the integers, and homology of a chain complex.

All arithmetic uses Python integers, so entries never overflow.

>>> smith_normal_form([[2, 4], [6, 8]]).diagonal
(2, 4)
>>> smith_normal_form([[0, 0], [0, 0]]).rank
0
"""

from __future__ import annotations

__all__ = [
    "SparseIntMatrix", "SmithDecomposition", "HomologyGroup",
    "smith_normal_form", "dense_smith_diagonal", "rank", "homology",
]

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TYPE_CHECKING

from .errors import IntegrityError

if TYPE_CHECKING:
    from .cellular import ChainComplex


@dataclass
class SparseIntMatrix:
    """Integer matrix stored as ``{(row, col): value}`` with zeros omitted."""
    nrows: int
    ncols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> SparseIntMatrix:
        rows = [list(map(int, r)) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(len(rows), ncols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, int]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + a * b
        return SparseIntMatrix(self.nrows, other.ncols, {key: v for key, v in out.items() if v})

    def is_zero(self) -> bool:
        return not self.entries

    def hstack(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        entries = dict(self.entries)
        entries.update({(i, j + self.ncols): v for (i, j), v in other.entries.items()})
        return SparseIntMatrix(self.nrows, self.ncols + other.ncols, entries)


@dataclass(frozen=True)
class SmithDecomposition:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` followed by zeros up to ``min(shape)``."""
    diagonal: tuple[int, ...]
    rank: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.diagonal[:self.rank]


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    betti: int
    torsion_factors: tuple[int, ...] = ()

    @property
    def torsion_count(self) -> int:
        return len(self.torsion_factors)

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        counts: dict[int, int] = {}
        for d in self.torsion_factors:
            counts[d] = counts.get(d, 0) + 1
        for d, c in sorted(counts.items()):
            parts.append(f"Z{d}" if c == 1 else f"Z{d}^{c}")
        return " + ".join(parts) if parts else "0"


def _as_sparse(M) -> SparseIntMatrix:
    if isinstance(M, SparseIntMatrix):
        return M
    if hasattr(M, "tolist"):
        M = M.tolist()
    return SparseIntMatrix.from_dense(M)


def dense_smith_diagonal(A: list[list[int]]) -> list[int]:
    """Textbook SNF on a dense matrix (mutated in place); returns the nonzero factors.

    The pivot is always a smallest-magnitude nonzero entry of the remaining block.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A[t:]:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if moved:
                continue
            # column and row are clear; enforce divisibility of the rest
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            rt, rb = A[t], A[bad]
            for j in range(t, n):
                rt[j] += rb[j]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _fix_divisibility(factors: list[int]) -> list[int]:
    # equalize to a divisibility chain (same group); used after concatenation
    factors = [f for f in factors if f]
    changed = True
    while changed:
        changed = False
        factors.sort()
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                x, y = factors[a], factors[b]
                if y % x:
                    g = math.gcd(x, y)
                    factors[a], factors[b] = g, x * y // g
                    changed = True
    return sorted(factors)


def smith_normal_form(M) -> SmithDecomposition:
    """Invariant factors of an integer matrix (sparse, dense list, or numpy array).

    Entries are divided by their common content first; unit pivots in sparse
    columns are then eliminated greedily (row operations only, since the pivot
    column becomes a unit vector), and whatever remains goes to the dense routine.
    """
    S = _as_sparse(M)
    size = min(S.shape)
    if not S.entries:
        return SmithDecomposition((0,) * size, 0)
    content = 0
    for v in S.entries.values():
        content = math.gcd(content, v)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in S.entries.items():
        rows.setdefault(i, {})[j] = v // content
        cols.setdefault(j, set()).add(i)

    units = 0
    heap = [(len(rs), j) for j, rs in cols.items()]
    heapq.heapify(heap)
    while heap:
        cnt, j = heapq.heappop(heap)
        rs = cols.get(j)
        if not rs:
            continue
        if cnt != len(rs):
            heapq.heappush(heap, (len(rs), j))
            continue
        unit_rows = [i for i in rs if abs(rows[i][j]) == 1]
        if not unit_rows:
            continue
        r = min(unit_rows, key=lambda i: (len(rows[i]), i))
        prow = rows.pop(r)
        u = prow[j]
        for i in sorted(rs):
            if i == r:
                continue
            f = rows[i][j] * u
            target = rows[i]
            for jj, pv in prow.items():
                nv = target.get(jj, 0) - f * pv
                if nv:
                    if jj not in target:
                        cols[jj].add(i)
                    target[jj] = nv
                else:
                    if jj in target:
                        del target[jj]
                        cols[jj].discard(i)
            if not target:
                del rows[i]
        for jj in prow:
            if jj != j:
                cols[jj].discard(r)
                heapq.heappush(heap, (len(cols[jj]), jj))
        del cols[j]
        units += 1

    factors = [1] * units
    if rows:
        rest_cols = sorted({j for r in rows.values() for j in r})
        cidx = {j: k for k, j in enumerate(rest_cols)}
        dense = []
        for i in sorted(rows):
            line = [0] * len(rest_cols)
            for j, v in rows[i].items():
                line[cidx[j]] = v
            dense.append(line)
        factors += dense_smith_diagonal(dense)
    factors = [content * f for f in _fix_divisibility(factors)]
    r = len(factors)
    return SmithDecomposition(tuple(factors) + (0,) * (size - r), r)


def rank(M) -> int:
    return smith_normal_form(M).rank


def homology(cx: ChainComplex, degrees: Iterable[int] | None = None) -> list[HomologyGroup]:
    """Integral homology, one group per degree (``0..dim`` by default).

    Raises :class:`IntegrityError` if consecutive boundary maps do not compose to 0.
    """
    if not cx.dd_is_zero():
        raise IntegrityError(f"boundary of boundary is nonzero for {cx.theta}")
    top = cx.max_degree
    if degrees is None:
        degrees = range(0, top + 1 if cx.complete else top)
    degrees = list(degrees)
    for d in degrees:
        if d + 1 > top and not cx.complete:
            raise ValueError(f"complex truncated at degree {top}; cannot compute H_{d}")
    snfs: dict[int, SmithDecomposition] = {}

    def snf_of(d):
        if d not in snfs:
            snfs[d] = smith_normal_form(cx.boundary(d))
        return snfs[d]

    out = []
    for d in degrees:
        ncells = len(cx.cells.get(d, ()))
        kernel = ncells - (snf_of(d).rank if d >= 1 else 0)
        image = snf_of(d + 1)
        torsion = tuple(f for f in image.invariant_factors if f > 1)
        out.append(HomologyGroup(d, kernel - image.rank, torsion))
    return out
