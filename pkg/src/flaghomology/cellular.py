"""
The cellular chain complex of a real partial flag manifold of type A.

Cells are the minimal coset representatives, graded by length and ordered by
``(length, word)``.  The boundary matrix in degree ``d`` has one row per
``(d-1)``-cell and one column per ``d``-cell; the entry at ``(w', w)`` is the
boundary coefficient ``c(w, w')``.

>>> cx = build_complex(ThetaSet.from_k(3, [1]))   # real projective plane
>>> [len(cx.cells[d]) for d in range(3)]
[1, 1, 1]
>>> cx.boundary(2).to_dense()
[[-2]]
"""

from __future__ import annotations

__all__ = ["ChainComplex", "Chain", "build_complex", "boundary_of", "verify_dd_zero", "cell",
           "cell_boundary"]

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .bruhat import covered_list
from .coeff import coefficient_from_codes
from .errors import DomainError
from .perm import (Permutation, ThetaSet, code, decode, enumerate_min_reps, from_spectrum,
                   is_minimal_representative, length, spectrum)
from .snf import SparseIntMatrix


def cell(spec, n: int) -> Permutation:
    """The permutation with the given code spectrum."""
    return decode(from_spectrum(spec, n), n)


@dataclass
class Chain:
    """A formal integer combination of cells of one degree."""
    degree: int
    coefficients: dict[Permutation, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficients = {w: c for w, c in self.coefficients.items() if c}

    @classmethod
    def from_spectra(cls, terms: Mapping[tuple[int, ...], int], n: int) -> Chain:
        coeffs: dict[Permutation, int] = {}
        degree = None
        for spec, c in terms.items():
            w = cell(spec, n)
            degree = len(spec) if degree is None else degree
            if len(spec) != degree:
                raise DomainError("mixed degrees in chain")
            coeffs[w] = coeffs.get(w, 0) + c
        return cls(degree if degree is not None else 0, coeffs)

    def restrict(self, th: ThetaSet) -> Chain:
        """Drop cells that are not minimal representatives for ``th``."""
        return Chain(self.degree, {w: c for w, c in self.coefficients.items()
                                   if is_minimal_representative(w, th)})

    def by_spectrum(self) -> dict[tuple[int, ...], int]:
        return {spectrum(code(w)): c for w, c in sorted(self.coefficients.items(),
                                                         key=lambda kv: spectrum(code(kv[0])))}

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: Chain) -> Chain:
        if other.degree != self.degree and not (self.is_zero() or other.is_zero()):
            raise DomainError("adding chains of different degrees")
        out = dict(self.coefficients)
        for w, c in other.coefficients.items():
            out[w] = out.get(w, 0) + c
        return Chain(max(self.degree, other.degree) if self.is_zero() or other.is_zero() else self.degree, out)

    def __rmul__(self, k: int) -> Chain:
        return Chain(self.degree, {w: k * c for w, c in self.coefficients.items()})

    def __neg__(self) -> Chain:
        return (-1) * self

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.coefficients == other.coefficients and (self.degree == other.degree or self.is_zero())

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for spec, c in self.by_spectrum().items():
            label = "<" + ",".join(map(str, spec)) + ">"
            parts.append(("- " if c < 0 else "+ ") + (f"{abs(c)}" if abs(c) != 1 else "") + label)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass
class ChainComplex:
    theta: ThetaSet
    cells: dict[int, list[Permutation]]
    boundaries: dict[int, SparseIntMatrix]
    max_degree: int
    complete: bool

    @property
    def n(self) -> int:
        return self.theta.n

    @property
    def dim(self) -> int:
        """Dimension of the flag manifold (top cell length)."""
        return self.theta.dim

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(c) for d, c in self.cells.items())

    def index(self, d: int) -> dict[Permutation, int]:
        cache = self.__dict__.setdefault("_index", {})
        if d not in cache:
            cache[d] = {w: k for k, w in enumerate(self.cells.get(d, ()))}
        return cache[d]

    def boundary(self, d: int) -> SparseIntMatrix:
        """The map from degree ``d`` to degree ``d - 1`` (empty matrices off range)."""
        if d in self.boundaries:
            return self.boundaries[d]
        if d > self.max_degree:
            if self.complete:
                return SparseIntMatrix(len(self.cells.get(d - 1, ())), 0)
            raise ValueError(f"complex truncated at degree {self.max_degree}")
        return SparseIntMatrix(len(self.cells.get(d - 1, ())), len(self.cells.get(d, ())))

    def dd_is_zero(self) -> bool:
        return all((self.boundaries[d] @ self.boundaries[d + 1]).is_zero()
                   for d in self.boundaries if d + 1 in self.boundaries)

    def cell_counts(self) -> list[int]:
        return [len(self.cells.get(d, ())) for d in range(self.max_degree + 1)]


@lru_cache(maxsize=1 << 18)
def cell_boundary(w: Permutation) -> tuple[tuple[Permutation, int], ...]:
    """Nonzero terms of the boundary of ``w`` in the full flag manifold.

    Coefficients do not depend on the partial flag, so every partial complex
    reuses this list and keeps only the minimal representatives.
    """
    a = code(w) + (0,)
    out = []
    for cp in covered_list(w):
        if (cp.j - cp.i) % 2:
            continue
        ap = code(cp.w_prime) + (0,)
        out.append((cp.w_prime, coefficient_from_codes(a, ap, cp.i, cp.j).value))
    return tuple(out)


def _column(w: Permutation, th: ThetaSet) -> dict[Permutation, int]:
    return {wp: v for wp, v in cell_boundary(w) if is_minimal_representative(wp, th)}


def build_complex(th: ThetaSet, max_degree: int | None = None) -> ChainComplex:
    """Cells and boundary matrices, optionally only up to ``max_degree``."""
    if th.n < 1:
        raise DomainError("n must be positive")
    reps = enumerate_min_reps(th)
    top = length(reps[-1])
    limit = top if max_degree is None else min(top, max_degree)
    cells: dict[int, list[Permutation]] = {}
    for w in reps:
        d = length(w)
        if d > limit:
            break
        cells.setdefault(d, []).append(w)
    cx = ChainComplex(th, cells, {}, limit, limit == top)
    for d in range(1, limit + 1):
        rows = cx.index(d - 1)
        entries = {}
        for col, w in enumerate(cells.get(d, ())):
            for wp, v in _column(w, th).items():
                entries[rows[wp], col] = v
        cx.boundaries[d] = SparseIntMatrix(len(cells.get(d - 1, ())), len(cells.get(d, ())), entries)
    return cx


def boundary_of(chain: Chain, cx: ChainComplex | ThetaSet) -> Chain:
    """Apply the boundary map to a chain.

    With a :class:`ChainComplex` the stored matrix is used; with a bare
    :class:`ThetaSet` each cell's boundary is computed locally, which stays
    cheap for large ``n`` where the full complex is out of reach.
    """
    if chain.degree <= 0 or chain.is_zero():
        return Chain(max(chain.degree - 1, 0))
    th = cx.theta if isinstance(cx, ChainComplex) else cx
    for w in chain.coefficients:
        if len(w) != th.n or not is_minimal_representative(w, th) or length(w) != chain.degree:
            raise DomainError(f"{w} is not a degree-{chain.degree} cell for {th}")
    out: dict[Permutation, int] = {}
    if isinstance(cx, ChainComplex) and chain.degree in cx.boundaries:
        M = cx.boundaries[chain.degree]
        cols = cx.index(chain.degree)
        rows = cx.cells.get(chain.degree - 1, [])
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in M.entries.items():
            by_col.setdefault(c, []).append((r, v))
        for w, k in chain.coefficients.items():
            for r, v in by_col.get(cols[w], ()):
                out[rows[r]] = out.get(rows[r], 0) + k * v
    else:
        for w, k in chain.coefficients.items():
            for wp, v in _column(w, th).items():
                out[wp] = out.get(wp, 0) + k * v
    return Chain(chain.degree - 1, out)


def verify_dd_zero(cx: ChainComplex) -> bool:
    return cx.dd_is_zero()
