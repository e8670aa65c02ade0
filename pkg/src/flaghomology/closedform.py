"""
Closed formulas for low-degree homology of real partial flag manifolds.

Everything here is phrased in terms of the connected components of ``theta``
(runs of consecutive indices) and cells named by code spectra.

>>> st = components(ThetaSet(9, frozenset({1, 2, 6, 8})))
>>> st.r, st.r_k.get(1), st.r_k.get(2)
(3, 2, 1)
>>> torsion_T3(ThetaSet.empty(5))
9
>>> [str(z.chain) for z in z_cycles(ThetaSet.from_k(4, [2]))]
['<1,1,2,2>']
"""

from __future__ import annotations

__all__ = [
    "ComponentStats", "GeneratorChain", "BettiEntry", "ClassReport",
    "components", "skeleton_cells", "z_chain", "z_cycles", "betti_table",
    "torsion_T3", "torsion_T4", "h3_kernel_generators", "h3_family",
    "h3_set_sizes", "h4_set_sizes", "h3_set_identity", "h4_set_identity",
    "class_report",
]

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Literal, Mapping

from .cellular import Chain, ChainComplex, boundary_of, cell
from .errors import DomainError
from .perm import ThetaSet, is_minimal_representative
from .poincare import big_L
from .snf import SparseIntMatrix, smith_normal_form

Kind = Literal["free", "torsion"]


@dataclass(frozen=True)
class ComponentStats:
    theta: ThetaSet
    runs: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.theta.n

    @property
    def size(self) -> int:
        return len(self.theta.theta)

    @property
    def r(self) -> int:
        return len(self.runs)

    @property
    def r_k(self) -> Mapping[int, int]:
        out: dict[int, int] = {}
        for run in self.runs:
            out[len(run)] = out.get(len(run), 0) + 1
        return out

    def rk(self, k: int) -> int:
        return self.r_k.get(k, 0)

    @property
    def r0(self) -> int:
        return int(not self.theta.theta)

    def ind(self, i: int) -> int:
        """1 if ``i`` is in theta, else 0 (indices outside ``[1, n-1]`` count as 0)."""
        return int(i in self.theta.theta)

    def co_ind(self, i: int) -> int:
        return 1 - self.theta.indicator(i)


def components(th: ThetaSet) -> ComponentStats:
    runs: list[list[int]] = []
    for i in sorted(th.theta):
        if runs and runs[-1][-1] == i - 1:
            runs[-1].append(i)
        else:
            runs.append([i])
    return ComponentStats(th, tuple(tuple(r) for r in runs))


# cells of low degree -------------------------------------------------------

def _valid_spectrum(spec: tuple[int, ...], n: int) -> bool:
    return all(1 <= m <= n - 1 and spec.count(m) <= n - m for m in set(spec))


def _admitted_low_cell(spec: tuple[int, ...], th: ThetaSet) -> bool:
    out = lambda m: m not in th.theta
    if len(spec) == 1:
        return out(spec[0])
    if len(spec) == 2:
        i, j = spec
        return (out(i) and out(j)) or (j == i + 1 and not out(i) and out(i + 1))
    i, j, k = spec
    return ((out(i) and out(j) and out(k))
            or (j == i + 1 and not out(i) and out(i + 1) and out(k))
            or (k == j + 1 and not out(j) and out(i) and out(j + 1))
            or (k - 1 == j == i + 1 and not out(i) and not out(i + 1) and out(i + 2)))


def skeleton_cells(th: ThetaSet, d: int) -> list[tuple[int, ...]]:
    """Spectra of the ``d``-cells (``d`` in 1..3) from the case lists for low skeleta.

    Index ranges are replaced by plain code validity, so e.g.
    ``<n-2,n-2,n-1>`` is included.
    """
    if d not in (1, 2, 3):
        raise DomainError("skeleton_cells handles degrees 1 to 3")
    n = th.n
    return [s for s in itertools.combinations_with_replacement(range(1, n), d)
            if _valid_spectrum(s, n) and _admitted_low_cell(s, th)]


# generator chains ----------------------------------------------------------

@dataclass(frozen=True)
class GeneratorChain:
    label: str
    chain: Chain
    kind: Kind
    indices: tuple[int, ...] = ()


def _chain(th: ThetaSet, terms, degree: int | None = None) -> Chain:
    """Combination of spectrum cells, keeping only cells of the partial flag."""
    n = th.n
    coeffs: dict = {}
    if degree is None:
        degree = len(terms[0][1])
    for c, spec in terms:
        if not c or not _valid_spectrum(spec, n):
            continue
        w = cell(spec, n)
        if is_minimal_representative(w, th):
            coeffs[w] = coeffs.get(w, 0) + c
    return Chain(degree, coeffs)


def z_chain(th: ThetaSet, p: int, q: int) -> Chain:
    """``sum_{i=p}^{q-1} [i+1 not in theta] <i,i,i+1,i+1>``."""
    st = components(th)
    return _chain(th, [(st.co_ind(i + 1), (i, i, i + 1, i + 1)) for i in range(p, q)], 4)


def z_cycles(th: ThetaSet) -> list[GeneratorChain]:
    """One 4-cycle per gap between consecutive components of theta."""
    st = components(th)
    out = []
    for idx in range(st.r - 1):
        p, q = st.runs[idx][-1], st.runs[idx + 1][0] - 1
        out.append(GeneratorChain(f"Z_{idx + 1}", z_chain(th, p, q), "free", (p, q)))
    return out


def _x1_n4(th: ThetaSet) -> Chain:
    st = components(th)
    return _chain(th, [(st.co_ind(1), (1, 1, 1)), (st.co_ind(3), (1, 2, 3))])


def _h5_n6(th: ThetaSet) -> Chain:
    st = components(th)
    c = st.co_ind
    return _chain(th, [(c(1), (1, 1, 1, 1, 1)), (c(3), (1, 2, 3, 3, 3)),
                       (c(1) * c(5), (1, 1, 1, 4, 5)), (c(5), (1, 2, 3, 4, 5))])


@dataclass(frozen=True)
class BettiEntry:
    degree: int
    betti: int
    generators: tuple[GeneratorChain, ...] = field(default_factory=tuple)


def betti_table(th: ThetaSet) -> dict[int, BettiEntry]:
    """Betti numbers and free generators in degrees 1..6 from the closed rules."""
    n = th.n
    st = components(th)
    dim = th.dim
    out: dict[int, BettiEntry] = {}
    for d in range(1, 7):
        gens: list[GeneratorChain] = []
        if d > dim:
            out[d] = BettiEntry(d, 0)
            continue
        if d == 1:
            # the circle (n = 2) is the only case with a free 1-class
            betti = int(n == 2 and not th.theta)
            if betti:
                gens.append(GeneratorChain("top", _chain(th, [(1, (1,))]), "free"))
        elif d == 3:
            if st.r0:
                gens.append(GeneratorChain("X_{1,1,2}", _chain(th, [(1, (1, 1, 2))]), "free", (1, 1, 2)))
            if n == 4:
                x1 = _x1_n4(th)
                if not x1.is_zero():
                    gens.append(GeneratorChain("X_1", x1, "free"))
            betti = len(gens)
        elif d == 4:
            gens = z_cycles(th) if n >= 4 else []
            betti = st.r0 + st.r - 1 if n >= 4 else 0
        elif d == 5:
            betti = int(n == 6 and big_L(th) <= 2)
            if betti:
                gens.append(GeneratorChain("Y_5", _h5_n6(th), "free"))
        elif d == 6:
            # top cell of the full flag of S_4
            betti = int(n == 4 and not th.theta)
            if betti:
                gens.append(GeneratorChain("top", _chain(th, [(1, (1, 1, 1, 2, 2, 3))]), "free"))
        else:
            betti = 0
        out[d] = BettiEntry(d, betti, tuple(gens))
    return out


# torsion formulas ----------------------------------------------------------

def torsion_T3(th: ThetaSet) -> int:
    n = th.n
    if n < 3:
        raise DomainError("degree-3 torsion formula needs n >= 3")
    if th.dim < 3:  # no cells that high
        return 0
    st = components(th)
    t = st.size
    if n == 3:
        return 0
    if n == 4:
        return 2 - t
    return comb(n - t, 3) + st.r * (n - t - 1) - st.r0 - st.rk(1)


def torsion_T4(th: ThetaSet) -> int:
    n = th.n
    if n < 4:
        raise DomainError("degree-4 torsion formula needs n >= 4")
    if th.dim < 4:  # no cells that high
        return 0
    st = components(th)
    t = st.size
    return (comb(n - t + 1, 4) + st.r * comb(n - t, 2) + comb(st.r, 2)
            - (n - t - 1) * (st.rk(1) + 1) - st.rk(2))


def _poly_comb(x: int, k: int) -> int:
    """``x (x-1) ... (x-k+1) / k!``, defined for negative ``x`` as well."""
    num = 1
    for m in range(k):
        num *= x - m
    return num // factorial(k)


def h3_set_sizes(th: ThetaSet) -> dict[str, int]:
    """Closed counts of the degree-3 kernel families, keyed by family set."""
    n = th.n
    st = components(th)
    t = st.size
    i0, i1 = st.ind(n - 2), st.ind(n - 1)
    return {
        "A1": (n - 3 - t) + i0 + i1,
        "A2": _poly_comb(n - 1 - t, 2),
        "A3": _poly_comb(n - 1 - t, 3) - (1 - i0) * (1 - i1) * (n - 3 - t),
        "A4+A5": (st.r - i0 - i1 + i0 * i1) * (n - 2 - t),
        "A6": st.r - st.rk(1) - i0 * i1,
    }


def h4_set_sizes(th: ThetaSet) -> dict[str, int]:
    """Closed counts of the degree-4 torsion families (zero families omitted)."""
    n = th.n
    st = components(th)
    t, r, r1, r2 = st.size, st.r, st.rk(1), st.rk(2)
    I = [st.ind(n - 4), st.ind(n - 3), st.ind(n - 2), st.ind(n - 1)]
    S = sum((1 - st.ind(i - 1)) * (1 - st.ind(i)) for i in range(2, n - 3))
    m = n - 2 - t
    return {
        "A1": _poly_comb(n - 1 - t, 2) - (2 - I[1] - I[2]) * (1 - I[3]),
        "A2": _poly_comb(n - 1 - t, 3) - (1 - I[2]) * (1 - I[3]) * (n - 4 - t + I[1]),
        "A3": _poly_comb(n - 1 - t, 3),
        "A4": _poly_comb(n - 1 - t, 4) - (1 - I[0]) * (1 - I[1]) * (1 - I[2]) * (1 - I[3]),
        "A5": (r - I[2] - I[3] * (1 - I[2])) * m + (1 - I[1]) * I[2] * (1 - I[3]),
        "A7": I[3] * S,
        "A8": I[3] * (r - 1 - I[0] * (1 - I[1]) - I[1] * (1 - I[2])),
        "A9": ((r - I[3]) * _poly_comb(m, 2) - I[0] * (1 - I[1]) * (1 - I[2]) * (1 - I[3])
               - (1 - I[0]) * I[1] * (1 - I[2]) * (1 - I[3])
               - (1 - I[0]) * (1 - I[1]) * I[2] * (1 - I[3])),
        "A12": I[3] * (_poly_comb(m, 2) + I[2] * m - S - (1 - I[0]) * (1 - I[1])),
        "A13": _poly_comb(r, 2) - (r - 1) * I[3] - I[0] * (1 - I[1]) * I[2] * (1 - I[3]),
        "A14": ((r - r1 - I[2] * I[3]) * m - I[0] * I[1] * (1 - I[2]) * (1 - I[3])
                - (1 - I[0]) * I[1] * I[2] * (1 - I[3])),
        "A16": r - r1 - r2 - I[0] * I[1] * I[2] * (1 - I[3]) - I[1] * I[2] * I[3],
    }


def h3_set_identity(th: ThetaSet) -> tuple[int, int]:
    """(family total minus the free class, closed T3)."""
    return sum(h3_set_sizes(th).values()) - components(th).r0, torsion_T3(th)


def h4_set_identity(th: ThetaSet) -> tuple[int, int]:
    return sum(h4_set_sizes(th).values()), torsion_T4(th)


# explicit degree-3 kernel generators ----------------------------------------

def _h3_families(n: int):
    """``(label indices, terms)`` with terms ``(coefficient_fn, spectrum)``.

    Coefficient functions take the component stats, so indicator weights
    follow theta.
    """
    one = lambda st: 1
    yield (1, 1, 2), [(one, (1, 1, 2))]
    for i in range(2, n - 1):
        yield (i, i, i + 1), [(one, (i, i, i + 1)), (lambda st, i=i: -st.co_ind(i - 1), (i - 1, i - 1, i))]
    for i in range(1, n - 2):
        yield (i, i, i + 2), [(one, (i, i, i + 2))]
    for i in range(1, n - 4):
        for j in range(i + 2, n - 2):
            for k in range(j + 2, n):
                yield (i, j, k), [(one, (i, j, k))]
    for i in range(1, n - 2):
        yield (i, i, i), [(one, (i, i, i)), (lambda st, i=i: st.co_ind(i + 2), (i, i + 1, i + 2))]
    for i in range(1, n - 2):
        # i = n-3 is only a cycle on its own, i.e. when i is in theta
        yield (i, i + 1, i + 2), [(one, (i, i + 1, i + 2)), (lambda st, i=i: -st.co_ind(i), (i, i + 2, i + 2))]
    for i in range(1, n - 3):
        for k in range(i + 3, n):
            yield (i, i, k), [(one, (i, i, k)), (one, (i, k - 1, k))]
    for i in range(1, n - 3):
        for k in range(i + 3, n - 1):
            yield (i, k - 1, k), [(one, (i, k - 1, k)), (lambda st: -1, (i, k, k))]
    for i in range(1, n - 3):
        for k in range(i + 3, n):
            yield (i, i + 1, k), [(one, (i, i + 1, k)), (one, (i + 1, k - 1, k))]


def h3_family(idx: tuple[int, int, int], th: ThetaSet) -> str:
    """Which counting set an admitted label ``(i, j, k)`` falls into."""
    i, j, k = idx
    out = lambda m: m not in th.theta
    if i == j == k:
        return "A1"
    if i == j:
        return "A2"
    if out(i) and out(j) and out(k):
        return "A3"
    if j == i + 1 and k == i + 2 and not out(i) and not out(j):
        return "A6"
    return "A4+A5"


def _label(idx) -> str:
    return "X_{" + ",".join(map(str, idx)) + "}"


def h3_kernel_generators(th: ThetaSet) -> list[GeneratorChain]:
    """Explicit cycles generating the degree-3 kernel modulo nothing (free and torsion).

    A family member is kept when its leading cell belongs to the partial flag.
    """
    n = th.n
    if n < 3:
        raise DomainError("degree-3 generators need n >= 3")
    st = components(th)
    if n == 3:
        c = _chain(th, [(1, (1, 1, 2))])
        return [] if c.is_zero() else [GeneratorChain("X_{1,1,2}", c, "free", (1, 1, 2))]
    if n == 4:
        out = []
        x1 = _x1_n4(th)
        if not x1.is_zero():
            out.append(GeneratorChain("X_1", x1, "free"))
        for idx in [(1, 1, 2), (1, 1, 3), (2, 2, 3)]:
            c = _chain(th, [(1, idx)])
            if not c.is_zero():
                kind: Kind = "free" if idx == (1, 1, 2) and st.r0 else "torsion"
                out.append(GeneratorChain(_label(idx), c, kind, idx))
        return out
    out = []
    for idx, terms in _h3_families(n):
        if not is_minimal_representative(cell(terms[0][1], n), th):
            continue
        if idx == (n - 3, n - 2, n - 1) and idx[0] not in th.theta:
            continue
        c = _chain(th, [(f(st), spec) for f, spec in terms])
        kind = "free" if idx == (1, 1, 2) and st.r0 else "torsion"
        out.append(GeneratorChain(_label(idx), c, kind, idx))
    return out


# lattice checks for homology classes -----------------------------------------

@dataclass(frozen=True)
class ClassReport:
    cycles: bool
    generate_kernel: bool
    free_rank_added: int
    torsion_nonzero: bool
    torsion_order_two: bool
    torsion_independent: bool = True


def _vector_columns(chains, cx: ChainComplex, d: int) -> SparseIntMatrix:
    rows = cx.index(d)
    entries = {}
    for col, ch in enumerate(chains):
        for w, c in ch.coefficients.items():
            entries[rows[w], col] = c
    return SparseIntMatrix(len(cx.cells.get(d, ())), len(chains), entries)


def _covolume(M: SparseIntMatrix) -> tuple[int, int]:
    s = smith_normal_form(M)
    prod = 1
    for f in s.invariant_factors:
        prod *= f
    return s.rank, prod


def class_report(cx: ChainComplex, d: int, free: list[Chain], torsion: list[Chain] = (),
                 check_generation: bool = True) -> ClassReport:
    """How the given degree-``d`` cycles sit in homology.

    ``free_rank_added`` is how much the free chains raise the rank of the
    boundary image.  Torsion chains are judged modulo boundaries plus the free
    chains: each must be nonzero there with twice it zero, and together they
    must span a group of order ``2^len(torsion)``.
    ``generate_kernel`` asks whether all chains plus the image span the cycles.
    """
    cycles = all(boundary_of(c, cx).is_zero() for c in list(free) + list(torsion))
    B = cx.boundary(d + 1)
    rank_b, _ = _covolume(B)
    base = B.hstack(_vector_columns(free, cx, d))
    rank_f, cov_f = _covolume(base)
    nonzero = order_two = True
    for t in torsion:
        r1, c1 = _covolume(base.hstack(_vector_columns([t], cx, d)))
        r2, c2 = _covolume(base.hstack(_vector_columns([2 * t], cx, d)))
        nonzero &= r1 == rank_f and c1 != cov_f
        order_two &= r2 == rank_f and c2 == cov_f
    independent = True
    if torsion:
        r_all, c_all = _covolume(base.hstack(_vector_columns(list(torsion), cx, d)))
        independent = r_all == rank_f and c_all * 2 ** len(torsion) == cov_f
    generate = True
    if check_generation:
        ker = len(cx.cells.get(d, ())) - smith_normal_form(cx.boundary(d)).rank
        s = smith_normal_form(base.hstack(_vector_columns(list(torsion), cx, d)))
        generate = s.rank == ker and all(f == 1 for f in s.invariant_factors)
    return ClassReport(cycles, generate, rank_f - rank_b, nonzero, order_two, independent)
