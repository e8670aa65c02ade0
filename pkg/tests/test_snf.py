import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flaghomology.cellular import build_complex
from flaghomology.errors import IntegrityError
from flaghomology.perm import ThetaSet
from flaghomology.snf import (
    HomologyGroup, SparseIntMatrix, dense_smith_diagonal, homology, rank, smith_normal_form,
)


def det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n, sign, out = len(m), 1, Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return int(sign * out)


def determinantal_factors(A):
    """Invariant factors as ratios of gcds of k-by-k minors."""
    nr, nc = len(A), len(A[0])
    out, prev = [], 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rs in itertools.combinations(range(nr), k):
            for cs in itertools.combinations(range(nc), k):
                g = math.gcd(g, det([[A[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def naive_snf(A):
    """Plain elimination with the smallest pivot, then a gcd/lcm pass."""
    A = [list(r) for r in A]
    diag = []
    while A and A[0]:
        nz = [(abs(v), i, j) for i, r in enumerate(A) for j, v in enumerate(r) if v]
        if not nz:
            break
        _, i, j = min(nz)
        A[0], A[i] = A[i], A[0]
        for r in A:
            r[0], r[j] = r[j], r[0]
        while True:
            p = A[0][0]
            bad = False
            for r in range(1, len(A)):
                q = A[r][0] // p
                A[r] = [a - q * b for a, b in zip(A[r], A[0])]
                bad |= A[r][0] != 0
            for c in range(1, len(A[0])):
                q = A[0][c] // p
                for r in A:
                    r[c] -= q * r[0]
                bad |= A[0][c] != 0
            if not bad:
                break
            nz = [(abs(A[r][0]), r, 0) for r in range(len(A)) if A[r][0]] + \
                 [(abs(A[0][c]), 0, c) for c in range(len(A[0])) if A[0][c]]
            _, i, j = min(nz)
            A[0], A[i] = A[i], A[0]
            for r in A:
                r[0], r[j] = r[j], r[0]
        diag.append(abs(A[0][0]))
        A = [r[1:] for r in A[1:]]
    # g, l  <-  gcd, lcm until the chain divides
    changed = True
    while changed:
        changed = False
        for a in range(len(diag)):
            for b in range(a + 1, len(diag)):
                g = math.gcd(diag[a], diag[b])
                if g != diag[a]:
                    diag[a], diag[b] = g, diag[a] * diag[b] // g
                    changed = True
    return sorted(diag)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_invariant_factors_match_determinantal_divisors(A):
    assert list(smith_normal_form(A).invariant_factors) == determinantal_factors(A)


def test_random_8x8_against_naive_elimination():
    rng = random.Random(2024)
    for _ in range(200):
        A = [[rng.randint(-4, 4) for _ in range(8)] for _ in range(8)]
        s = smith_normal_form(A)
        assert list(s.invariant_factors) == naive_snf(A)
        assert s.rank == np.linalg.matrix_rank(np.array(A, dtype=float))
        if s.rank == 8:
            assert math.prod(s.invariant_factors) == abs(det(A))


@given(matrices)
def test_divisibility_chain(A):
    f = smith_normal_form(A).invariant_factors
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


def test_small_cases():
    assert smith_normal_form([[2]]).diagonal == (2,)
    assert rank([[0, 0], [0, 0]]) == 0
    assert smith_normal_form(np.array([[2, 4], [6, 8]])).diagonal == (2, 4)
    assert dense_smith_diagonal([[0, 3], [6, 0]]) == [3, 6]
    assert smith_normal_form(SparseIntMatrix(3, 0)).diagonal == ()


def test_sparse_matrix_helpers():
    M = SparseIntMatrix.from_dense([[1, 0], [0, 2]])
    assert M.to_dense() == [[1, 0], [0, 2]]
    assert (M @ M).to_dense() == [[1, 0], [0, 4]]
    assert M.hstack(M).shape == (2, 4)
    assert M.column(1) == {1: 2}


def test_projective_plane_homology():
    cx = build_complex(ThetaSet.from_k(3, [1]))
    assert smith_normal_form(cx.boundary(2)).diagonal == (2,)
    groups = homology(cx)
    assert [str(h) for h in groups] == ["Z", "Z2", "0"]


def test_circle_and_full_flag_of_three():
    assert [str(h) for h in homology(build_complex(ThetaSet.empty(2)))] == ["Z", "Z"]
    groups = homology(build_complex(ThetaSet.empty(3)))
    assert [h.torsion_count for h in groups[1:3]] == [2, 0]


def test_rendering():
    assert str(HomologyGroup(2, 2, (2, 2, 2))) == "Z^2 + Z2^3"
    assert str(HomologyGroup(1, 0, ())) == "0"


def test_broken_complex_is_refused():
    cx = build_complex(ThetaSet.empty(3))
    cx.boundaries[1] = SparseIntMatrix(1, 2, {(0, 0): 1})
    with pytest.raises(IntegrityError):
        homology(cx)


def test_truncated_complex_refuses_top_degree():
    cx = build_complex(ThetaSet.empty(4), max_degree=3)
    assert len(homology(cx, degrees=[0, 1, 2])) == 3
    with pytest.raises(ValueError):
        homology(cx, degrees=[3])
