from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from flaghomology.cellular import Chain, boundary_of, build_complex, cell, cell_boundary
from flaghomology.errors import DomainError
from flaghomology.perm import ThetaSet, all_permutations, all_thetas, length
from flaghomology.poincare import free_poincare, mod2_poincare
from flaghomology.snf import homology


def mirrored(th):
    return ThetaSet(th.n, frozenset(th.n - i for i in th.theta))


thetas = st.integers(2, 6).flatmap(
    lambda n: st.sets(st.integers(1, n - 1)).map(lambda s: ThetaSet(n, frozenset(s))))


def test_circle_boundary_vanishes():
    cx = build_complex(ThetaSet.empty(2))
    assert cx.boundary(1).to_dense() == [[0]]


def test_projective_plane_matrices():
    cx = build_complex(ThetaSet.from_k(3, [1]))
    assert cx.boundary(1).to_dense() == [[0]]
    assert abs(cx.boundary(2).to_dense()[0][0]) == 2


def test_cell_counts_follow_length_census():
    cx = build_complex(ThetaSet.empty(4))
    census = Counter(length(w) for w in all_permutations(4))
    assert cx.cell_counts() == [census[d] for d in range(7)] == [1, 3, 5, 6, 5, 3, 1]


@pytest.mark.parametrize("n", range(2, 7))
def test_cell_census_matches_mod2_polynomial(n):
    for th in all_thetas(n):
        cx = build_complex(th)
        P = mod2_poincare(th)
        assert cx.cell_counts() == [P[d] for d in range(th.dim + 1)]
        assert cx.dim == th.dim == cx.max_degree


@settings(max_examples=40, deadline=None)
@given(thetas)
def test_euler_characteristic_matches_free_part(th):
    cx = build_complex(th)
    assert cx.dd_is_zero()
    assert cx.euler_characteristic() == free_poincare(th)(-1) == mod2_poincare(th)(-1)


@pytest.mark.parametrize("n", range(2, 8))
def test_reversing_the_blocks_gives_the_same_homology(n):
    # F(b_1, ..., b_r) and F(b_r, ..., b_1) are diffeomorphic
    thetas_n = all_thetas(n) if n <= 6 else [ThetaSet.from_k(7, k) for k in ([2], [1, 3], [3, 5])]
    for th in thetas_n:
        a = homology(build_complex(th))
        b = homology(build_complex(mirrored(th)))
        assert [(h.betti, h.torsion_factors) for h in a] == [(h.betti, h.torsion_factors) for h in b]


def test_displayed_three_cell_boundaries():
    for n in (5, 6):
        th = ThetaSet.empty(n)
        for i in range(1, n - 2):
            got = boundary_of(Chain.from_spectra({(i, i + 1, i + 1): 1}, n), th)
            assert got == Chain.from_spectra({(i, i + 1): 2, (i + 1, i + 1): -2}, n)
        for i in range(1, n - 1):
            assert boundary_of(Chain.from_spectra({(i, i, i + 1): 1}, n), th).is_zero()


def test_local_and_matrix_boundaries_agree():
    th = ThetaSet.from_k(5, [1, 3])
    cx = build_complex(th)
    for d in range(1, cx.max_degree + 1):
        for w in cx.cells[d]:
            c = Chain(d, {w: 1})
            assert boundary_of(c, cx) == boundary_of(c, th)


def test_cell_boundary_only_even_gaps():
    for w in all_permutations(5):
        for wp, v in cell_boundary(w):
            assert abs(v) == 2
            assert length(wp) == length(w) - 1


def test_point_complex():
    cx = build_complex(ThetaSet.full(5))
    assert cx.cell_counts() == [1]
    assert cx.dd_is_zero()
    assert [str(h) for h in homology(cx)] == ["Z"]


def test_chain_arithmetic_and_rendering():
    a = Chain.from_spectra({(1, 2): 1}, 4)
    b = Chain.from_spectra({(2, 2): 1}, 4)
    assert str(2 * a - 2 * b) == "2<1,2> - 2<2,2>"
    assert (a - a).is_zero()
    assert str(Chain.from_spectra({(1, 1, 2, 2): 1}, 4)) == "<1,1,2,2>"
    assert Chain.from_spectra({(1, 1): 1, (2, 2): 1}, 4).restrict(ThetaSet.from_k(4, [2])) == b
    with pytest.raises(DomainError):
        a + Chain.from_spectra({(1,): 1}, 4)


def test_boundary_of_rejects_foreign_cells():
    th = ThetaSet.from_k(4, [2])
    with pytest.raises(DomainError):
        boundary_of(Chain(1, {cell((1,), 4): 1}), th)
    with pytest.raises(DomainError):
        boundary_of(Chain(3, {cell((2,), 4): 1}), ThetaSet.empty(4))
