import math

import numpy as np
import pytest

from flaghomology.geomcheck import (
    RotationGenerator, check_braid_identities, check_commutation, coordinate_map_determinant,
    rot, run_all,
)


def test_rotation_basics():
    assert np.allclose(rot(4, 2, 0.0), np.eye(4))
    assert np.allclose(rot(2, 1, math.pi / 2), [[0, 1], [-1, 0]])
    R = rot(5, 3, 0.7)
    assert np.allclose(R @ R.T, np.eye(5))


def test_rotation_is_matrix_exponential():
    from scipy.linalg import expm
    g = RotationGenerator(4, 2)
    assert np.allclose(expm(0.9 * g.matrix), g.exp(0.9), atol=1e-12)


def test_rotation_domain():
    with pytest.raises(ValueError):
        RotationGenerator(3, 3)
    with pytest.raises(ValueError):
        check_braid_identities(3, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_identities_hold(n):
    assert check_commutation(n).passed
    for i in range(1, n - 1):
        assert all(r.passed for r in check_braid_identities(n, i))


def test_middle_identity_at_quarter_turn():
    h = math.pi / 2
    M = rot(3, 1, h) @ rot(3, 2, h) @ rot(3, 1, h)
    assert np.allclose(M, [[0, 0, 1], [0, -1, 0], [1, 0, 0]], atol=1e-12)


def test_determinants_of_coordinate_changes():
    assert coordinate_map_determinant("commutation") == -1
    assert coordinate_map_determinant("braid") == 1
    # the braid coordinate change as an explicit matrix
    assert round(np.linalg.det(np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]]))) == 1
    with pytest.raises(ValueError):
        coordinate_map_determinant("slide")


def test_run_all_summary():
    reports = run_all()
    assert len(reports) == 3 + 5 * (1 + 2 + 3)
    assert max(r.max_deviation for r in reports) <= 1e-12
