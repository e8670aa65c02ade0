"""
Floating-point checks of the rotation identities behind the degree signs.

``A_i = E_{i,i+1} - E_{i+1,i}`` and ``exp(t A_i)`` is a plane rotation in
coordinates ``i, i+1``.  Two facts are checked numerically:

* a commutation of generators swaps two cube coordinates (degree -1);
* a braid move ``s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1}`` maps
  ``(t_k, t_{k+1}, t_{k+2})`` to ``(t_{k+2}, -t_{k+1}, t_k)`` (degree +1).

>>> import numpy as np
>>> np.allclose(rot(2, 1, np.pi / 2), [[0, 1], [-1, 0]])
True
>>> coordinate_map_determinant("commutation"), coordinate_map_determinant("braid")
(-1, 1)
"""

from __future__ import annotations

__all__ = [
    "RotationGenerator", "GeomReport", "rot", "check_commutation",
    "check_braid_identities", "coordinate_map_determinant", "run_all",
]

import math
from dataclasses import dataclass

import numpy as np

TOLERANCE = 1e-12
HALF_PI = math.pi / 2


@dataclass(frozen=True)
class RotationGenerator:
    n: int
    i: int

    def __post_init__(self):
        if not 1 <= self.i <= self.n - 1:
            raise ValueError(f"need 1 <= i <= n-1, got i={self.i}, n={self.n}")

    @property
    def matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        A[self.i - 1, self.i] = 1.0
        A[self.i, self.i - 1] = -1.0
        return A

    def exp(self, t: float) -> np.ndarray:
        R = np.eye(self.n)
        c, s = math.cos(t), math.sin(t)
        a = self.i - 1
        R[a, a], R[a, a + 1], R[a + 1, a], R[a + 1, a + 1] = c, s, -s, c
        return R


def rot(n: int, i: int, t: float) -> np.ndarray:
    return RotationGenerator(n, i).exp(t)


@dataclass(frozen=True)
class GeomReport:
    name: str
    n: int
    i: int
    max_deviation: float
    tolerance: float = TOLERANCE

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def _samples(count: int) -> list[float]:
    # evenly spaced in the open interval (0, pi)
    return [math.pi * (k + 1) / (count + 1) for k in range(count)]


def check_commutation(n: int, samples: int = 20) -> GeomReport:
    worst = 0.0
    ts = _samples(samples)
    for i in range(1, n):
        for j in range(i + 2, n):
            for t in ts:
                for s in ts:
                    d = rot(n, i, t) @ rot(n, j, s) - rot(n, j, s) @ rot(n, i, t)
                    worst = max(worst, float(np.abs(d).max()))
    return GeomReport("commutation", n, 0, worst)


def _middle_closed_forms(n: int, i: int, t: float) -> tuple[np.ndarray, np.ndarray]:
    c, s = math.cos(t), math.sin(t)
    a = i - 1
    M3 = np.eye(n)
    M4 = np.eye(n)
    block3 = [[-c, 0, s], [0, -1, 0], [s, 0, c]]
    block4 = [[c, 0, -s], [0, -1, 0], [-s, 0, -c]]
    M3[a:a + 3, a:a + 3] = block3
    M4[a:a + 3, a:a + 3] = block4
    return M3, M4


def check_braid_identities(n: int, i: int, samples: int = 20) -> list[GeomReport]:
    """Max deviation of each braid-move identity over ``samples`` angles."""
    if not 1 <= i <= n - 2:
        raise ValueError(f"need 1 <= i <= n-2, got i={i}, n={n}")
    names = ["slide_left", "slide_right", "middle", "middle_negated", "diagonal"]
    worst = dict.fromkeys(names, 0.0)
    h = HALF_PI
    D = np.eye(n)
    D[i - 1, i - 1] = D[i + 1, i + 1] = -1.0
    for t in _samples(samples):
        Ai = lambda x: rot(n, i, x)
        Aj = lambda x: rot(n, i + 1, x)
        lhs1, rhs1 = Ai(t) @ Aj(h) @ Ai(h), Aj(h) @ Ai(h) @ Aj(t)
        lhs2, rhs2 = Ai(h) @ Aj(h) @ Ai(t), Aj(t) @ Ai(h) @ Aj(h)
        mid = Ai(h) @ Aj(t) @ Ai(h)
        mid_neg = Aj(h) @ Ai(-t) @ Aj(h)
        M3, M4 = _middle_closed_forms(n, i, t)
        devs = {
            "slide_left": lhs1 - rhs1,
            "slide_right": lhs2 - rhs2,
            "middle": mid - M3,
            "middle_negated": mid_neg - M4,
            # mid_neg is orthogonal, so its inverse is its transpose
            "diagonal": mid_neg.T @ mid - D,
        }
        for k, v in devs.items():
            worst[k] = max(worst[k], float(np.abs(v).max()))
    return [GeomReport(k, n, i, worst[k]) for k in names]


def _perm_sign(p: list[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = p[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def coordinate_map_determinant(kind: str) -> int:
    """Determinant of the linear coordinate change induced by one move.

    Computed exactly as (sign of the coordinate permutation) times (product of
    the coordinate signs).
    """
    if kind == "commutation":
        perm, signs = [1, 0], [1, 1]
    elif kind == "braid":
        perm, signs = [2, 1, 0], [1, -1, 1]
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    return _perm_sign(perm) * math.prod(signs)


def run_all(ns=(3, 4, 5), samples: int = 20) -> list[GeomReport]:
    out = []
    for n in ns:
        out.append(check_commutation(n, samples))
        for i in range(1, n - 1):
            out.extend(check_braid_identities(n, i, samples))
    return out
