"""
Bruhat covers in S_n, tested on one-line words and on Lehmer codes.

Positions ``i < j`` are 1-based.  ``w`` covers ``w'`` when swapping positions
``i, j`` of ``w'`` gives ``w``, ``w'(i) < w'(j)`` and no position strictly
between carries a value strictly between.

>>> covering_transposition((3, 1, 2), (2, 1, 3))
(1, 3)
>>> covering_by_code((2, 0), (1, 0))
(1, 3)
"""

from __future__ import annotations

__all__ = [
    "CoveringPair", "ext_matrix", "ext_matrix_rec", "covering_transposition",
    "covering_by_code", "covered_list",
]

from dataclasses import dataclass

from .errors import DomainError
from .perm import LehmerCode, Permutation


@dataclass(frozen=True)
class CoveringPair:
    w: Permutation
    w_prime: Permutation
    i: int
    j: int


def _check_ij(n: int, i: int, j: int):
    if not (1 <= i <= n and i < j <= n + 1):
        raise DomainError(f"need 1 <= i < j <= n+1, got i={i}, j={j}, n={n}")


def ext_matrix(w: Permutation, i: int, j: int) -> int:
    """``#{k : i < k < j, w(k) < w(i)}``."""
    n = len(w)
    _check_ij(n, i, j)
    return sum(1 for k in range(i + 1, j) if w[k - 1] < w[i - 1])


def ext_matrix_rec(alpha: LehmerCode, i: int, j: int) -> int:
    """Same count as :func:`ext_matrix`, computed from the code alone."""
    n = len(alpha) + 1
    _check_ij(n, i, j)
    a = tuple(alpha) + (0,)  # alpha_n = 0
    m = 0
    for jj in range(i + 2, j + 1):
        if a[jj - 2] < a[i - 1] - m:
            m += 1
    return m


def covering_transposition(w: Permutation, w_prime: Permutation) -> tuple[int, int] | None:
    if len(w) != len(w_prime):
        raise DomainError("permutations of different sizes")
    diff = [p for p in range(len(w)) if w[p] != w_prime[p]]
    if len(diff) != 2:
        return None
    i, j = diff
    if w[i] != w_prime[j] or w[j] != w_prime[i]:
        return None
    lo, hi = w_prime[i], w_prime[j]
    if lo > hi:
        return None
    if any(lo < w_prime[k] < hi for k in range(i + 1, j)):
        return None
    return (i + 1, j + 1)


def _code_conditions(a: tuple[int, ...], ap: tuple[int, ...], i: int, j: int) -> bool:
    # a, ap padded to length n (alpha_n = 0); i, j 1-based
    if not ap[i - 1] <= a[i - 1] - 1:
        return False
    if ap[j - 1] != a[j - 1] + a[i - 1] - ap[i - 1] - 1:
        return False
    if any(a[k] != ap[k] for k in range(len(a)) if k not in (i - 1, j - 1)):
        return False
    target = ap[i - 1] - a[j - 1]
    return (ext_matrix_rec(a[:-1], i, j) == target
            and ext_matrix_rec(ap[:-1], i, j) == target)


def covering_by_code(alpha: LehmerCode, alpha_prime: LehmerCode) -> tuple[int, int] | None:
    """Covering test phrased entirely in code coordinates."""
    if len(alpha) != len(alpha_prime):
        raise DomainError("codes of different lengths")
    a = tuple(alpha) + (0,)
    ap = tuple(alpha_prime) + (0,)
    n = len(a)
    if sum(ap) != sum(a) - 1:
        return None
    diff = [p + 1 for p in range(n) if a[p] != ap[p]]
    if len(diff) == 2:
        candidates = [tuple(diff)]
    elif len(diff) == 1:
        i = diff[0]
        candidates = [(i, j) for j in range(i + 1, n + 1)]
    else:
        return None
    found = [(i, j) for i, j in candidates if _code_conditions(a, ap, i, j)]
    assert len(found) <= 1, f"ambiguous covering transposition {found}"
    return found[0] if found else None


def covered_list(w: Permutation) -> list[CoveringPair]:
    """Everything ``w`` covers, ordered by ``(i, j)``."""
    n = len(w)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            hi, lo = w[i], w[j]
            if hi < lo:
                continue
            if any(lo < w[k] < hi for k in range(i + 1, j)):
                continue
            wp = list(w)
            wp[i], wp[j] = lo, hi
            out.append(CoveringPair(w, Permutation(tuple(wp)), i + 1, j + 1))
    return out

