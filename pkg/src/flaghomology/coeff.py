"""
Boundary coefficients of the Schubert cell complex of the real flag manifold.

For a covering pair ``w > w'`` with transposition ``(i, j)`` and codes
``alpha, alpha'``::

    I      = alpha_1 + ... + alpha_i - alpha'_i
    degree = (-1) ** ((alpha_i - alpha'_i - 1) * (alpha'_i + ... + alpha'_{j-1}))
    c      = (-1) ** I * degree * (1 + (-1) ** (j - i))

so ``c`` is 0 when ``j - i`` is odd and ±2 otherwise.  Non-covering pairs get
``c = 0``.

>>> boundary_coefficient((3, 1, 2), (2, 1, 3)).value
-2
>>> boundary_coefficient((2, 1), (1, 2)).value
0
"""

from __future__ import annotations

__all__ = [
    "BoundaryCoefficient", "MoveCount", "removal_index", "degree_sign",
    "boundary_coefficient", "coefficient", "coefficient_from_codes", "move_counts",
    "delete_letter",
]

from dataclasses import dataclass

from .bruhat import covering_transposition
from .errors import NotCoveringError
from .perm import Permutation, ReducedWord, code


@dataclass(frozen=True)
class BoundaryCoefficient:
    value: int
    removal_index: int
    degree_sign: int
    parity_factor: int
    transposition: tuple[int, int] | None = None


ZERO = BoundaryCoefficient(0, 0, 1, 0, None)


@dataclass(frozen=True)
class MoveCount:
    braids: int
    commutations: int


def _padded_codes(w, w_prime):
    return code(w) + (0,), code(w_prime) + (0,)


def _resolve(w, w_prime, i, j):
    if i is None or j is None:
        ij = covering_transposition(w, w_prime)
    else:
        ij = (i, j) if covering_transposition(w, w_prime) == (i, j) else None
    if ij is None:
        raise NotCoveringError(f"{w} does not cover {w_prime}" + (f" via ({i},{j})" if i else ""))
    return ij


def _removal_index(a, ap, i):
    return sum(a[:i]) - ap[i - 1]


def _degree_exponent(a, ap, i, j):
    return (a[i - 1] - ap[i - 1] - 1) * sum(ap[i - 1:j - 1])


def removal_index(w: Permutation, w_prime: Permutation, i: int | None = None, j: int | None = None) -> int:
    """Position (1-based) of the letter of ``row_reading(w)`` whose deletion gives ``w'``."""
    i, j = _resolve(w, w_prime, i, j)
    a, ap = _padded_codes(w, w_prime)
    return _removal_index(a, ap, i)


def degree_sign(w: Permutation, w_prime: Permutation, i: int | None = None, j: int | None = None) -> int:
    i, j = _resolve(w, w_prime, i, j)
    a, ap = _padded_codes(w, w_prime)
    return -1 if _degree_exponent(a, ap, i, j) % 2 else 1


def coefficient_from_codes(a: tuple[int, ...], ap: tuple[int, ...], i: int, j: int) -> BoundaryCoefficient:
    """Coefficient for a known covering pair; ``a``/``ap`` padded with ``alpha_n = 0``."""
    I = _removal_index(a, ap, i)
    deg = -1 if _degree_exponent(a, ap, i, j) % 2 else 1
    parity = 1 + (-1) ** (j - i)
    value = (-1) ** I * deg * parity
    return BoundaryCoefficient(value, I, deg, parity, (i, j))


def boundary_coefficient(w: Permutation, w_prime: Permutation) -> BoundaryCoefficient:
    ij = covering_transposition(w, w_prime)
    if ij is None:
        return ZERO
    a, ap = _padded_codes(w, w_prime)
    return coefficient_from_codes(a, ap, *ij)


def coefficient(w: Permutation, w_prime: Permutation) -> int:
    return boundary_coefficient(w, w_prime).value


def move_counts(w: Permutation, w_prime: Permutation) -> MoveCount:
    """Braid moves and commutations taking the letter-deleted word to ``row_reading(w')``."""
    i, j = _resolve(w, w_prime, None, None)
    a, ap = _padded_codes(w, w_prime)
    rounds = a[i - 1] - ap[i - 1] - 1
    per_round_braids = j - i - 1 + a[j - 1] - ap[i - 1]
    braids = rounds * per_round_braids
    commutations = rounds * (sum(ap[i - 1:j - 1]) - 2 * per_round_braids)
    return MoveCount(braids, commutations)


def delete_letter(word: ReducedWord, index: int) -> ReducedWord:
    """Drop the ``index``-th letter (1-based)."""
    return ReducedWord(word[:index - 1] + word[index:])
