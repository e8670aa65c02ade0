"""
Poincaré polynomials of real partial flag manifolds from block sizes.

``P``  counts cells (the mod-2 Betti numbers).
``FP`` is the free (rational) part.
``TP = (P - FP) / (1 + t)`` counts the Z/2 summands of each H_k.

>>> th = ThetaSet.empty(3)
>>> str(mod2_poincare(th))
'1 + 2t + 2t^2 + t^3'
>>> str(free_poincare(th))
'1 + t^3'
>>> str(torsion_poincare(th))
'2t'
"""

from __future__ import annotations

__all__ = [
    "IntPolynomial", "t_integer", "t_multinomial", "big_L",
    "mod2_poincare", "free_poincare", "torsion_poincare",
]

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IntegrityError
from .perm import ThetaSet


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``t``; ``coeffs[k]`` multiplies ``t^k``.

    >>> (IntPolynomial((1, 1)) * IntPolynomial((1, -1))).coeffs
    (1, 0, -1)
    """
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(m)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, x in enumerate(self.coeffs):
            if x:
                for b, y in enumerate(other.coeffs):
                    out[a + b] += x * y
        return IntPolynomial(tuple(out))

    def divmod(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a divisor with leading coefficient ±1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if abs(lead) != 1:
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dq = other.degree
        q = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * lead
            if c:
                q[k - dq] = c
                for m, y in enumerate(other.coeffs):
                    rem[k - dq + m] -= c * y
        return IntPolynomial(tuple(q)), IntPolynomial(tuple(rem))

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod(other)
        if r.coeffs:
            raise IntegrityError(f"{self} is not divisible by {other}")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


ONE = IntPolynomial((1,))


def t_integer(m: int, step: int = 1) -> IntPolynomial:
    """``1 + q + ... + q^(m-1)`` with ``q = t^step``."""
    c = [0] * (step * (m - 1) + 1) if m > 0 else []
    for k in range(m):
        c[k * step] = 1
    return IntPolynomial(tuple(c))


def _t_factorial(m: int, step: int) -> IntPolynomial:
    out = ONE
    for k in range(1, m + 1):
        out = out * t_integer(k, step)
    return out


def t_multinomial(parts: Sequence[int], step: int = 1) -> IntPolynomial:
    """Gaussian multinomial in ``q = t^step``.

    >>> t_multinomial([1, 1]).coeffs
    (1, 1)
    """
    num = _t_factorial(sum(parts), step)
    den = ONE
    for p in parts:
        den = den * _t_factorial(p, step)
    return num.exact_div(den)


def big_L(th: ThetaSet) -> int:
    return sum(b // 2 for b in th.blocks)


def mod2_poincare(th: ThetaSet) -> IntPolynomial:
    return t_multinomial(th.blocks)


def _product(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    out = ONE
    for p in polys:
        out = out * p
    return out


def free_poincare(th: ThetaSet) -> IntPolynomial:
    n = th.n
    L = big_L(th)
    out = t_multinomial([b // 2 for b in th.blocks], step=4)
    out = out * _product(ONE + IntPolynomial.monomial(4 * i + 3) for i in range(L, (n - 1) // 2))
    if n % 2 == 0 and 2 * L != n:
        out = out * (ONE + IntPolynomial.monomial(n - 1))
    return out


def torsion_poincare(th: ThetaSet) -> IntPolynomial:
    return (mod2_poincare(th) - free_poincare(th)).exact_div(IntPolynomial((1, 1)))
