"""
Symmetric-group combinatorics in one-line notation.

Permutations are tuples of the values ``1..n`` (``w[0]`` is w(1)); codes are
tuples of length ``n-1``.  Reduced words are tuples of simple-reflection
indices ``1..n-1``.

>>> code((1, 3, 7, 5, 8, 2, 9, 4, 6))
(0, 1, 4, 2, 3, 0, 2, 0)
>>> decode((0, 1, 4, 2, 3, 0, 2), n=9)
(1, 3, 7, 5, 8, 2, 9, 4, 6)
>>> row_reading((3, 1, 2))
(2, 1)
>>> evaluate_word((2, 1), 3)
(3, 1, 2)
"""

from __future__ import annotations

__all__ = [
    "Permutation", "LehmerCode", "CodeSpectrum", "ReducedWord", "ThetaSet",
    "check_permutation", "length", "code", "decode", "spectrum", "from_spectrum",
    "descents", "is_minimal_representative", "enumerate_min_reps", "split_code",
    "row_reading", "evaluate_word", "project", "all_permutations", "all_codes",
    "all_thetas", "multinomial",
]

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NewType

from .errors import DomainError, InvalidCodeError

# one-line word w(1)...w(n) with values 1..n
Permutation = NewType("Permutation", tuple[int, ...])

# (alpha_1, ..., alpha_{n-1}) with 0 <= alpha_i <= n-i
LehmerCode = NewType("LehmerCode", tuple[int, ...])

# weakly increasing row indices b_1 <= ... <= b_l
CodeSpectrum = NewType("CodeSpectrum", tuple[int, ...])

# simple-reflection indices, applied left to right as position swaps
ReducedWord = NewType("ReducedWord", tuple[int, ...])


@dataclass(frozen=True)
class ThetaSet:
    """A subset of the simple roots ``{1..n-1}``, selecting a flag manifold.

    ``ks`` is the complementary index set, i.e. the positions where minimal
    coset representatives may descend.
    """
    n: int
    theta: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        theta = frozenset(int(i) for i in self.theta)
        bad = [i for i in theta if not 1 <= i <= self.n - 1]
        if bad:
            raise DomainError(f"theta indices {sorted(bad)} outside [1, {self.n - 1}]")
        object.__setattr__(self, "theta", theta)

    @classmethod
    def from_k(cls, n: int, ks: Iterable[int]) -> ThetaSet:
        ks = set(ks)
        bad = [k for k in ks if not 0 < k < n]
        if bad:
            raise DomainError(f"k-set entries {sorted(bad)} outside (0, {n})")
        return cls(n, frozenset(range(1, n)) - ks)

    @classmethod
    def empty(cls, n: int) -> ThetaSet:
        """Theta = {} : the maximal flag manifold."""
        return cls(n, frozenset())

    @classmethod
    def full(cls, n: int) -> ThetaSet:
        """Theta = Sigma : a point."""
        return cls(n, frozenset(range(1, n)))

    @cached_property
    def ks(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n) if i not in self.theta)

    @cached_property
    def blocks(self) -> tuple[int, ...]:
        """Block sizes ``k_1, k_2 - k_1, ..., n - k_r``."""
        cuts = (0,) + self.ks + (self.n,)
        return tuple(b - a for a, b in zip(cuts, cuts[1:]))

    @property
    def dim(self) -> int:
        """Dimension of the flag manifold, i.e. the length of the top cell."""
        return self.n * (self.n - 1) // 2 - sum(b * (b - 1) // 2 for b in self.blocks)

    def __contains__(self, i: int) -> bool:
        return i in self.theta

    def indicator(self, i: int) -> int:
        """1 if ``a_i`` is in theta, else 0."""
        return int(i in self.theta)

    def co_indicator(self, i: int) -> int:
        """1 if ``a_i`` is *not* in theta, else 0 (only for ``1 <= i <= n-1``)."""
        if not 1 <= i <= self.n - 1:
            raise DomainError(f"root index {i} outside [1, {self.n - 1}]")
        return int(i not in self.theta)

    def __str__(self):
        return f"n={self.n} theta={sorted(self.theta)} k={list(self.ks)}"


def all_thetas(n: int) -> list[ThetaSet]:
    """All ``2^(n-1)`` subsets, ordered by bitmask over ``a_1, a_2, ...``."""
    out = []
    for mask in range(2 ** (n - 1)):
        out.append(ThetaSet(n, frozenset(i for i in range(1, n) if mask >> (i - 1) & 1)))
    return out


def check_permutation(w: Iterable[int]) -> Permutation:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"{w} is not a permutation of 1..{len(w)}")
    return Permutation(w)


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for k in range(i + 1, n) if w[k] < w[i])


def code(w: Permutation) -> LehmerCode:
    n = len(w)
    return LehmerCode(tuple(sum(1 for k in range(i + 1, n) if w[k] < w[i])
                            for i in range(n - 1)))


def decode(alpha: Iterable[int], n: int | None = None) -> Permutation:
    """Inverse of :func:`code`; short codes are padded with zeros up to ``n - 1``."""
    alpha = tuple(alpha)
    if n is None:
        n = len(alpha) + 1
    if len(alpha) > n - 1:
        # a trailing alpha_n = 0 is tolerated
        if any(alpha[n - 1:]):
            raise InvalidCodeError(f"code {alpha} too long for n={n}")
        alpha = alpha[:n - 1]
    alpha = alpha + (0,) * (n - 1 - len(alpha))
    remaining = list(range(1, n + 1))
    w = []
    for i, a in enumerate(alpha, start=1):
        if not 0 <= a <= n - i:
            raise InvalidCodeError(f"alpha_{i} = {a} outside [0, {n - i}]")
        w.append(remaining.pop(a))
    w.extend(remaining)
    return Permutation(tuple(w))


def spectrum(alpha: LehmerCode) -> CodeSpectrum:
    """Row index ``i`` repeated ``alpha_i`` times."""
    return CodeSpectrum(tuple(i for i, a in enumerate(alpha, start=1) for _ in range(a)))


def from_spectrum(spec: Iterable[int], n: int) -> LehmerCode:
    """Inverse of :func:`spectrum` for codes of length ``n - 1``."""
    alpha = [0] * (n - 1)
    for b in spec:
        if not 1 <= b <= n - 1:
            raise DomainError(f"spectrum entry {b} outside [1, {n - 1}]")
        alpha[b - 1] += 1
    return LehmerCode(tuple(alpha))


def descents(w: Permutation) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def is_minimal_representative(w: Permutation, th: ThetaSet) -> bool:
    if len(w) != th.n:
        raise DomainError(f"permutation of length {len(w)} vs n={th.n}")
    return all(w[i - 1] < w[i] for i in th.theta)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def _min_reps(values: tuple[int, ...], blocks: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not blocks:
        yield ()
        return
    head, rest = blocks[0], blocks[1:]
    for chosen in itertools.combinations(values, head):
        left = tuple(v for v in values if v not in chosen)
        for tail in _min_reps(left, rest):
            yield chosen + tail


def enumerate_min_reps(th: ThetaSet) -> list[Permutation]:
    """Minimal coset representatives, sorted by (length, word)."""
    reps = [Permutation(w) for w in _min_reps(tuple(range(1, th.n + 1)), th.blocks)]
    reps.sort(key=lambda w: (length(w), w))
    return reps


def split_code(alpha: LehmerCode, th: ThetaSet) -> list[tuple[int, ...]]:
    """Cut a code into one partition per k-block.

    Block ``j`` is ``(alpha_{k_{j-1}+1}, ..., alpha_{k_j})``; read from the last
    entry back it is a partition inside a ``(k_j - k_{j-1}) x (n - k_j)`` box.
    Entries after ``k_r`` must vanish.
    """
    n = th.n
    alpha = tuple(alpha) + (0,) * (n - 1 - len(alpha))
    out = []
    start = 0
    for k in th.ks:
        block = alpha[start:k]
        if any(a > b for a, b in zip(block, block[1:])):
            raise DomainError(f"block {block} of {alpha} is not a partition: not a minimal representative")
        if block and block[-1] > n - k:
            raise DomainError(f"block {block} does not fit width {n - k}")
        out.append(block)
        start = k
    if any(alpha[start:]):
        raise DomainError(f"code {alpha} has boxes past k_r={start}: not a minimal representative")
    return out


def row_reading(w: Permutation) -> ReducedWord:
    """Row ``i`` contributes ``s_{alpha_i+i-1} ... s_{i+1} s_i``; rows read bottom-up."""
    word = []
    for i, a in enumerate(code(w), start=1):
        word.extend(range(a + i - 1, i - 1, -1))
    return ReducedWord(tuple(word))


def evaluate_word(word: Iterable[int], n: int) -> Permutation:
    """Multiply simple reflections left to right, each swapping two positions."""
    w = list(range(1, n + 1))
    for s in word:
        if not 1 <= s <= n - 1:
            raise DomainError(f"letter s_{s} outside [1, {n - 1}]")
        w[s - 1], w[s] = w[s], w[s - 1]
    return Permutation(tuple(w))


def project(w: Permutation, th: ThetaSet) -> Permutation:
    """Sort each k-block ascending: the minimal representative of ``w W_theta``."""
    cuts = (0,) + th.ks + (th.n,)
    out: list[int] = []
    for a, b in zip(cuts, cuts[1:]):
        out.extend(sorted(w[a:b]))
    return Permutation(tuple(out))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


def all_codes(n: int) -> Iterator[LehmerCode]:
    """Every element of ``[0,n-1] x [0,n-2] x ... x [0,1]``."""
    for c in itertools.product(*(range(n - i + 1) for i in range(1, n))):
        yield LehmerCode(c)
