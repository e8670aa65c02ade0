"""
Closed boundary formulas for 3-cells and 4-cells, stored as data and checked
against the computed boundary map.

A rule reads like ``<i,i,k> -> -2 <i,k>`` over index ranges such as
``i in 1..n-4, k in i+3..n-1``.  A coefficient may carry indicator factors
``[m not in theta]``.  In a partial flag only cells that are minimal
representatives are checked, and every term on the right with a nonzero
weight must itself be a cell of the partial flag.

>>> r = RULES_3[0]
>>> r.lhs, r.rhs
('i,i,i', ((-2, 'i,i+2', ('i+2',)),))
>>> next(iter(r.instances(5)))
((1, 1, 1), [(-2, (1, 3), (3,))])
"""

from __future__ import annotations

__all__ = ["BoundaryRule", "RULES_3", "RULES_4", "RuleFailure", "check_rule", "check_rules"]

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .cellular import Chain, boundary_of, cell
from .perm import ThetaSet, all_thetas, is_minimal_representative

_TERM = re.compile(r"^([a-z]?)([+-]\d+)?$|^(\d+)$")


def _eval(term: str, env: dict[str, int]) -> int:
    term = term.strip()
    m = _TERM.match(term)
    if not m:
        raise ValueError(f"bad index term {term!r}")
    if m.group(3):
        return int(m.group(3))
    return env[m.group(1)] + int(m.group(2) or 0)


@dataclass(frozen=True)
class BoundaryRule:
    lhs: str
    ranges: tuple[tuple[str, str, str], ...]
    rhs: tuple[tuple[int, str, tuple[str, ...]], ...] = ()

    def bindings(self, n: int) -> Iterator[dict[str, int]]:
        def rec(k, env):
            if k == len(self.ranges):
                yield dict(env)
                return
            var, lo, hi = self.ranges[k]
            for v in range(_eval(lo, env), _eval(hi, env) + 1):
                env[var] = v
                yield from rec(k + 1, env)
            env.pop(var, None)
        yield from rec(0, {"n": n})

    def instances(self, n: int):
        """``(lhs spectrum, [(coefficient, rhs spectrum, indicator indices)])`` per binding."""
        for env in self.bindings(n):
            lhs = tuple(_eval(t, env) for t in self.lhs.split(","))
            rhs = [(c, tuple(_eval(t, env) for t in spec.split(",")),
                    tuple(_eval(t, env) for t in inds)) for c, spec, inds in self.rhs]
            yield lhs, rhs

    def __str__(self):
        def side(c, spec, inds):
            factor = "".join(f"[{m}∉Θ]" for m in inds)
            return f"{c:+d}{factor}<{spec}>"
        right = " ".join(side(*t) for t in self.rhs) or "0"
        over = ", ".join(f"{v} in {lo}..{hi}" for v, lo, hi in self.ranges)
        return f"d<{self.lhs}> = {right}  ({over})"


def _r(lhs, ranges, *rhs):
    parsed = tuple((var, lo, hi) for var, span in ranges
                   for lo, hi in [span.split("..")])
    return BoundaryRule(lhs, parsed, tuple((c, spec, tuple(inds)) for c, spec, *rest in rhs
                                           for inds in [rest[0] if rest else ()]))


# 3-cells
RULES_3 = (
    _r("i,i,i", [("i", "1..n-3")], (-2, "i,i+2", ["i+2"])),
    _r("i,i,i+1", [("i", "1..n-2")]),
    _r("i,i,i+2", [("i", "1..n-3")]),
    _r("i,i,k", [("i", "1..n-4"), ("k", "i+3..n-1")], (-2, "i,k")),
    _r("i,i+1,i+1", [("i", "1..n-3")], (2, "i,i+1"), (-2, "i+1,i+1")),
    _r("i,k,k", [("i", "1..n-4"), ("k", "i+2..n-2")], (2, "i,k")),
    _r("i,i+1,i+2", [("i", "1..n-3")], (2, "i,i+2", ["i"])),
    _r("i,k-1,k", [("i", "1..n-4"), ("k", "i+3..n-1")], (2, "i,k")),
    _r("i,i+1,k", [("i", "1..n-4"), ("k", "i+3..n-1")], (-2, "i+1,k")),
    _r("i,j,k", [("i", "1..n-5"), ("j", "i+2..n-3"), ("k", "j+2..n-1")]),
)

# 4-cells, followed by the re-indexed forms used when combining them
RULES_4 = (
    _r("i,i,i,i", [("i", "1..n-4")], (-2, "i,i+2,i+2", ["i+2"]), (-2, "i,i,i")),
    _r("i,i,i,i+1", [("i", "1..n-3")]),
    _r("i,i,i,i+2", [("i", "1..n-3")], (-2, "i,i,i+2")),
    _r("i,i,i,i+3", [("i", "1..n-4")], (-2, "i,i+2,i+3"), (-2, "i,i,i+3")),
    _r("i,i,i,k", [("i", "1..n-5"), ("k", "i+4..n-1")], (-2, "i,i+2,k", ["i+2"])),
    _r("i,i,i+1,i+1", [("i", "1..n-3")], (2, "i+1,i+1,i+2", ["i+2"]), (-2, "i,i,i+1", ["i"])),
    _r("i,i,i+1,i+2", [("i", "1..n-3")], (-2, "i,i,i+2")),
    _r("i,i,i+1,j", [("i", "1..n-4"), ("j", "i+3..n-1")]),
    _r("i,i,i+2,i+2", [("i", "1..n-4")], (-2, "i,i,i+2")),
    _r("i,i,j,j+1", [("i", "1..n-4"), ("j", "i+2..n-2")], (-2, "i,j,j+1"), (-2, "i,i,j+1")),
    _r("i,i,i+2,j", [("i", "1..n-5"), ("j", "i+4..n-1")]),
    _r("i,i,j,k", [("i", "1..n-6"), ("j", "i+3..n-3"), ("k", "j+2..n-1")], (-2, "i,j,k")),
    _r("i,i,j,j", [("i", "1..n-5"), ("j", "i+3..n-2")], (-2, "i,j,j"), (-2, "i,i,j")),
    _r("i,i+1,i+1,i+1", [("i", "1..n-4")], (-2, "i+1,i+1,i+1"), (2, "i,i+1,i+3", ["i+3"])),
    _r("i,i+1,i+1,i+2", [("i", "1..n-3")]),
    _r("i,i+1,i+1,i+3", [("i", "1..n-4")], (-2, "i+1,i+1,i+3")),
    _r("i,i+1,i+1,j", [("i", "1..n-5"), ("j", "i+4..n-1")], (-2, "i+1,i+1,j"), (2, "i,i+1,j")),
    _r("i,i+1,i+2,i+2", [("i", "1..n-4")], (2, "i,i+2,i+2", ["i"]), (-2, "i,i+1,i+2")),
    _r("i,i+1,i+2,i+3", [("i", "1..n-4")], (-2, "i+1,i+2,i+3"), (-2, "i,i+1,i+3", ["i+1"])),
    _r("i,i+1,j,j+1", [("i", "1..n-5"), ("j", "i+3..n-2")], (-2, "i+1,j,j+1"), (-2, "i,i+1,j+1")),
    _r("i,j,j+1,j+1", [("i", "1..n-5"), ("j", "i+2..n-3")], (2, "i,j+1,j+1"), (-2, "i,j,j+1")),
    _r("i,i+1,j,j", [("i", "1..n-5"), ("j", "i+3..n-2")], (-2, "i+1,j,j"), (-2, "i,i+1,j")),
    _r("i,i+1,j,k", [("i", "1..n-6"), ("j", "i+3..n-3"), ("k", "j+2..n-1")], (-2, "i+1,j,k")),
    _r("i,j,j,j", [("i", "1..n-5"), ("j", "i+2..n-3")], (2, "i,j,j+2", ["j+2"])),
    _r("i,j,j,j+1", [("i", "1..n-4"), ("j", "i+2..n-2")]),
    _r("i,j,j,j+2", [("i", "1..n-5"), ("j", "i+2..n-3")]),
    _r("i,j,j,k", [("i", "1..n-6"), ("j", "i+2..n-4"), ("k", "j+3..n-1")], (2, "i,j,k")),
    _r("i,j,k,k", [("i", "1..n-6"), ("j", "i+2..n-4"), ("k", "j+2..n-2")], (-2, "i,j,k")),
    _r("i,i+1,i+2,k", [("i", "1..n-5"), ("k", "i+4..n-1")], (2, "i,i+2,k", ["i"])),
    _r("i,j,j+1,k", [("i", "1..n-6"), ("j", "i+2..n-4"), ("k", "j+3..n-1")], (2, "i,j+1,k")),
    _r("i,j,j+1,j+2", [("i", "1..n-5"), ("j", "i+2..n-3")], (-2, "i,j,j+2", ["j"])),
    _r("i,j,k,k+1", [("i", "1..n-6"), ("j", "i+2..n-4"), ("k", "j+2..n-2")], (-2, "i,j,k+1")),
    _r("i,j,k,l", [("i", "1..n-7"), ("j", "i+2..n-5"), ("k", "j+2..n-3"), ("l", "k+2..n-1")]),
    _r("i-1,i,i,i+2", [("i", "2..n-3")], (-2, "i,i,i+2")),
    _r("i-1,i,j,k", [("i", "2..n-5"), ("j", "i+2..n-3"), ("k", "j+2..n-1")], (-2, "i,j,k")),
    _r("i,j,k-1,k", [("i", "1..n-6"), ("j", "i+2..n-4"), ("k", "j+3..n-1")], (-2, "i,j,k")),
)


@dataclass(frozen=True)
class RuleFailure:
    rule: BoundaryRule
    theta: ThetaSet
    lhs: tuple[int, ...]
    expected: str
    computed: str


def _expected(rhs, th: ThetaSet, degree: int) -> Chain:
    n = th.n
    coeffs: dict = {}
    for c, spec, inds in rhs:
        weight = c
        for m in inds:
            weight *= th.co_indicator(m)
        if not weight:
            continue
        # kept even when not a cell of the partial flag, so a missing
        # indicator factor shows up as a mismatch
        w = cell(spec, n)
        coeffs[w] = coeffs.get(w, 0) + weight
    return Chain(degree, coeffs)


def check_rule(rule: BoundaryRule, th: ThetaSet) -> tuple[int, list[RuleFailure]]:
    """(number of instances checked, failures) for one rule in one partial flag."""
    checked = 0
    failures = []
    n = th.n
    for lhs, rhs in rule.instances(n):
        w = cell(lhs, n)
        if not is_minimal_representative(w, th):
            continue
        got = boundary_of(Chain(len(lhs), {w: 1}), th)
        want = _expected(rhs, th, len(lhs) - 1)
        checked += 1
        if got != want:
            failures.append(RuleFailure(rule, th, lhs, str(want), str(got)))
    return checked, failures


def check_rules(n_values, rules=RULES_3 + RULES_4) -> tuple[int, list[RuleFailure]]:
    total = 0
    failures: list[RuleFailure] = []
    for n, rule in itertools.product(n_values, rules):
        for th in all_thetas(n):
            c, f = check_rule(rule, th)
            total += c
            failures += f
    return total, failures
