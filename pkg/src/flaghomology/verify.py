"""
Verification suites behind ``flaghomology verify``.

Each suite returns a :class:`SuiteResult` with status ``PASS``, ``FAIL`` or
``WARN``.  Only ``FAIL`` makes the command exit non-zero.
"""

from __future__ import annotations

__all__ = ["SuiteResult", "TIERS", "run_suites", "SUITES"]

import time
from dataclasses import dataclass
from typing import Callable

from . import boundary_rules, closedform, geomcheck
from .bruhat import covering_by_code, covering_transposition
from .cellular import boundary_of, build_complex
from .perm import ThetaSet, all_permutations, all_thetas, code
from .poincare import free_poincare, torsion_poincare
from .snf import homology


@dataclass
class SuiteResult:
    name: str
    status: str
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{self.status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


@dataclass(frozen=True)
class Tier:
    complex_n: int      # all theta up to this n
    maximal_n: int      # extra maximal flag
    covering_n: int
    torsion_n: int
    rules_n: int


TIERS = {
    "quick": Tier(complex_n=5, maximal_n=5, covering_n=4, torsion_n=5, rules_n=6),
    "full": Tier(complex_n=7, maximal_n=7, covering_n=6, torsion_n=7, rules_n=9),
}


def _thetas(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from all_thetas(n)


def suite_dd_zero(tier: Tier) -> SuiteResult:
    bad = [th for th in _thetas(2, tier.complex_n) if not build_complex(th).dd_is_zero()]
    if tier.maximal_n > tier.complex_n and not build_complex(ThetaSet.empty(tier.maximal_n)).dd_is_zero():
        bad.append(ThetaSet.empty(tier.maximal_n))
    if bad:
        return SuiteResult("dd-zero", "FAIL", f"nonzero square for {', '.join(map(str, bad[:5]))}")
    return SuiteResult("dd-zero", "PASS", f"n<={tier.complex_n} all theta, maximal n={tier.maximal_n}")


def suite_oracle_equivalence(tier: Tier) -> SuiteResult:
    pairs = mismatches = 0
    for n in range(1, tier.covering_n + 1):
        perms = all_permutations(n)
        codes = {w: code(w) for w in perms}
        for w in perms:
            for wp in perms:
                pairs += 1
                if covering_transposition(w, wp) != covering_by_code(codes[w], codes[wp]):
                    mismatches += 1
    status = "PASS" if not mismatches else "FAIL"
    return SuiteResult("oracle-equivalence", status, f"{pairs} ordered pairs, {mismatches} disagreements")


def suite_polynomial_match(tier: Tier) -> SuiteResult:
    bad = []
    for th in _thetas(2, tier.complex_n):
        fp, tp = free_poincare(th), torsion_poincare(th)
        for h in homology(build_complex(th)):
            if (h.betti != fp[h.degree] or h.torsion_count != tp[h.degree]
                    or any(f != 2 for f in h.torsion_factors)):
                bad.append(f"{th} H_{h.degree}")
    if bad:
        return SuiteResult("polynomial-match", "FAIL", "; ".join(bad[:5]))
    return SuiteResult("polynomial-match", "PASS", f"betti and torsion agree, n<={tier.complex_n}")


def suite_torsion_formulas(tier: Tier) -> SuiteResult:
    bad, warn = [], []
    for th in _thetas(3, tier.torsion_n):
        H = {h.degree: h for h in homology(build_complex(th), degrees=range(0, min(th.dim, 4) + 1))}
        t3 = H[3].torsion_count if 3 in H else 0
        if closedform.torsion_T3(th) != t3:
            bad.append(f"T3 {th}: formula {closedform.torsion_T3(th)} vs {t3}")
        if th.n >= 4:
            t4 = H[4].torsion_count if 4 in H else 0
            f4 = closedform.torsion_T4(th)
            if f4 != t4:
                (warn if th.n == 4 else bad).append(f"T4 {th}: formula {f4} vs homology {t4}")
    if bad:
        return SuiteResult("T3/T4-match", "FAIL", "; ".join(bad[:5]))
    if warn:
        return SuiteResult("T3/T4-match", "WARN", "n=4 only: " + "; ".join(warn))
    return SuiteResult("T3/T4-match", "PASS", f"n<={tier.torsion_n}")


def suite_generator_cycles(tier: Tier) -> SuiteResult:
    bad = []
    count = 0
    for th in _thetas(3, tier.torsion_n):
        chains = [g for g in closedform.h3_kernel_generators(th)]
        chains += [g for e in closedform.betti_table(th).values() for g in e.generators]
        for g in chains:
            count += 1
            if not boundary_of(g.chain, th).is_zero():
                bad.append(f"{g.label} in {th}")
    if bad:
        return SuiteResult("generator-cycles", "FAIL", "; ".join(bad[:5]))
    return SuiteResult("generator-cycles", "PASS", f"{count} chains are cycles")


def suite_boundary_rules(tier: Tier) -> SuiteResult:
    total, failures = boundary_rules.check_rules(range(5, tier.rules_n + 1))
    if failures:
        f = failures[0]
        return SuiteResult("boundary-rules", "FAIL",
                           f"{len(failures)} mismatches, first {f.rule} at {f.theta}")
    return SuiteResult("boundary-rules", "PASS", f"{total} instances, n=5..{tier.rules_n}")


def suite_set_identities(tier: Tier) -> SuiteResult:
    bad = []
    for th in _thetas(5, tier.rules_n):
        a, b = closedform.h3_set_identity(th)
        c, d = closedform.h4_set_identity(th)
        if a != b or c != d:
            bad.append(str(th))
    if bad:
        return SuiteResult("set-identities", "FAIL", ", ".join(bad[:5]))
    return SuiteResult("set-identities", "PASS", f"all theta, n=5..{tier.rules_n}")


def suite_geometry(tier: Tier) -> SuiteResult:
    reports = geomcheck.run_all()
    worst = max(r.max_deviation for r in reports)
    dets = (geomcheck.coordinate_map_determinant("commutation"),
            geomcheck.coordinate_map_determinant("braid"))
    ok = all(r.passed for r in reports) and dets == (-1, 1)
    return SuiteResult("geom-identities", "PASS" if ok else "FAIL",
                       f"{len(reports)} checks, max deviation {worst:.1e}, determinants {dets}")


SUITES: dict[str, Callable[[Tier], SuiteResult]] = {
    "dd-zero": suite_dd_zero,
    "oracle-equivalence": suite_oracle_equivalence,
    "polynomial-match": suite_polynomial_match,
    "T3/T4-match": suite_torsion_formulas,
    "generator-cycles": suite_generator_cycles,
    "boundary-rules": suite_boundary_rules,
    "set-identities": suite_set_identities,
    "geom-identities": suite_geometry,
}


def run_suites(tier: str = "quick", names=None) -> list[SuiteResult]:
    t = TIERS[tier]
    out = []
    for name, fn in SUITES.items():
        if names and name not in names:
            continue
        start = time.perf_counter()
        res = fn(t)
        res.seconds = time.perf_counter() - start
        out.append(res)
    return out
