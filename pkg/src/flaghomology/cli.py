"""
Command-line interface.

    flaghomology homology   --n 4 --k 2 [--format json]
    flaghomology poincare   --n 3
    flaghomology incidence  --n 4 --out a3.dot
    flaghomology generators --n 5 --theta 2
    flaghomology verify     --tier quick

``--k 1,3`` names the descent positions (block boundaries); ``--theta 2``
names theta directly.  With neither, the maximal flag is used.

>>> main(["homology", "--n", "3", "--k", "1"])
n=3 k=[1] dim=2
H_0 = Z
H_1 = Z2
H_2 = 0
0
"""

from __future__ import annotations

__all__ = ["RunConfig", "build_parser", "parse_config", "main",
           "homology_report", "poincare_report", "incidence_dot", "generators_report"]

import argparse
import json
import sys
from dataclasses import dataclass
from math import factorial

from .cellular import Chain, build_complex
from .closedform import betti_table, h3_kernel_generators
from .errors import DomainError, IntegrityError
from .perm import ThetaSet, code, multinomial
from .poincare import IntPolynomial, free_poincare, mod2_poincare, torsion_poincare
from .snf import homology
from .verify import TIERS, run_suites

DEFAULT_MAX_N = 8
# partial flags at n = DEFAULT_MAX_N + 1 are fine while they stay this small
SMALL_CELL_LIMIT = factorial(DEFAULT_MAX_N)


@dataclass(frozen=True)
class RunConfig:
    command: str
    theta: ThetaSet | None = None
    fmt: str = "text"
    tier: str = "quick"
    out: str | None = None
    allow_large: bool = False


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flaghomology",
                                description="Integral homology of real flag manifolds.")
    sub = p.add_subparsers(dest="command", required=True)

    def flag_args(sp, formats):
        sp.add_argument("--n", type=int, required=True, help="size of the flag (n >= 2)")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--k", type=_int_list, help="block boundaries, e.g. 1,3")
        g.add_argument("--theta", type=_int_list, help="theta indices, e.g. 2")
        sp.add_argument("--format", dest="fmt", choices=formats, default=formats[0])
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        sp.add_argument("--allow-large", action="store_true",
                        help=f"lift the n <= {DEFAULT_MAX_N} cap (prints a cost estimate first)")

    flag_args(sub.add_parser("homology", help="integral homology groups"), ["text", "json"])
    flag_args(sub.add_parser("poincare", help="mod-2, free and torsion polynomials"), ["text", "json"])
    flag_args(sub.add_parser("incidence", help="incidence diagram as Graphviz DOT"), ["dot"])
    flag_args(sub.add_parser("generators", help="low-degree cycle representatives"), ["text", "json"])
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--tier", choices=sorted(TIERS), default="quick")
    v.add_argument("--out")
    return p


def parse_config(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return RunConfig("verify", tier=args.tier, out=args.out)
    if args.n < 2:
        raise DomainError(f"need n >= 2, got {args.n}")
    if args.k is not None:
        th = ThetaSet.from_k(args.n, args.k)
    elif args.theta is not None:
        th = ThetaSet(args.n, frozenset(args.theta))
    else:
        th = ThetaSet.empty(args.n)
    return RunConfig(args.command, th, args.fmt, out=args.out, allow_large=args.allow_large)


def cost_estimate(th: ThetaSet) -> str:
    cells = multinomial(th.blocks)
    entries = cells * th.n * (th.n - 1) // 4
    return f"{cells} cells, up to about {entries} boundary entries"


def _check_cap(th: ThetaSet, allow_large: bool) -> None:
    cells = multinomial(th.blocks)
    small = th.n == DEFAULT_MAX_N + 1 and cells <= SMALL_CELL_LIMIT
    if th.n <= DEFAULT_MAX_N or small:
        return
    if not allow_large:
        raise DomainError(
            f"n={th.n} exceeds the cap (n <= {DEFAULT_MAX_N}, or n = {DEFAULT_MAX_N + 1} "
            f"with at most {SMALL_CELL_LIMIT} cells); pass --allow-large to override")
    print(f"cost estimate: {cost_estimate(th)}", file=sys.stderr)


def _header(th: ThetaSet) -> dict:
    return {"n": th.n, "k": list(th.ks), "dim": th.dim}


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def homology_report(th: ThetaSet, fmt: str = "text") -> str:
    groups = homology(build_complex(th))
    if fmt == "json":
        doc = _header(th)
        doc["groups"] = [{"degree": h.degree, "betti": h.betti, "torsion": list(h.torsion_factors)}
                         for h in groups]
        return _dump_json(doc)
    lines = [f"n={th.n} k={list(th.ks)} dim={th.dim}"]
    lines += [f"H_{h.degree} = {h}" for h in groups]
    return "\n".join(lines) + "\n"


def poincare_report(th: ThetaSet, fmt: str = "text") -> str:
    P, FP, TP = mod2_poincare(th), free_poincare(th), torsion_poincare(th)
    if P != FP + IntPolynomial((1, 1)) * TP:
        raise IntegrityError(f"P != FP + (1+t)TP for {th}")
    if fmt == "json":
        doc = _header(th)
        doc.update({"P": list(P.coeffs), "FP": list(FP.coeffs), "TP": list(TP.coeffs)})
        return _dump_json(doc)
    return f"n={th.n} k={list(th.ks)}\nP  = {P}\nFP = {FP}\nTP = {TP}\n"


def _node_id(w) -> str:
    return "w" + "_".join(map(str, w))


def incidence_dot(th: ThetaSet) -> str:
    """Graphviz document: nodes ranked by degree, edges dashed for +2, solid for -2."""
    cx = build_complex(th)
    out = ["digraph incidence {", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for d in range(cx.max_degree + 1):
        cells = cx.cells.get(d, [])
        out.append(f"  subgraph degree_{d} {{")
        out.append("    rank=same;")
        for w in cells:
            label = "".join(map(str, w)) + "\\n(" + ",".join(map(str, code(w))) + ")"
            out.append(f'    {_node_id(w)} [label="{label}"];')
        out.append("  }")
    for d in range(1, cx.max_degree + 1):
        M = cx.boundary(d)
        rows, cols = cx.cells.get(d - 1, []), cx.cells.get(d, [])
        for (r, c), v in sorted(M.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            style = "dashed" if v > 0 else "solid"
            out.append(f'  {_node_id(cols[c])} -> {_node_id(rows[r])} '
                       f'[style={style}, label="{v:+d}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def _chain_terms(chain: Chain) -> list:
    return [[list(spec), c] for spec, c in sorted(chain.by_spectrum().items())]


def generators_report(th: ThetaSet, fmt: str = "text") -> str:
    gens = [(3, g) for g in h3_kernel_generators(th)]
    table = betti_table(th)
    for d in (4, 5, 6):
        gens += [(d, g) for g in table[d].generators]
    gens = [(d, g) for d, g in gens if not g.chain.is_zero()]
    if fmt == "json":
        doc = _header(th)
        doc["generators"] = [{"degree": d, "label": g.label, "kind": g.kind,
                              "chain": _chain_terms(g.chain)} for d, g in gens]
        return _dump_json(doc)
    lines = [f"n={th.n} k={list(th.ks)} dim={th.dim}"]
    lines += [f"H_{d} {g.kind:7s} {g.label}: {g.chain}" for d, g in gens]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg: RunConfig) -> int:
    if cfg.command == "verify":
        results = run_suites(cfg.tier)
        _emit("".join(r.line() + "\n" for r in results), cfg.out)
        return 1 if any(r.status == "FAIL" for r in results) else 0
    th = cfg.theta
    _check_cap(th, cfg.allow_large)
    if cfg.command == "homology":
        text = homology_report(th, cfg.fmt)
    elif cfg.command == "poincare":
        text = poincare_report(th, cfg.fmt)
    elif cfg.command == "incidence":
        text = incidence_dot(th)
    else:
        text = generators_report(th, cfg.fmt)
    _emit(text, cfg.out)
    return 0


def main(argv=None) -> int:
    try:
        code_ = run(parse_config(argv))
    except (DomainError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code_ = 2
    return code_
