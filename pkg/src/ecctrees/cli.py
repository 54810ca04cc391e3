"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error,
3 the eigensolver did not converge.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import verify as V
from .enumeration import (
    DEFAULT_CAP,
    HARD_CAP,
    STATISTICS,
    TreeFilter,
    canonical_code,
    evaluate_all,
    extremal_search,
    rank_trees,
)
from .errors import EccError, NoConvergence, OrderCapExceeded
from .families import FamilySpec, build, parse_family
from .graph import Graph, eccentricity_matrix, ecc_profile, format_edge_list, parse_edge_list
from .partitions import (
    canonical_partition,
    char_poly_exact,
    denominator_scale,
    is_equitable,
    parse_partition,
    quotient,
    quotient_eigenvalues,
    spectrum_contained,
)
from .report import Report
from .spectral import ecc_energy, group_multiplicities, inertia_of, sym_eigenvalues

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

VERIFY_IDS = ("inertia", "xi2-min", "energy-min", "orderings", "prior", "bounds", "typos",
              "closed-forms", "energy-families", "quotients", "counts", "all")
DEFAULT_RANGES = {"inertia": (4, 12), "xi2-min": (5, 12), "energy-min": (2, 12),
                  "prior": (4, 12), "orderings": (6, 20), "counts": (1, 13)}
MIN_ORDER = {"inertia": 1, "xi2-min": 4, "energy-min": 2, "prior": 1, "orderings": 4, "counts": 1}
# verifiers that enumerate every tree of each order and so respect --cap
ENUMERATING = {"inertia", "xi2-min", "energy-min", "prior", "counts"}


class UsageError(Exception):
    pass


def load_graph(source: str) -> tuple[Graph, FamilySpec | None]:
    """A path to an edge-list file, or a family string such as ``odd:n=8,d=5,a=1,b=1``."""
    p = Path(source)
    if p.is_file():
        return parse_edge_list(p.read_text()), None
    if ":" in source:
        spec = parse_family(source)
        return build(spec), spec
    raise UsageError(f"{source!r} is neither a readable file nor a family string")


def parse_range(text: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if text is None:
        return default
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


# -- spectrum ----------------------------------------------------------------------

def cmd_spectrum(args) -> tuple[Report, int]:
    g, _ = load_graph(args.input)
    prof = ecc_profile(g)
    m = eccentricity_matrix(g, prof)
    spec = sym_eigenvalues(m, args.tol)
    inert = inertia_of(spec).as_tuple()
    vals = list(spec.values)
    results = {
        "n": g.n,
        "diameter": prof.diameter,
        "spectrum": vals,
        "grouped": [[v, k] for v, k in group_multiplicities(spec)],
        "inertia": list(inert),
        "energy": ecc_energy(spec),
        "xi1": vals[0],
        "xi2": vals[1] if len(vals) > 1 else None,
        "zero_tol": spec.zero_tol,
    }
    if args.matrix:
        results["matrix"] = m.to_lists()
    rows = [["n", g.n], ["diameter", prof.diameter], ["xi1", results["xi1"]],
            ["xi2", results["xi2"]], ["energy", results["energy"]],
            ["inertia", " ".join(map(str, inert))]]
    rows += [[f"eigenvalue_{i + 1}", v] for i, v in enumerate(vals)]
    if args.matrix:
        rows += [[f"matrix_row_{i}", " ".join(map(str, r))] for i, r in enumerate(m.to_lists())]
    rep = Report("spectrum", {"graph": args.input, "tol": args.tol}, results,
                 ["quantity", "value"], rows)
    return rep, EXIT_OK


# -- verify ------------------------------------------------------------------------

def _rows_from(checks: list[V.CheckResult]) -> list[list]:
    return [[c.claim, c.n, c.passed, c.margin, c.detail] for c in checks]


def _orderings(lo: int, hi: int, diameters: list[int]) -> list[V.CheckResult]:
    out = []
    for n in range(lo, hi + 1):
        for d in diameters:
            if d == 3 and n < 4 or d != 3 and n < d + 2:
                continue
            vals = [v for _, v in V.ordering_chain(n, d)]
            gaps = [y - x for x, y in zip(vals, vals[1:])]
            stat = "xi2" if d == 3 else "xi1"
            out.append(V.CheckResult(f"strict {stat} chain, diameter {d}", n, V.verify_orderings(n, d),
                                     min(gaps) if gaps else None, f"{len(vals)} trees in chain"))
    return out


def run_verify(check: str, lo: int | None, hi: int | None, args, cache: dict) -> list[V.CheckResult]:
    def ev(n):
        if n not in cache:
            cache[n] = evaluate_all(n, args.jobs, args.cap)
        return cache[n]

    if check == "inertia":
        return [V.verify_inertia(n, args.tol) for n in range(lo, hi + 1)]
    if check == "xi2-min":
        return [V.verify_xi2_min(n, evaluated=ev(n)) for n in range(lo, hi + 1)]
    if check == "energy-min":
        return [V.verify_energy_min(n, evaluated=ev(n)) for n in range(lo, hi + 1)]
    if check == "prior":
        return [c for n in range(lo, hi + 1) for c in V.verify_prior_results(n, evaluated=ev(n))]
    if check == "orderings":
        return _orderings(lo, hi, args.diameters)
    if check == "bounds":
        return V.bounds_grid() + V.radius_grid()
    if check == "closed-forms":
        return V.closed_form_agreement()
    if check == "energy-families":
        return V.energy_inequalities()
    if check == "quotients":
        return V.quotient_checks()
    if check == "counts":
        return V.enumeration_counts(hi)
    if check == "typos":
        out = []
        for t in V.formula_verdicts():
            devs = ", ".join(f"{k}: {v:.3e}" for k, v in t.deviations.items())
            out.append(V.CheckResult(t.name, None, t.decided, None,
                                     f"verdict {t.verdict}; max deviation {devs}; {len(t.instances)} instances"))
        return out
    raise UsageError(f"unknown check id {check!r}")


def cmd_verify(args) -> tuple[Report, int]:
    if args.check not in VERIFY_IDS:
        raise UsageError(f"unknown check id {args.check!r}; choose from {', '.join(VERIFY_IDS)}")
    ids = [t for t in VERIFY_IDS if t != "all"] if args.check == "all" else [args.check]
    if args.range is not None and (args.check == "all" or args.check not in DEFAULT_RANGES):
        raise UsageError(f"verify {args.check} does not take an order range")
    cache: dict = {}
    checks: list[V.CheckResult] = []
    for check in ids:
        lo = hi = None
        if check in DEFAULT_RANGES:
            lo, hi = parse_range(args.range, DEFAULT_RANGES[check])
            if lo < MIN_ORDER[check]:
                raise UsageError(f"verify {check} needs n >= {MIN_ORDER[check]}")
            if check in ENUMERATING and hi > args.cap:
                raise UsageError(f"n={hi} exceeds the enumeration cap {args.cap} (raise with --cap, at most {HARD_CAP})")
        checks += run_verify(check, lo, hi, args, cache)
    passed = all(c.passed for c in checks)
    results = {"checks": [{"claim": c.claim, "n": c.n, "passed": c.passed, "margin": c.margin,
                           "detail": c.detail} for c in checks],
               "n_checks": len(checks), "n_failed": sum(not c.passed for c in checks)}
    rep = Report("verify", {"check": args.check, "range": args.range}, results,
                 ["claim", "n", "passed", "margin", "detail"], _rows_from(checks), passed=passed)
    return rep, EXIT_OK if passed else EXIT_FAIL


# -- quotient ----------------------------------------------------------------------

def cmd_quotient(args) -> tuple[Report, int]:
    g, spec = load_graph(args.graph)
    if args.partition == "canonical":
        if spec is None:
            raise UsageError("'canonical' partitions need a family string, not an edge-list file")
        pi = canonical_partition(spec)
    else:
        p = Path(args.partition)
        if not p.is_file():
            raise UsageError(f"partition file {args.partition!r} not found")
        pi = parse_partition(p.read_text())
    m = eccentricity_matrix(g)
    q = quotient(m, pi)  # validates the partition
    equitable = is_equitable(m, pi)
    notes = []
    scale = 1
    if q.is_integral:
        poly = char_poly_exact(q)
    else:
        scale = denominator_scale(q)
        poly = char_poly_exact(q, strict=False)
        notes.append(f"quotient has non-integer entries; polynomial is {scale}^{q.m} det(xI - Q)")
    contained = spectrum_contained(q, m) if equitable else None
    if not equitable:
        notes.append("partition is not equitable; spectrum containment is not guaranteed and was not tested")
    results = {
        "cells": [list(c) for c in pi.cells],
        "matrix": [list(r) for r in q.entries],
        "equitable": equitable,
        "char_poly": poly.factored_str(),
        "char_poly_coeffs": list(reversed(poly.coeffs)),
        "scale": scale,
        "quotient_eigenvalues": list(quotient_eigenvalues(q)),
        "contained": contained,
    }
    rows = [[f"Q_row_{i}", " ".join(str(x) for x in r)] for i, r in enumerate(q.entries)]
    rows += [["equitable", equitable], ["char_poly", poly.factored_str()],
             ["contained", "n/a" if contained is None else contained]]
    rep = Report("quotient", {"graph": args.graph, "partition": args.partition}, results,
                 ["quantity", "value"], rows, notes)
    return rep, EXIT_OK


# -- enumerate ----------------------------------------------------------------------

def cmd_enumerate(args) -> tuple[Report, int]:
    if args.n > args.cap:
        raise OrderCapExceeded(f"n={args.n} exceeds the enumeration cap {args.cap}")
    flt = TreeFilter.parse(args.filter)
    evaluated = evaluate_all(args.n, args.jobs, args.cap)
    ranked = rank_trees(args.n, args.stat, flt, evaluated=evaluated)
    rep_ext = extremal_search(args.n, args.stat, flt, evaluated=evaluated)
    top = ranked[:args.top]
    rows = [[i + 1, e.code, e.diameter, e.value(args.stat)] for i, e in enumerate(top)]
    results = {
        "considered": rep_ext.considered,
        "unique": rep_ext.unique,
        "margin": rep_ext.margin,
        "top": [{"rank": r[0], "code": r[1], "diameter": r[2], "value": r[3],
                 "edges": [list(e) for e in t.edges]} for r, t in zip(rows, top)],
    }
    rep = Report("enumerate", {"n": args.n, "statistic": args.stat, "filter": str(flt), "top": args.top},
                 results, ["rank", "code", "diameter", "value"], rows)
    return rep, EXIT_OK


# -- export --------------------------------------------------------------------------

def cmd_export(args) -> tuple[Report | str, int]:
    g, spec = load_graph(args.input)
    text = format_edge_list(g)
    if args.format == "json":
        results = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "code": canonical_code(g)}
        return Report("export", {"graph": args.input}, results), EXIT_OK
    header = f"# {spec}\n" if spec is not None else ""
    return header + text, EXIT_OK


# -- wiring ----------------------------------------------------------------------------

def _diameters(text: str) -> list[int]:
    try:
        ds = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad diameter list {text!r}") from None
    if any(d not in (3, 5, 6, 7) and d < 5 for d in ds):
        raise argparse.ArgumentTypeError("orderings are defined for diameter 3 and diameters >= 5")
    return ds


def _cap(text: str) -> int:
    v = int(text)
    if not 1 <= v <= HARD_CAP:
        raise argparse.ArgumentTypeError(f"cap must be in 1..{HARD_CAP}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes for tree evaluation")
    common.add_argument("--tol", type=float, default=None, help="override the zero tolerance")
    common.add_argument("--cap", type=_cap, default=DEFAULT_CAP, help="largest order to enumerate")

    ap = argparse.ArgumentParser(prog="ecctrees", description="Eccentricity spectra of trees.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="E-spectrum of a graph")
    sp.add_argument("input", help="edge-list file or family string (e.g. star:n=5)")
    sp.add_argument("--matrix", action="store_true", help="also print the eccentricity matrix")
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser("verify", parents=[common], help="run a verification")
    vp.add_argument("check", help=", ".join(VERIFY_IDS))
    vp.add_argument("range", nargs="?", help="order range N or LO..HI")
    vp.add_argument("--diameters", type=_diameters, default=[3, 5, 6, 7],
                    help="diameters for the orderings check")
    vp.set_defaults(func=cmd_verify)

    qp = sub.add_parser("quotient", parents=[common], help="quotient matrix of a vertex partition")
    qp.add_argument("graph", help="edge-list file or family string")
    qp.add_argument("partition", help="partition file, or 'canonical' for a family string")
    qp.set_defaults(func=cmd_quotient)

    ep = sub.add_parser("enumerate", parents=[common], help="rank all trees of order n")
    ep.add_argument("n", type=int)
    ep.add_argument("--stat", choices=STATISTICS, default="energy")
    ep.add_argument("--filter", default="all", help="all, exclude_star or diameter:LO-HI")
    ep.add_argument("--top", type=int, default=10)
    ep.set_defaults(func=cmd_enumerate)

    xp = sub.add_parser("export", parents=[common], help="write a graph as an edge list")
    xp.add_argument("input", help="edge-list file or family string")
    xp.set_defaults(func=cmd_export)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        rep, code = args.func(args)
    except (UsageError, EccError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if isinstance(rep, str):
        sys.stdout.write(rep)
        return code
    rep.wall_time = time.perf_counter() - start
    sys.stdout.write(rep.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
