"""Command-line front end.

Subcommands: analyze, extremal, roots, xi, verify, compare, equality-scan,
enumerate. Graph input is graph6, one per line, from a file or '-' (stdin).
Reports go to stdout as JSON lines (or CSV); summaries and diagnostics go
to stderr. Numeric output carries 10 significant digits.

Exit status: 0 all checks passed (or pure computation succeeded),
1 at least one violation of a proven bound or conjecture,
2 usage or input error (reported with the offending line number).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graphs import ExtremalParams, extremal_graph, to_graph6
from .coloring import SolverCapError, chromatic_number
from .harness import (CHECKS, CSV_HEADER, ComparisonCounts, _iter_stream,
                      _round10, analyze, compare_bounds, enumerate_labeled,
                      equality_case_scan, sweep_labeled, verify_stream)
from .quartic import (feasible_pairs, min_root_pair, quartic,
                      smallest_negative_root, symmetric_root)
from .spectra import lambda_min


def _default_jobs() -> int:
    raw = os.environ.get("CHIBOUNDS_JOBS", "").strip()
    if raw.isdigit() and int(raw) >= 1:
        return int(raw)
    return 1


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="chibounds",
        description="Spectral chromatic-number bounds: analysis, extremal "
                    "constructions, and batch verification.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("input", nargs="?", default="-",
                       help="graph6 file, or '-' for stdin (default)")

    def add_jobs(p):
        p.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="worker threads (default: CHIBOUNDS_JOBS or 1)")

    def add_tols(p):
        p.add_argument("--holds-tol", type=float, default=1e-7,
                       help="absolute tolerance for bound checks")
        p.add_argument("--equality-tol", type=float, default=1e-6,
                       help="absolute tolerance for equality flags")

    p = sub.add_parser("analyze", help="per-graph bound report (JSONL or CSV)")
    add_io(p)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    add_tols(p)

    p = sub.add_parser("extremal",
                       help="build (K_a u O_a0) v (K_b u O_b0) and report its "
                            "least eigenvalue next to the closed-form bound")
    for name in ("--n", "--chi", "--a", "--a0"):
        p.add_argument(name, type=int, required=True)

    p = sub.add_parser("roots", help="quartic coefficients and negative roots "
                                     "over feasible pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--a0", type=int)

    p = sub.add_parser("xi", help="least-eigenvalue lower bound for (n, chi) "
                                  "with its exact residuals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)

    p = sub.add_parser("verify", help="run checks over a graph6 stream")
    add_io(p)
    p.add_argument("--checks", default=None,
                   help=f"comma list from {','.join(CHECKS)} (default: all)")
    p.add_argument("--max-violations", type=int, default=100,
                   help="cap on recorded violating graphs")
    add_jobs(p)
    add_tols(p)

    p = sub.add_parser("compare", help="tally a challenger bound against the "
                                       "least-eigenvalue chi-bound")
    add_io(p)
    p.add_argument("--mode", choices=("raw", "ceiling"), default="raw")
    p.add_argument("--edge", action="store_true",
                   help="challenger is the edge-based conjecture instead of Wilf")

    p = sub.add_parser("equality-scan",
                       help="confirm tightness on the symmetric family")
    p.add_argument("--max-n", type=int, default=16)

    p = sub.add_parser("enumerate", help="emit all labeled graphs on n "
                                         "vertices as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")

    p = sub.add_parser("sweep", help="run checks over the full labeled "
                                     "enumeration (small n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", default=None)
    add_jobs(p)
    add_tols(p)

    return top


def _open_lines(path: str):
    if path == "-":
        return sys.stdin
    try:
        return open(path, "r", encoding="ascii")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}")


class _UsageError(Exception):
    pass


def _parse_checks(spec: str | None):
    if spec is None:
        return None
    names = tuple(s.strip() for s in spec.split(",") if s.strip())
    bad = [s for s in names if s not in CHECKS]
    if bad:
        raise _UsageError(f"unknown checks {bad}; available: {','.join(CHECKS)}")
    return names


def _cmd_analyze(args) -> int:
    stream = _open_lines(args.input)
    malformed = 0
    violations = 0
    if args.format == "csv":
        print(CSV_HEADER)
    for lineno, g, err in _iter_stream(stream):
        if err is not None:
            print(f"line {lineno}: {err}", file=sys.stderr)
            malformed += 1
            continue
        if g.n == 0:
            print(f"line {lineno}: skipping order-0 graph", file=sys.stderr)
            continue
        report = analyze(g, holds_tol=args.holds_tol, eq_tol=args.equality_tol)
        print(report.to_json() if args.format == "jsonl" else report.csv_row())
        violations += sum(1 for v in report.flags.values() if v == "violation")
    if malformed:
        return 2
    return 1 if violations else 0


def _cmd_extremal(args) -> int:
    params = ExtremalParams(n=args.n, chi=args.chi, a=args.a, a0=args.a0)
    g = extremal_graph(params)
    sr = symmetric_root(args.n, args.chi)
    chi = None
    try:
        chi = chromatic_number(g).chi
    except SolverCapError:
        pass
    print(json.dumps({
        "graph6": to_graph6(g),
        "n": g.n, "m": g.m, "chi": chi,
        "a": params.a, "a0": params.a0, "b": params.b, "b0": params.b0,
        "lambdan": _round10(lambda_min(g)),
        "quartic_root": _round10(smallest_negative_root(params)),
        "xi": _round10(sr.root),
    }, separators=(",", ":")))
    return 0


def _cmd_roots(args) -> int:
    if (args.a is None) != (args.a0 is None):
        raise _UsageError("--a and --a0 must be given together")
    if args.a is not None:
        pairs = [ExtremalParams(n=args.n, chi=args.chi, a=args.a, a0=args.a0)]
    else:
        pairs = feasible_pairs(args.n, args.chi)
    for p in pairs:
        qc = quartic(p)
        print(json.dumps({
            "n": p.n, "chi": p.chi, "a": p.a, "a0": p.a0,
            "coeffs": list(qc.coeffs), "gsigns": list(qc.gsigns),
            "root": _round10(smallest_negative_root(p)),
        }, separators=(",", ":")))
    if args.a is None:
        scan = min_root_pair(args.n, args.chi)
        print(json.dumps({
            "argmin": {"a": scan.best.a, "a0": scan.best.a0},
            "root": _round10(scan.root),
            "unique": scan.unique,
            "ties": [{"a": t.a, "a0": t.a0} for t in scan.ties],
        }, separators=(",", ":")))
    return 0


def _cmd_xi(args) -> int:
    sr = symmetric_root(args.n, args.chi)
    print(json.dumps({
        "n": sr.n, "chi": sr.chi,
        "xi": _round10(sr.root),
        "p": sr.p, "q": sr.q,
        "mu": _round10(sr.mu), "alpha": _round10(sr.alpha),
        "beta": _round10(sr.beta),
        "residual_quadratic": sr.residual_quadratic,
        "residual_pq_identity": sr.residual_pq_identity,
    }, separators=(",", ":")))
    return 0


def _finish_verify(summary) -> int:
    for g6, check in sorted(summary.violations)[:summary.max_records]:
        print(json.dumps({"graph6": g6, "check": check},
                         separators=(",", ":")))
    print(summary.to_json(), file=sys.stderr)
    if summary.malformed:
        no, msg = summary.malformed_lines[0]
        print(f"line {no}: {msg}", file=sys.stderr)
        return 2
    return 0 if summary.violations_total == 0 else 1


def _cmd_verify(args) -> int:
    summary = verify_stream(_open_lines(args.input),
                            checks=_parse_checks(args.checks),
                            parallelism=args.jobs,
                            holds_tol=args.holds_tol,
                            max_records=args.max_violations)
    return _finish_verify(summary)


def _cmd_sweep(args) -> int:
    summary = sweep_labeled(args.n, checks=_parse_checks(args.checks),
                            parallelism=args.jobs, holds_tol=args.holds_tol)
    return _finish_verify(summary)


def _cmd_compare(args) -> int:
    graphs = []
    malformed = 0
    for lineno, g, err in _iter_stream(_open_lines(args.input)):
        if err is not None:
            print(f"line {lineno}: {err}", file=sys.stderr)
            malformed += 1
            continue
        graphs.append(g)
    counts = compare_bounds(graphs, mode=args.mode,
                            versus="edge_conjecture" if args.edge else "wilf")
    print(counts.to_json())
    return 2 if malformed else 0


def _cmd_equality_scan(args) -> int:
    report = equality_case_scan(args.max_n)
    for case in report.cases:
        print(case.to_json())
    print(json.dumps({"cases": len(report.cases), "all_ok": report.all_ok},
                     separators=(",", ":")), file=sys.stderr)
    return 0 if report.all_ok else 1


def _cmd_enumerate(args) -> int:
    for g in enumerate_labeled(args.n, connected_only=args.connected):
        print(to_graph6(g))
    return 0


_DISPATCH = {
    "analyze": _cmd_analyze,
    "extremal": _cmd_extremal,
    "roots": _cmd_roots,
    "xi": _cmd_xi,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "compare": _cmd_compare,
    "equality-scan": _cmd_equality_scan,
    "enumerate": _cmd_enumerate,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _DISPATCH[args.command](args)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
