"""Batch verification: per-graph bound reports, exhaustive labeled
enumeration, graph6 stream checking, comparison tallies, and the
equality-case scan.

Sweeps over labeled enumerations run through a batched fast path (kernel
invariants per edge mask, stacked eigensolves); graph6 streams of mixed
orders go graph by graph. Both funnel every candidate violation through
``analyze``, which re-verifies it against a high-precision eigensolve at a
tightened tolerance before it is reported, so a tolerance artifact cannot
masquerade as a counterexample to a proven theorem.

Chunks are processed independently (thread pool; the kernels drop the GIL)
and merged in chunk order; counters are additive and violation lists are
canonically sorted, so summaries are byte-identical for any parallelism.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from . import _kernels
from .bounds import (BoundValue, EQUALITY_TOL, HOLDS_TOL, chi_in_theorem_range,
                     constantine_check, edge_chi_bound, fan_yu_wang_chi_bound,
                     fan_yu_wang_lambda_bound, hoffman_bound, powers_check,
                     wilf_bound, wu_elphick_check)
from .coloring import SolverCapError, chromatic_number, coloring_number
from .graphs import (ExtremalParams, Graph, Graph6Error, extremal_graph,
                     parse_graph6, to_graph6)
from .quartic import min_root_pair, symmetric_root
from .spectra import eigenvalues_highprec, spectrum

CHECKS = ("wilf", "hoffman", "constantine", "powers", "wu_elphick",
          "fan_yu_wang", "fan_yu_wang_lambda", "edge_conjecture")

ENUMERATION_CAP = 7
MAX_VIOLATION_RECORDS = 100
_CHUNK = 1 << 12
_STREAM_CHUNK = 512
_COMPARE_TIE_TOL = 1e-6
_CEIL_SNAP = 1e-9


def _round10(x):
    if x is None:
        return None
    return float(f"{x:.10g}")


# ---------------------------------------------------------------------------
# per-graph analysis


@dataclass(frozen=True)
class BoundReport:
    """Everything the checks need for one graph, plus the per-check verdicts."""

    graph6: str
    n: int
    m: int
    connected: bool
    chi: int | None
    col: int
    lambda1: float
    lambdan: float
    bounds: tuple[BoundValue, ...]
    flags: dict[str, str]          # check -> "pass" | "violation" | "skipped"
    gaps: tuple[str, ...]

    def to_json(self) -> str:
        payload = {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "chi": self.chi,
            "col": self.col,
            "lambda1": _round10(self.lambda1),
            "lambdan": _round10(self.lambdan),
            "bounds": [
                {
                    "name": b.name,
                    "direction": b.direction,
                    "value": _round10(b.value),
                    "applicable": b.applicable,
                    "holds": b.holds,
                    "equality": b.equality,
                    "note": b.note,
                }
                for b in self.bounds
            ],
            "flags": {name: self.flags[name] for name in CHECKS},
            "gaps": list(self.gaps),
        }
        return json.dumps(payload, separators=(",", ":"))

    def csv_row(self) -> str:
        cells = [self.graph6, str(self.n), str(self.m),
                 "1" if self.connected else "0",
                 "" if self.chi is None else str(self.chi), str(self.col),
                 f"{self.lambda1:.10g}", f"{self.lambdan:.10g}"]
        by_name = {b.name: b for b in self.bounds}
        for name in CHECKS:
            b = by_name[name]
            cells.append("" if b.value is None else f"{b.value:.10g}")
            cells.append(self.flags[name])
        return ",".join(cells)


CSV_HEADER = ",".join(
    ["graph6", "n", "m", "connected", "chi", "col", "lambda1", "lambdan"]
    + [col for name in CHECKS for col in (f"{name}_value", f"{name}_flag")])


def _flag(bv: BoundValue) -> str:
    if not bv.applicable or bv.holds is None:
        return "skipped"
    return "pass" if bv.holds else "violation"


def _evaluate_checks(n, m, chi, l1, ln, holds_tol, eq_tol):
    res = {}
    res["wilf"] = wilf_bound(l1).compared(chi, holds_tol, eq_tol)
    res["hoffman"] = hoffman_bound(l1, ln).compared(chi, holds_tol, eq_tol)
    res["constantine"] = constantine_check(n, ln, holds_tol, eq_tol)
    res["powers"] = powers_check(m, ln, holds_tol, eq_tol)
    if chi is None:
        res["wu_elphick"] = BoundValue("wu_elphick", "upper", None,
                                       applicable=False,
                                       note="chromatic number unavailable")
    else:
        res["wu_elphick"] = wu_elphick_check(chi, l1, m, holds_tol, eq_tol)
    fyw = fan_yu_wang_chi_bound(n, ln)
    if not chi_in_theorem_range(n, chi):
        fyw = replace(fyw, applicable=False,
                      note="chromatic number outside 3..n-1")
    res["fan_yu_wang"] = fyw.compared(chi, holds_tol, eq_tol)
    res["fan_yu_wang_lambda"] = fan_yu_wang_lambda_bound(n, chi).compared(
        ln, holds_tol, eq_tol)
    res["edge_conjecture"] = edge_chi_bound(m, ln).compared(
        None if chi is None else chi * (chi - 1), holds_tol, eq_tol)
    return res


def analyze(g: Graph, holds_tol: float = HOLDS_TOL,
            eq_tol: float = EQUALITY_TOL, recheck: bool = True) -> BoundReport:
    """Full deterministic report for one graph.

    Above the exact-coloring cap the report is partial: chi is None, the
    chi-dependent checks are skipped, and ``gaps`` says so explicitly.
    """
    if g.n == 0:
        raise ValueError("cannot analyze the order-0 graph")
    sp = spectrum(g)
    l1, ln = sp.values[0], sp.values[-1]
    gaps = []
    chi = None
    try:
        chi = chromatic_number(g).chi
    except SolverCapError:
        gaps.append("chi")
    col = coloring_number(g)
    checks = _evaluate_checks(g.n, g.m, chi, l1, ln, holds_tol, eq_tol)
    bad = [nm for nm, bv in checks.items() if bv.holds is False]
    if recheck and bad:
        hp = eigenvalues_highprec(g)
        tight = _evaluate_checks(g.n, g.m, chi, hp[0], hp[-1], 1e-13, eq_tol)
        for nm in bad:
            note = tight[nm].note
            note = f"{note}; high-precision recheck" if note else "high-precision recheck"
            checks[nm] = replace(tight[nm], note=note)
    flags = {nm: _flag(checks[nm]) for nm in CHECKS}
    return BoundReport(graph6=to_graph6(g), n=g.n, m=g.m,
                       connected=g.is_connected(), chi=chi, col=col,
                       lambda1=l1, lambdan=ln,
                       bounds=tuple(checks[nm] for nm in CHECKS),
                       flags=flags, gaps=tuple(gaps))


# ---------------------------------------------------------------------------
# labeled enumeration


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    # column-major upper triangle; bit order matches the graph6 stream
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for b, (i, j) in enumerate(_edge_pairs(n)):
        if (mask >> b) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def enumerate_labeled(n: int, connected_only: bool = False):
    """Every labeled simple graph on n vertices, in edge-mask order."""
    if not 0 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"labeled enumeration is capped at {ENUMERATION_CAP} vertices "
            f"(got {n}); feed larger orders through graph6 ingestion")
    nbits = n * (n - 1) // 2
    for mask in range(1 << nbits):
        g = graph_from_mask(n, mask)
        if connected_only and not g.is_connected():
            continue
        yield g


# ---------------------------------------------------------------------------
# summaries


@dataclass
class Summary:
    population: str
    checks: dict
    processed: int = 0
    malformed: int = 0
    skipped_empty: int = 0
    violations: list = None
    violations_total: int = 0
    malformed_lines: list = None
    max_records: int = MAX_VIOLATION_RECORDS

    def __post_init__(self):
        if self.violations is None:
            self.violations = []
        if self.malformed_lines is None:
            self.malformed_lines = []

    @classmethod
    def empty(cls, population: str, checks, max_records: int = MAX_VIOLATION_RECORDS):
        return cls(population=population,
                   checks={c: {"pass": 0, "violation": 0, "skipped": 0}
                           for c in checks},
                   max_records=max_records)

    def merge(self, other: "Summary") -> None:
        self.processed += other.processed
        self.malformed += other.malformed
        self.skipped_empty += other.skipped_empty
        for c, tally in other.checks.items():
            mine = self.checks.setdefault(c, {"pass": 0, "violation": 0, "skipped": 0})
            for k, v in tally.items():
                mine[k] += v
        self.violations.extend(other.violations)
        self.violations_total += other.violations_total
        self.malformed_lines.extend(other.malformed_lines)

    @property
    def ok(self) -> bool:
        return self.violations_total == 0 and self.malformed == 0

    def to_json(self) -> str:
        records = sorted(self.violations)[: self.max_records]
        payload = {
            "population": self.population,
            "graphs": {
                "processed": self.processed,
                "malformed": self.malformed,
                "skipped_empty": self.skipped_empty,
            },
            "checks": self.checks,
            "violations": [{"graph6": g6, "check": c} for g6, c in records],
            "violations_total": self.violations_total,
            "violations_truncated": self.violations_total > len(records),
            "malformed_lines": [
                {"line": no, "error": msg} for no, msg in self.malformed_lines[:10]
            ],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _validated_checks(checks):
    if checks is None:
        return CHECKS
    checks = tuple(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {CHECKS}")
    return checks


def _run_indexed(worker, args_list, parallelism: int):
    if parallelism <= 1 or len(args_list) <= 1:
        return [worker(*args) for args in args_list]
    results = [None] * len(args_list)
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        futures = {pool.submit(worker, *args): k
                   for k, args in enumerate(args_list)}
        for fut, k in futures.items():
            results[k] = fut.result()
    return results


# ---------------------------------------------------------------------------
# batched labeled sweep


@lru_cache(maxsize=None)
def _root_lookup(n: int) -> np.ndarray:
    arr = np.full(n + 1, np.nan)
    for c in range(3, n):
        arr[c] = symmetric_root(n, c).root
    arr.setflags(write=False)
    return arr


def _mask_invariants(n, lo, hi, pair_i, pair_j):
    size = hi - lo
    out_m = np.zeros(size, np.int32)
    out_chi = np.zeros(size, np.int32)
    out_col = np.zeros(size, np.int32)
    out_conn = np.zeros(size, np.uint8)
    _kernels.sweep_masks(n, lo, hi, pair_i, pair_j,
                         out_m, out_chi, out_col, out_conn)
    return out_m, out_chi, out_col, out_conn


def _mask_eigs(n, masks, pair_i, pair_j):
    nbits = pair_i.shape[0]
    bits = ((masks[:, None] >> np.arange(nbits, dtype=np.int64)[None, :]) & 1)
    mats = np.zeros((masks.shape[0], n, n), dtype=np.float64)
    mats[:, pair_i, pair_j] = bits
    mats[:, pair_j, pair_i] = bits
    vals = np.linalg.eigvalsh(mats)
    return vals[:, -1], vals[:, 0]  # lambda1, lambdan


def _vector_checks(n, m, chi, l1, ln, checks, holds_tol):
    """Vectorized pass/violation/skip per check; mirrors the scalar formulas."""
    chif = chi.astype(np.float64)
    mf = m.astype(np.float64)
    nh = 0.5 * n
    ones = np.ones(chi.shape[0], dtype=bool)
    out = {}
    for name in checks:
        if name == "wilf":
            app = ones
            ok = chif <= 1.0 + l1 + holds_tol
        elif name == "hoffman":
            app = ln < 0
            with np.errstate(divide="ignore", invalid="ignore"):
                val = 1.0 - l1 / ln
            ok = chif >= val - holds_tol
        elif name == "constantine":
            app = ones
            ok = ln >= -nh - holds_tol
        elif name == "powers":
            app = ones
            ok = ln * ln <= mf + holds_tol
        elif name == "wu_elphick":
            app = ones
            mid = (l1 + 1.0) * l1
            ok = (chif * (chif - 1.0) <= mid + holds_tol) \
                & (mid <= 2.0 * mf + holds_tol)
        elif name == "fan_yu_wang":
            app = (chi >= 3) & (chi <= n - 1)
            h = nh + 1.0 + ln
            disc = h * h - 4.0 * (ln + 1.0) * (ln + nh)
            val = h + np.sqrt(np.clip(disc, 0.0, None))
            ok = chif <= val + holds_tol
        elif name == "fan_yu_wang_lambda":
            app = (chi >= 3) & (chi <= n - 1)
            roots = _root_lookup(n)[chi]
            with np.errstate(invalid="ignore"):
                ok = ln >= roots - holds_tol
        elif name == "edge_conjecture":
            app = m >= 1
            x = ln * ln
            base = mf + 1.0 - x
            disc = base * base - 4.0 * (x - 1.0) * (x - mf)
            val = base + np.sqrt(np.clip(disc, 0.0, None))
            ok = chif * (chif - 1.0) <= val + holds_tol
        else:  # pragma: no cover
            raise AssertionError(name)
        out[name] = np.where(app, np.where(ok, 1, 2), 0).astype(np.uint8)
    return out


def _sweep_chunk(n, lo, hi, pair_i, pair_j, checks, holds_tol, connected_only):
    out_m, out_chi, _, out_conn = _mask_invariants(n, lo, hi, pair_i, pair_j)
    masks = np.arange(lo, hi, dtype=np.int64)
    if connected_only:
        keep = out_conn.astype(bool)
        masks = masks[keep]
        out_m = out_m[keep]
        out_chi = out_chi[keep]
    part = Summary.empty("", checks)
    part.processed = int(masks.shape[0])
    if masks.shape[0] == 0:
        return part
    l1, ln = _mask_eigs(n, masks, pair_i, pair_j)
    status = _vector_checks(n, out_m, out_chi, l1, ln, checks, holds_tol)
    for name in checks:
        st = status[name]
        part.checks[name]["pass"] += int((st == 1).sum())
        part.checks[name]["skipped"] += int((st == 0).sum())
        for pos in np.nonzero(st == 2)[0]:
            g = graph_from_mask(n, int(masks[pos]))
            report = analyze(g, holds_tol=holds_tol)
            if report.flags[name] == "violation":
                part.checks[name]["violation"] += 1
                part.violations_total += 1
                part.violations.append((report.graph6, name))
            else:
                part.checks[name]["pass"] += 1
    return part


def sweep_labeled(n: int, checks=None, parallelism: int = 1,
                  connected_only: bool = False, holds_tol: float = HOLDS_TOL,
                  max_records: int = MAX_VIOLATION_RECORDS) -> Summary:
    """Run the named checks over every labeled graph on n vertices."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"labeled sweeps are capped at {ENUMERATION_CAP} vertices "
            f"(got {n}); feed larger orders through graph6 ingestion")
    checks = _validated_checks(checks)
    pairs = _edge_pairs(n)
    pair_i = np.array([i for i, _ in pairs], dtype=np.int64)
    pair_j = np.array([j for _, j in pairs], dtype=np.int64)
    total = 1 << len(pairs)
    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    desc = f"all labeled graphs on {n} vertices"
    if connected_only:
        desc += ", connected only"
    summary = Summary.empty(desc, checks, max_records=max_records)
    parts = _run_indexed(
        lambda lo, hi: _sweep_chunk(n, lo, hi, pair_i, pair_j, checks,
                                    holds_tol, connected_only),
        ranges, parallelism)
    for part in parts:
        summary.merge(part)
    return summary


# ---------------------------------------------------------------------------
# graph6 stream verification


def _iter_stream(source):
    """Yield (lineno, graph_or_none, error_or_none) over lines or Graphs."""
    lineno = 0
    for item in source:
        lineno += 1
        if isinstance(item, Graph):
            yield lineno, item, None
            continue
        line = item.strip()
        if not line or line == ">>graph6<<":
            continue
        try:
            yield lineno, parse_graph6(line), None
        except Graph6Error as exc:
            yield lineno, None, str(exc)


def verify_stream(source, checks=None, parallelism: int = 1,
                  holds_tol: float = HOLDS_TOL,
                  max_records: int = MAX_VIOLATION_RECORDS) -> Summary:
    """Check every graph in a graph6 line stream (or Graph iterable).

    Malformed lines are counted and reported with their line numbers;
    processing continues. Order-0 graphs are counted as skipped.
    """
    checks = _validated_checks(checks)
    summary = Summary.empty("graph6 stream", checks, max_records=max_records)

    def work(graphs):
        part = Summary.empty("", checks)
        for g in graphs:
            report = analyze(g, holds_tol=holds_tol)
            part.processed += 1
            for name in checks:
                st = report.flags[name]
                part.checks[name][st] += 1
                if st == "violation":
                    part.violations_total += 1
                    part.violations.append((report.graph6, name))
        return part

    chunk = []
    chunks = []
    for lineno, g, err in _iter_stream(source):
        if err is not None:
            summary.malformed += 1
            summary.malformed_lines.append((lineno, err))
            continue
        if g.n == 0:
            summary.skipped_empty += 1
            continue
        chunk.append(g)
        if len(chunk) >= _STREAM_CHUNK:
            chunks.append(chunk)
            chunk = []
    if chunk:
        chunks.append(chunk)
    for part in _run_indexed(lambda gs: work(gs), [(c,) for c in chunks],
                             parallelism):
        summary.merge(part)
    return summary


# ---------------------------------------------------------------------------
# bound comparison


@dataclass(frozen=True)
class ComparisonCounts:
    """Three-way tally of a challenger bound against the least-eigenvalue
    chi-bound over a population of graphs with 3 <= chi <= n-1.

    ``versus`` names the challenger ("wilf" or "edge_conjecture"); its wins
    are counted in ``wilf_wins`` (the slot keeps its name from the default
    comparison). The edge-based bound on chi(chi-1) is converted to a bound
    on chi via chi <= (1 + sqrt(1 + 4 V))/2 before comparing.
    """

    wilf_wins: int
    fyw_wins: int
    ties: int
    criterion: str        # "raw" | "ceiling"
    population: str
    skipped: int
    versus: str = "wilf"

    @property
    def total(self) -> int:
        return self.wilf_wins + self.fyw_wins + self.ties

    def to_json(self) -> str:
        return json.dumps({
            "versus": self.versus,
            "criterion": self.criterion,
            "population": self.population,
            "wilf_wins": self.wilf_wins,
            "fyw_wins": self.fyw_wins,
            "ties": self.ties,
            "total": self.total,
            "skipped": self.skipped,
        }, sort_keys=True, separators=(",", ":"))


def _challenger_value(versus, m, l1, ln):
    if versus == "wilf":
        return 1.0 + l1
    v = edge_chi_bound(m, ln).value
    return 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * v))


def _duel(challenger, fyw, mode):
    if mode == "ceiling":
        challenger = math.ceil(challenger - _CEIL_SNAP)
        fyw = math.ceil(fyw - _CEIL_SNAP)
        if challenger < fyw:
            return 0
        if fyw < challenger:
            return 1
        return 2
    if challenger < fyw - _COMPARE_TIE_TOL:
        return 0
    if fyw < challenger - _COMPARE_TIE_TOL:
        return 1
    return 2


def compare_bounds(source, mode: str = "raw", versus: str = "wilf") -> ComparisonCounts:
    """Tally the challenger against the least-eigenvalue chi-bound over a stream.

    Graphs outside 3 <= chi <= n-1 (or over the coloring cap) are skipped
    and counted; malformed lines are skipped likewise.
    """
    if mode not in ("raw", "ceiling"):
        raise ValueError(f"mode must be raw or ceiling, got {mode!r}")
    if versus not in ("wilf", "edge_conjecture"):
        raise ValueError(f"versus must be wilf or edge_conjecture, got {versus!r}")
    wins = [0, 0, 0]
    skipped = 0
    for _, g, err in _iter_stream(source):
        if err is not None or g.n == 0:
            skipped += 1
            continue
        try:
            chi = chromatic_number(g).chi
        except SolverCapError:
            skipped += 1
            continue
        if not 3 <= chi <= g.n - 1:
            skipped += 1
            continue
        sp = spectrum(g)
        fyw = fan_yu_wang_chi_bound(g.n, sp.values[-1]).value
        ch = _challenger_value(versus, g.m, sp.values[0], sp.values[-1])
        wins[_duel(ch, fyw, mode)] += 1
    return ComparisonCounts(wilf_wins=wins[0], fyw_wins=wins[1], ties=wins[2],
                            criterion=mode, population="graph6 stream, 3 <= chi <= n-1",
                            skipped=skipped, versus=versus)


def _compare_chunk(n, lo, hi, pair_i, pair_j, mode, versus, connected_only):
    out_m, out_chi, _, out_conn = _mask_invariants(n, lo, hi, pair_i, pair_j)
    keep = (out_chi >= 3) & (out_chi <= n - 1)
    if connected_only:
        keep &= out_conn.astype(bool)
    skipped = int((~keep).sum())
    masks = np.arange(lo, hi, dtype=np.int64)[keep]
    wins = [0, 0, 0]
    if masks.shape[0]:
        l1, ln = _mask_eigs(n, masks, pair_i, pair_j)
        m = out_m[keep]
        for k in range(masks.shape[0]):
            fyw = fan_yu_wang_chi_bound(n, float(ln[k])).value
            ch = _challenger_value(versus, int(m[k]), float(l1[k]), float(ln[k]))
            wins[_duel(ch, fyw, mode)] += 1
    return wins, skipped


def compare_labeled(n: int, mode: str = "raw", versus: str = "wilf",
                    connected_only: bool = True,
                    parallelism: int = 1) -> ComparisonCounts:
    """Comparison tally over the labeled enumeration (fast path)."""
    if mode not in ("raw", "ceiling"):
        raise ValueError(f"mode must be raw or ceiling, got {mode!r}")
    if versus not in ("wilf", "edge_conjecture"):
        raise ValueError(f"versus must be wilf or edge_conjecture, got {versus!r}")
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"labeled sweeps are capped at {ENUMERATION_CAP} vertices")
    pairs = _edge_pairs(n)
    pair_i = np.array([i for i, _ in pairs], dtype=np.int64)
    pair_j = np.array([j for _, j in pairs], dtype=np.int64)
    total = 1 << len(pairs)
    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    parts = _run_indexed(
        lambda lo, hi: _compare_chunk(n, lo, hi, pair_i, pair_j, mode, versus,
                                      connected_only),
        ranges, parallelism)
    wins = [0, 0, 0]
    skipped = 0
    for w, s in parts:
        wins = [a + b for a, b in zip(wins, w)]
        skipped += s
    desc = f"labeled graphs on {n} vertices, 3 <= chi <= n-1"
    if connected_only:
        desc += ", connected only"
    return ComparisonCounts(wilf_wins=wins[0], fyw_wins=wins[1], ties=wins[2],
                            criterion=mode, population=desc, skipped=skipped,
                            versus=versus)


# ---------------------------------------------------------------------------
# equality-case scan


@dataclass(frozen=True)
class EqualityCase:
    n: int
    chi: int
    graph6: str
    lambdan: float
    bound_root: float
    chi_bound: float
    lambda_matches: bool
    chi_matches: bool
    unique_minimizer: bool

    @property
    def ok(self) -> bool:
        return self.lambda_matches and self.chi_matches and self.unique_minimizer

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n, "chi": self.chi, "graph6": self.graph6,
            "lambdan": _round10(self.lambdan),
            "bound_root": _round10(self.bound_root),
            "chi_bound": _round10(self.chi_bound),
            "lambda_matches": self.lambda_matches,
            "chi_matches": self.chi_matches,
            "unique_minimizer": self.unique_minimizer,
        }, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class EqualityScanReport:
    cases: tuple[EqualityCase, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.cases)


def equality_case_scan(max_n: int = 16) -> EqualityScanReport:
    """Confirm tightness on the symmetric family for even n <= max_n.

    For each even n and even 4 <= chi <= n-2: builds the symmetric join
    graph, checks its least eigenvalue against the closed-form root (1e-8)
    and the chi-bound against chi (1e-6), and confirms via the feasible-pair
    scan that no other pair attains the root.
    """
    if not 6 <= max_n <= 16:
        raise ValueError(f"max_n must be in 6..16, got {max_n}")
    cases = []
    for n in range(6, max_n + 1, 2):
        for chi in range(4, n - 1, 2):
            params = ExtremalParams(n=n, chi=chi, a=chi // 2, a0=(n - chi) // 2)
            g = extremal_graph(params)
            ln = spectrum(g).values[-1]
            sr = symmetric_root(n, chi)
            cb = fan_yu_wang_chi_bound(n, ln).value
            scan = min_root_pair(n, chi)
            cases.append(EqualityCase(
                n=n, chi=chi, graph6=to_graph6(g), lambdan=ln,
                bound_root=sr.root, chi_bound=cb,
                lambda_matches=abs(ln - sr.root) <= 1e-8,
                chi_matches=abs(cb - chi) <= 1e-6,
                unique_minimizer=scan.unique and scan.best == params))
    return EqualityScanReport(tuple(cases))
