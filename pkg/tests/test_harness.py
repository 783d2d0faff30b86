import json
from pathlib import Path

import pytest

from chibounds import (CHECKS, ExtremalParams, analyze, compare_bounds,
                       compare_labeled, complete, disjoint_union, empty_graph,
                       enumerate_labeled, equality_case_scan, extremal_graph,
                       from_edges, parse_graph6, sweep_labeled, to_graph6,
                       verify_stream)
from chibounds.harness import CSV_HEADER, graph_from_mask

from oracles import complete_bipartite

FIXTURES = Path(__file__).parent / "fixtures"


def _bound(report, name):
    return next(b for b in report.bounds if b.name == name)


def test_analyze_k33():
    r = analyze(complete_bipartite(3, 3))
    assert r.chi == 2 and r.col == 4
    assert abs(r.lambda1 - 3.0) < 1e-9 and abs(r.lambdan + 3.0) < 1e-9
    fyw = _bound(r, "fan_yu_wang")
    assert abs(fyw.value - 2.0) < 1e-9
    assert not fyw.applicable  # chi = 2 sits outside 3..n-1
    assert r.flags["fan_yu_wang"] == "skipped"
    edge = _bound(r, "edge_conjecture")
    assert abs(edge.value - 2.0) < 1e-9 and edge.holds and edge.equality
    assert r.flags["constantine"] == "pass"
    assert _bound(r, "constantine").equality


def test_analyze_k4():
    r = analyze(complete(4))
    assert r.chi == 4
    wilf = _bound(r, "wilf")
    assert wilf.holds and wilf.equality
    edge = _bound(r, "edge_conjecture")
    assert abs(edge.value - 12.0) < 1e-9 and edge.equality
    assert r.flags["fan_yu_wang"] == "skipped"  # chi = n
    assert r.gaps == ()


def test_analyze_extremal_equality_pair():
    g = extremal_graph(ExtremalParams(n=8, chi=4, a=2, a0=2))
    r = analyze(g)
    assert r.chi == 4
    assert _bound(r, "fan_yu_wang").equality
    assert _bound(r, "fan_yu_wang_lambda").equality
    assert all(r.flags[c] in ("pass", "skipped") for c in CHECKS)


def test_analyze_cap_gap():
    r = analyze(empty_graph(70))
    assert r.chi is None and "chi" in r.gaps
    assert r.flags["wilf"] == "skipped"
    assert r.flags["constantine"] == "pass"  # chi-free checks still run
    assert r.flags["powers"] == "pass"


def test_analyze_rejects_order_zero():
    with pytest.raises(ValueError):
        analyze(empty_graph(0))


def test_report_serialization():
    r = analyze(complete(4))
    payload = json.loads(r.to_json())
    assert list(payload)[:8] == ["graph6", "n", "m", "connected", "chi",
                                 "col", "lambda1", "lambdan"]
    assert payload["graph6"] == "C~"
    assert payload["flags"]["wilf"] == "pass"
    row = r.csv_row()
    assert row.split(",")[0] == "C~"
    assert len(row.split(",")) == len(CSV_HEADER.split(","))


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    assert sum(1 for _ in enumerate_labeled(3, connected_only=True)) == 4
    assert sum(1 for _ in enumerate_labeled(4)) == 64
    assert sum(1 for _ in enumerate_labeled(5)) == 1024
    # labeled connected counts, a classical sequence
    assert sum(1 for _ in enumerate_labeled(4, connected_only=True)) == 38
    assert sum(1 for _ in enumerate_labeled(5, connected_only=True)) == 728


def test_enumerate_order_and_cap():
    first = next(iter(enumerate_labeled(3)))
    assert first.m == 0
    with pytest.raises(ValueError, match="graph6"):
        list(enumerate_labeled(8))


def test_mask_bit_order_matches_graph6():
    # bit b of the mask is the b-th bit of the graph6 stream
    g = graph_from_mask(5, 0b1011)
    s = to_graph6(g)
    assert parse_graph6(s) == g
    assert g.m == 3


def test_verify_stream_labeled_n5():
    summary = verify_stream(enumerate_labeled(5), checks=("edge_conjecture",))
    assert summary.processed == 1024
    assert summary.violations_total == 0
    assert summary.checks["edge_conjecture"]["pass"] == 1023
    assert summary.checks["edge_conjecture"]["skipped"] == 1


def test_verify_stream_lines_and_malformed():
    lines = [">>graph6<<", "C~", "", "B!", "Bw", "D??"]
    summary = verify_stream(lines, checks=("constantine",))
    assert summary.processed == 3
    assert summary.malformed == 1
    assert summary.malformed_lines[0][0] == 4
    assert summary.checks["constantine"]["pass"] == 3
    assert not summary.ok


def test_verify_stream_single_k4():
    summary = verify_stream(["C~"], checks=("constantine",))
    assert summary.processed == 1
    assert summary.checks["constantine"] == {"pass": 1, "violation": 0,
                                             "skipped": 0}
    assert summary.ok


def test_verify_stream_skips_order_zero():
    summary = verify_stream(["?", "@"])
    assert summary.skipped_empty == 1 and summary.processed == 1


def test_unknown_check_rejected():
    with pytest.raises(ValueError, match="unknown"):
        verify_stream(["C~"], checks=("nope",))


def test_sweep_matches_stream():
    s_fast = sweep_labeled(4)
    s_slow = verify_stream(enumerate_labeled(4))
    assert s_fast.processed == s_slow.processed == 64
    assert s_fast.checks == s_slow.checks
    assert s_fast.violations_total == s_slow.violations_total == 0


def test_sweep_parallel_determinism():
    a = sweep_labeled(5, parallelism=1).to_json()
    b = sweep_labeled(5, parallelism=4).to_json()
    assert a.encode() == b.encode()


def test_recheck_clears_tolerance_artifacts():
    # a negative holds tolerance manufactures candidate violations; the
    # high-precision recheck must clear every one of them
    r = analyze(complete(3), holds_tol=-0.5, recheck=False)
    assert r.flags["wilf"] == "violation"
    r = analyze(complete(3), holds_tol=-0.5, recheck=True)
    assert r.flags["wilf"] == "pass"
    assert "recheck" in _bound(r, "wilf").note
    summary = sweep_labeled(3, holds_tol=-0.25)
    assert summary.violations_total == 0


def test_compare_single_diamond():
    diamond = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    counts = compare_bounds([to_graph6(diamond)])
    assert counts.total == 1
    assert counts.wilf_wins + counts.fyw_wins + counts.ties == 1
    assert counts.fyw_wins == 1  # 3.186 < 3.562 here


def test_compare_stream_matches_labeled():
    fast = compare_labeled(5, mode="raw", versus="wilf", connected_only=True)
    slow = compare_bounds(enumerate_labeled(5, connected_only=True))
    assert (fast.wilf_wins, fast.fyw_wins, fast.ties) == \
        (slow.wilf_wins, slow.fyw_wins, slow.ties)
    assert fast.total + fast.skipped == 1 << 10


def test_compare_ceiling_mode():
    fast = compare_labeled(5, mode="ceiling", versus="wilf")
    raw = compare_labeled(5, mode="raw", versus="wilf")
    assert fast.total == raw.total
    assert fast.ties >= raw.ties  # integer rounding merges near-ties


def test_compare_fixture_connected_n6():
    frozen = json.loads((FIXTURES / "compare_n6_connected.json").read_text())
    for versus in ("wilf", "edge_conjecture"):
        for mode in ("raw", "ceiling"):
            c = compare_labeled(6, mode=mode, versus=versus,
                                connected_only=True)
            want = frozen[f"{versus}:{mode}"]
            got = {"wilf_wins": c.wilf_wins, "fyw_wins": c.fyw_wins,
                   "ties": c.ties, "skipped": c.skipped, "total": c.total}
            assert got == want, (versus, mode)


def test_equality_case_scan():
    report = equality_case_scan(12)
    assert report.all_ok
    assert {(c.n, c.chi) for c in report.cases} == {
        (n, chi) for n in range(6, 13, 2) for chi in range(4, n - 1, 2)}
    with pytest.raises(ValueError):
        equality_case_scan(20)


def test_summary_json_shape():
    s = sweep_labeled(3)
    payload = json.loads(s.to_json())
    assert payload["graphs"]["processed"] == 8
    assert payload["violations"] == []
    assert payload["violations_total"] == 0
    assert set(payload["checks"]) == set(CHECKS)


def test_disconnected_stream_entries():
    g = disjoint_union(complete(3), empty_graph(2))
    summary = verify_stream([g])
    assert summary.processed == 1
    assert summary.violations_total == 0
