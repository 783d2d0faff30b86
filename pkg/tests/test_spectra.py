import random

import numpy as np
import pytest

from chibounds import (complete, empty_graph, eigenvalues_highprec,
                       extremal_graph, ExtremalParams, join, lambda_max,
                       lambda_min, spectrum)
from chibounds.harness import graph_from_mask

from oracles import (charpoly_mismatch, complete_bipartite, cycle,
                     cycle_eigenvalues, petersen)


def test_complete_graph_spectrum():
    vals = spectrum(complete(4)).values
    assert abs(vals[0] - 3.0) < 1e-10
    for v in vals[1:]:
        assert abs(v + 1.0) < 1e-10


def test_k33_extremes():
    k33 = join(empty_graph(3), empty_graph(3))
    assert abs(lambda_max(k33) - 3.0) < 1e-10
    assert abs(lambda_min(k33) + 3.0) < 1e-10


def test_cycle_against_circulant_formula():
    for n in (3, 4, 5, 6, 7, 9):
        got = spectrum(cycle(n)).values
        want = cycle_eigenvalues(n)
        assert max(abs(a - b) for a, b in zip(got, want)) < 1e-9
    assert abs(lambda_max(cycle(5)) - 2.0) < 1e-10
    assert abs(lambda_min(cycle(5)) - 2.0 * np.cos(4.0 * np.pi / 5.0)) < 1e-10


def test_balanced_bipartite_floor():
    # the unique least-eigenvalue minimizer over all graphs of order n
    assert abs(lambda_min(complete_bipartite(3, 3)) + 3.0) < 1e-10
    assert abs(lambda_min(complete_bipartite(4, 3)) + np.sqrt(12.0)) < 1e-10


def test_trivial_spectra():
    assert lambda_min(empty_graph(4)) == 0.0
    assert spectrum(empty_graph(1)).values == (0.0,)
    with pytest.raises(ValueError):
        spectrum(empty_graph(0))


def test_sorted_and_identities():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(1, 9)
        mask = rng.randrange(1 << (n * (n - 1) // 2))
        g = graph_from_mask(n, mask)
        vals = spectrum(g).values
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        assert abs(sum(vals)) < 1e-9
        assert abs(sum(v * v for v in vals) - 2 * g.m) < 1e-8


def test_constantine_and_powers_floor_small():
    for n in range(1, 5):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            ln = lambda_min(g)
            assert ln >= -n / 2 - 1e-9
            assert ln * ln <= g.m + 1e-8


def test_extremal_family_below_minus_one():
    for n in range(4, 9):
        for chi in range(3, n):
            for a in range(1, chi):
                for a0 in range(n - chi + 1):
                    g = extremal_graph(ExtremalParams(n=n, chi=chi, a=a, a0=a0))
                    assert lambda_min(g) < -1.0


def test_charpoly_oracle_exhaustive_small():
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            assert charpoly_mismatch(g, spectrum(g).values) < 1e-8


def test_charpoly_oracle_sampled_order6():
    rng = random.Random(42)
    masks = rng.sample(range(1 << 15), 2048)
    for mask in masks:
        g = graph_from_mask(6, mask)
        assert charpoly_mismatch(g, spectrum(g).values) < 1e-8


def test_charpoly_oracle_named_graphs():
    for g in (complete_bipartite(3, 3), cycle(5), petersen()):
        assert charpoly_mismatch(g, spectrum(g).values) < 1e-8


def test_highprec_agrees():
    for g in (complete(4), cycle(5), complete_bipartite(3, 3), petersen()):
        hp = eigenvalues_highprec(g)
        lp = spectrum(g).values
        assert max(abs(a - b) for a, b in zip(hp, lp)) < 1e-12


def test_determinism():
    g = petersen()
    assert spectrum(g).values == spectrum(g).values
