import pytest

from chibounds import (CHI_SOLVER_CAP, ExtremalParams, SolverCapError,
                       chromatic_number, coloring_number, complete,
                       disjoint_union, empty_graph, extremal_graph,
                       lambda_max)
from chibounds.harness import graph_from_mask

from oracles import brute_chi, complete_bipartite, cycle, petersen


def test_complete_graphs():
    for k in (1, 2, 5, 9):
        res = chromatic_number(complete(k))
        assert res.chi == k
        assert sorted(res.witness) == list(range(1, k + 1))


def test_bipartite_and_empty():
    assert chromatic_number(complete_bipartite(3, 3)).chi == 2
    assert chromatic_number(empty_graph(5)).chi == 1
    assert chromatic_number(empty_graph(1)).chi == 1


def test_petersen():
    g = petersen()
    # odd 5-cycles force chi >= 3; brute force confirms 3 suffices
    assert chromatic_number(g).chi == 3
    assert brute_chi(g) == 3


def test_odd_even_cycles():
    assert chromatic_number(cycle(5)).chi == 3
    assert chromatic_number(cycle(6)).chi == 2


def test_witness_properties():
    for g in (petersen(), cycle(7), disjoint_union(complete(3), complete(2))):
        res = chromatic_number(g)
        assert len(set(res.witness)) == res.chi
        assert all(1 <= c <= res.chi for c in res.witness)
        for u, v in g.edges():
            assert res.witness[u] != res.witness[v]


def test_disconnected_is_max_over_components():
    g = disjoint_union(complete(3), complete(2))
    assert chromatic_number(g).chi == 3
    g = disjoint_union(empty_graph(2), cycle(5))
    assert chromatic_number(g).chi == 3


def test_deterministic_witness():
    g = petersen()
    assert chromatic_number(g) == chromatic_number(g)


def test_solver_cap():
    with pytest.raises(SolverCapError, match="cap"):
        chromatic_number(empty_graph(CHI_SOLVER_CAP + 1))
    with pytest.raises(ValueError):
        chromatic_number(empty_graph(0))
    # the cap itself is inside the supported range
    assert chromatic_number(complete(64)).chi == 64


def test_oracle_equivalence_exhaustive():
    # every labeled graph on up to 6 vertices against plain enumeration
    for n in range(1, 7):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            assert chromatic_number(g).chi == brute_chi(g), (n, mask)


def test_coloring_number_examples():
    assert coloring_number(complete_bipartite(3, 3)) == 4
    assert coloring_number(complete(4)) == 4
    assert coloring_number(empty_graph(3)) == 1
    assert coloring_number(cycle(5)) == 3
    assert coloring_number(petersen()) == 4


def test_chi_col_wilf_sandwich():
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            chi = chromatic_number(g).chi
            col = coloring_number(g)
            assert chi <= col <= 1 + lambda_max(g) + 1e-7


def test_extremal_family_chromatic_number():
    # the construction hits its chromatic target exactly
    for n in range(4, 17):
        for chi in range(3, n):
            for a in range(1, chi):
                for a0 in range(n - chi + 1):
                    p = ExtremalParams(n=n, chi=chi, a=a, a0=a0)
                    assert chromatic_number(extremal_graph(p)).chi == chi
