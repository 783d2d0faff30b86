import json
import os
import random
import subprocess
import sys

import numpy as np

from chibounds import _kernels, sweep_labeled
from chibounds.harness import graph_from_mask


def test_popcount_and_full_mask():
    assert _kernels.popcount64(np.uint64(0)) == 0
    assert _kernels.popcount64(np.uint64(0b1011)) == 3
    assert _kernels.popcount64(np.uint64(2**64 - 1)) == 64
    assert _kernels.full_mask(0) == np.uint64(0)
    assert _kernels.full_mask(3) == np.uint64(7)
    assert _kernels.full_mask(64) == np.uint64(2**64 - 1)


def _py_degeneracy(g):
    alive = set(range(g.n))
    best = 0
    while alive:
        v = min(alive, key=lambda u: (sum(1 for w in g.neighbors(u)
                                          if w in alive), u))
        best = max(best, sum(1 for w in g.neighbors(v) if w in alive))
        alive.remove(v)
    return best


def test_degeneracy_against_python_reference():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randrange(1, 9)
        g = graph_from_mask(n, rng.randrange(1 << (n * (n - 1) // 2)))
        assert _kernels.degeneracy(g.rows_u64(), n) == _py_degeneracy(g)


def test_connectivity_matches_graph_method():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randrange(1, 9)
        g = graph_from_mask(n, rng.randrange(1 << (n * (n - 1) // 2)))
        assert bool(_kernels.is_connected(g.rows_u64(), n)) == g.is_connected()


def test_kcolorable_boundaries():
    k3 = graph_from_mask(3, 0b111).rows_u64()
    colors = np.empty(3, np.int64)
    assert not _kernels.kcolorable(k3, 3, 2, colors)
    assert _kernels.kcolorable(k3, 3, 3, colors)
    assert sorted(int(c) for c in colors) == [0, 1, 2]


def test_greedy_bounds_bracket_chi():
    rng = random.Random(5)
    colors = np.empty(8, np.int64)
    for _ in range(300):
        n = rng.randrange(1, 8)
        g = graph_from_mask(n, rng.randrange(1 << (n * (n - 1) // 2)))
        adj = g.rows_u64()
        lb = _kernels.greedy_clique_size(adj, n)
        ub = _kernels.greedy_coloring(adj, n, colors[:n])
        chi = _kernels.chi_exact(adj, n, colors[:n])
        assert lb <= chi <= ub


def test_pure_python_fallback_equivalence():
    """Same kernels, jit disabled by env flag: identical sweep summary."""
    fast = sweep_labeled(4).to_json()
    script = (
        "import json\n"
        "from chibounds import sweep_labeled, _kernels\n"
        "assert _kernels.PURE_PYTHON and not _kernels.NUMBA_ENABLED\n"
        "print(sweep_labeled(4).to_json())\n"
    )
    env = dict(os.environ, CHIBOUNDS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", script], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == fast
    assert json.loads(fast)["graphs"]["processed"] == 64
