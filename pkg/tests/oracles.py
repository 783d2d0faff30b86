"""Independent brute-force oracles used only by the tests.

These deliberately avoid the production algorithms: the characteristic
polynomial comes from exact integer cofactor expansion (not LAPACK), and
the coloring oracle enumerates assignments in fixed vertex order (no
saturation ordering, no clique/greedy pruning).
"""

import itertools

import numpy as np

from chibounds import Graph, from_edges
from chibounds._kernels import U0, U1, _jit

# --- exact characteristic polynomial -------------------------------------


def _poly_add(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _det_poly(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = [0]
    for j in range(n):
        entry = mat[0][j]
        if all(c == 0 for c in entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = _poly_mul(entry, _det_poly(minor))
        if j % 2:
            term = [-c for c in term]
        total = _poly_add(total, term)
    return total


def charpoly_exact(g: Graph) -> list[int]:
    """Integer coefficients of det(x I - A), constant term first."""
    mat = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append([0, 1])          # x
            elif g.has_edge(i, j):
                row.append([-1])            # -a_ij
            else:
                row.append([0])
        mat.append(row)
    poly = _det_poly(mat)
    return poly + [0] * (g.n + 1 - len(poly))


def charpoly_mismatch(g: Graph, eigenvalues) -> float:
    """Max coefficient gap between the exact characteristic polynomial and
    the monic polynomial rebuilt from the eigenvalue list.

    Coefficient comparison is multiplicity-exact, unlike numerical root
    extraction, which loses half the digits at a double root.
    """
    exact = np.array(charpoly_exact(g)[::-1], dtype=float)  # highest first
    rebuilt = np.poly(np.asarray(eigenvalues, dtype=float))
    return float(np.max(np.abs(exact - rebuilt)))


# --- brute-force chromatic number -----------------------------------------


def _brute_kcolorable_src(adj, n, k):
    colors = np.full(n, -1, np.int64)
    v = 0
    while True:
        if v == n:
            return True
        c = colors[v] + 1
        while c < k:
            clash = False
            for u in range(v):
                if colors[u] == c and ((adj[v] >> np.uint64(u)) & U1) != U0:
                    clash = True
                    break
            if not clash:
                break
            c += 1
        if c < k:
            colors[v] = c
            v += 1
        else:
            colors[v] = -1
            v -= 1
            if v < 0:
                return False


_brute_kcolorable = _jit(_brute_kcolorable_src)


def brute_chi(g: Graph) -> int:
    """Smallest k with a proper k-coloring, by plain assignment enumeration."""
    assert g.n >= 1
    adj = g.rows_u64()
    for k in range(1, g.n + 1):
        if _brute_kcolorable(adj, g.n, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


# --- reference graphs ------------------------------------------------------


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_eigenvalues(n: int) -> list[float]:
    """Circulant formula 2 cos(2 pi k / n), sorted descending."""
    return sorted((2.0 * np.cos(2.0 * np.pi * k / n) for k in range(n)),
                  reverse=True)


def petersen() -> Graph:
    verts = list(itertools.combinations(range(5), 2))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v])
             for u, v in itertools.combinations(verts, 2)
             if not set(u) & set(v)]
    return from_edges(10, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
