"""Hot graph kernels on uint64 adjacency bit rows.

Everything here is written as plain Python over numpy scalars so that the
same source runs with or without numba. By default each kernel is compiled
with ``@njit(cache=True, nogil=True)``; set ``CHIBOUNDS_PURE_PYTHON=1`` to
skip compilation and run the interpreted fallback (identical results,
slower). ``nogil`` lets the harness thread pool overlap chunk work.

Vertex count is capped at 64 so a row fits one uint64. Callers validate.
"""

import os

import numpy as np

U0 = np.uint64(0)
U1 = np.uint64(1)

PURE_PYTHON = os.environ.get("CHIBOUNDS_PURE_PYTHON", "").strip() not in ("", "0")

if not PURE_PYTHON:
    try:
        from numba import njit as _njit
    except ImportError:
        PURE_PYTHON = True

NUMBA_ENABLED = not PURE_PYTHON

if NUMBA_ENABLED:
    def _jit(fn):
        return _njit(cache=True, nogil=True)(fn)
else:
    def _jit(fn):
        return fn


@_jit
def popcount64(x):
    c = 0
    while x != U0:
        x &= x - U1
        c += 1
    return c


@_jit
def full_mask(n):
    if n >= 64:
        return ~U0
    return (U1 << np.uint64(n)) - U1


@_jit
def _neighbor_colors(row, colors, n):
    # bitmask over the colors already assigned to neighbors
    used = U0
    for u in range(n):
        if colors[u] >= 0 and ((row >> np.uint64(u)) & U1) != U0:
            used |= U1 << np.uint64(colors[u])
    return used


@_jit
def _select_vertex(adj, colors, degs, n):
    # DSATUR order: max saturation, then max degree, then lowest index
    best = -1
    best_sat = -1
    best_deg = -1
    for v in range(n):
        if colors[v] >= 0:
            continue
        sat = popcount64(_neighbor_colors(adj[v], colors, n))
        if sat > best_sat or (sat == best_sat and degs[v] > best_deg):
            best = v
            best_sat = sat
            best_deg = degs[v]
    return best


@_jit
def greedy_clique_size(adj, n):
    """Greedy clique lower bound (seed max degree, extend by candidate degree)."""
    if n == 0:
        return 0
    seed = 0
    seed_d = -1
    for v in range(n):
        d = popcount64(adj[v])
        if d > seed_d:
            seed_d = d
            seed = v
    size = 1
    cand = adj[seed]
    while cand != U0:
        pick = -1
        pick_d = -1
        for u in range(n):
            if ((cand >> np.uint64(u)) & U1) != U0:
                d = popcount64(adj[u] & cand)
                if d > pick_d:
                    pick_d = d
                    pick = u
        size += 1
        cand &= adj[pick]
    return size


@_jit
def greedy_coloring(adj, n, colors):
    """DSATUR greedy coloring; fills ``colors`` (0-based), returns color count."""
    for v in range(n):
        colors[v] = -1
    degs = np.empty(n, np.int64)
    for v in range(n):
        degs[v] = popcount64(adj[v])
    top = -1
    for _ in range(n):
        v = _select_vertex(adj, colors, degs, n)
        forb = _neighbor_colors(adj[v], colors, n)
        c = 0
        while ((forb >> np.uint64(c)) & U1) != U0:
            c += 1
        colors[v] = c
        if c > top:
            top = c
    return top + 1


@_jit
def kcolorable(adj, n, k, colors):
    """Exact k-colorability by branch and bound on DSATUR-ordered vertices.

    Fills ``colors`` with a proper k-coloring (0-based) when one exists.
    Deterministic: vertices by (saturation, degree, lowest index), colors
    ascending, at most one previously-unused color tried per branch point.
    """
    for v in range(n):
        colors[v] = -1
    if n == 0:
        return True
    if k <= 0:
        return False
    if k >= n:
        for v in range(n):
            colors[v] = v
        return True
    degs = np.empty(n, np.int64)
    for v in range(n):
        degs[v] = popcount64(adj[v])
    vsel = np.full(n, -1, np.int64)
    cnext = np.zeros(n, np.int64)
    cmax_save = np.zeros(n, np.int64)
    cmax = -1
    depth = 0
    fresh = True
    while True:
        if depth == n:
            return True
        if fresh:
            vsel[depth] = _select_vertex(adj, colors, degs, n)
            cnext[depth] = 0
            fresh = False
        v = vsel[depth]
        forb = _neighbor_colors(adj[v], colors, n)
        limit = cmax + 1
        if limit > k - 1:
            limit = k - 1
        c = cnext[depth]
        while c <= limit and ((forb >> np.uint64(c)) & U1) != U0:
            c += 1
        if c <= limit:
            colors[v] = c
            cmax_save[depth] = cmax
            if c > cmax:
                cmax = c
            cnext[depth] = c + 1
            depth += 1
            fresh = True
        else:
            depth -= 1
            if depth < 0:
                return False
            colors[vsel[depth]] = -1
            cmax = cmax_save[depth]


@_jit
def chi_exact(adj, n, colors):
    """Exact chromatic number; leaves an optimal coloring in ``colors``."""
    if n == 0:
        return 0
    lb = greedy_clique_size(adj, n)
    ub = greedy_coloring(adj, n, colors)
    if lb >= ub:
        return ub
    for k in range(lb, ub):
        if kcolorable(adj, n, k, colors):
            return k
    return greedy_coloring(adj, n, colors)


@_jit
def degeneracy(adj, n):
    """Max removal degree over the min-degree peeling order (ties: lowest index)."""
    alive = full_mask(n)
    best = 0
    for _ in range(n):
        pick = -1
        pick_d = 65
        for v in range(n):
            if ((alive >> np.uint64(v)) & U1) != U0:
                d = popcount64(adj[v] & alive)
                if d < pick_d:
                    pick_d = d
                    pick = v
        if pick_d > best:
            best = pick_d
        alive &= ~(U1 << np.uint64(pick))
    return best


@_jit
def is_connected(adj, n):
    if n <= 1:
        return True
    seen = U1
    while True:
        grow = seen
        for v in range(n):
            if ((seen >> np.uint64(v)) & U1) != U0:
                grow |= adj[v]
        if grow == seen:
            break
        seen = grow
    return seen == full_mask(n)


@_jit
def sweep_masks(n, mask_lo, mask_hi, pair_i, pair_j, out_m, out_chi, out_col, out_conn):
    """Per-graph invariants for every edge mask in [mask_lo, mask_hi).

    Bit b of a mask is the edge (pair_i[b], pair_j[b]); outputs are indexed
    by mask - mask_lo.
    """
    nb = pair_i.shape[0]
    adj = np.zeros(n, np.uint64)
    colors = np.empty(n, np.int64)
    for idx in range(mask_hi - mask_lo):
        mask = mask_lo + idx
        for v in range(n):
            adj[v] = U0
        mm = 0
        for b in range(nb):
            if (mask >> b) & 1 != 0:
                i = pair_i[b]
                j = pair_j[b]
                adj[i] |= U1 << np.uint64(j)
                adj[j] |= U1 << np.uint64(i)
                mm += 1
        out_m[idx] = mm
        out_chi[idx] = chi_exact(adj, n, colors)
        out_col[idx] = degeneracy(adj, n) + 1
        out_conn[idx] = 1 if is_connected(adj, n) else 0


def warmup():
    """Force jit compilation on a toy instance (no-op in pure-Python mode)."""
    adj = np.array([6, 5, 3], dtype=np.uint64)  # K3
    colors = np.empty(3, np.int64)
    chi_exact(adj, 3, colors)
    kcolorable(adj, 3, 2, colors)
    degeneracy(adj, 3)
    is_connected(adj, 3)
    pair_i = np.array([0, 0, 1], dtype=np.int64)
    pair_j = np.array([1, 2, 2], dtype=np.int64)
    out = [np.zeros(8, np.int32) for _ in range(3)]
    sweep_masks(3, 0, 8, pair_i, pair_j, out[0], out[1], out[2], np.zeros(8, np.uint8))
