"""Exact chromatic number and coloring number (degeneracy + 1).

The exact solver is iterative deepening over k with a DSATUR-ordered branch
and bound per k, pruned between a greedy clique lower bound and a greedy
coloring upper bound. Components are split first and solved independently;
all tie-breaking is by lowest vertex index, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import Graph

CHI_SOLVER_CAP = 64


class SolverCapError(ValueError):
    """Raised instead of silently degrading when a graph exceeds the exact-solver cap."""


@dataclass(frozen=True)
class ColoringResult:
    """Exact chromatic number plus a proper witness using colors 1..chi."""

    chi: int
    witness: tuple[int, ...]


def _components(g: Graph) -> list[list[int]]:
    out = []
    unseen = (1 << g.n) - 1
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        while True:
            grow = comp
            for v in Graph._bits(comp):
                grow |= g.rows[v]
            if grow == comp:
                break
            comp = grow
        out.append(list(Graph._bits(comp)))
        unseen &= ~comp
    return out


def chromatic_number(g: Graph) -> ColoringResult:
    """Exact chi with a deterministic optimal coloring.

    Raises SolverCapError above 64 vertices: callers must not substitute a
    heuristic silently.
    """
    if g.n == 0:
        raise ValueError("chromatic number needs at least one vertex")
    if g.n > CHI_SOLVER_CAP:
        raise SolverCapError(
            f"exact solver cap is {CHI_SOLVER_CAP} vertices, got {g.n}")
    witness = [0] * g.n
    chi = 0
    for comp in _components(g):
        k = len(comp)
        index = {v: i for i, v in enumerate(comp)}
        rows = np.zeros(k, dtype=np.uint64)
        for i, v in enumerate(comp):
            row = 0
            for u in Graph._bits(g.rows[v]):
                row |= 1 << index[u]
            rows[i] = row
        colors = np.empty(k, dtype=np.int64)
        comp_chi = int(_kernels.chi_exact(rows, k, colors))
        chi = max(chi, comp_chi)
        for i, v in enumerate(comp):
            witness[v] = int(colors[i]) + 1
    _check_witness(g, chi, witness)
    return ColoringResult(chi=chi, witness=tuple(witness))


def _check_witness(g: Graph, chi: int, witness: list[int]) -> None:
    used = set()
    for v in range(g.n):
        c = witness[v]
        if not 1 <= c <= chi:
            raise AssertionError("witness color out of range")
        used.add(c)
        for u in Graph._bits(g.rows[v]):
            if witness[u] == c:
                raise AssertionError("witness is not a proper coloring")
    if len(used) != chi:
        raise AssertionError("witness does not use exactly chi colors")


def coloring_number(g: Graph) -> int:
    """1 + degeneracy, via repeated min-degree peeling."""
    if g.n == 0:
        raise ValueError("coloring number needs at least one vertex")
    if g.n <= 64:
        return int(_kernels.degeneracy(g.rows_u64(), g.n)) + 1
    alive = (1 << g.n) - 1
    best = 0
    for _ in range(g.n):
        pick = -1
        pick_d = g.n + 1
        for v in range(g.n):
            if (alive >> v) & 1:
                d = (g.rows[v] & alive).bit_count()
                if d < pick_d:
                    pick_d = d
                    pick = v
        best = max(best, pick_d)
        alive &= ~(1 << pick)
    return best + 1
