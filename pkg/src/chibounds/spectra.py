"""Adjacency spectra.

The full eigenvalue list is computed densely (LAPACK symmetric solver:
Householder tridiagonalization plus implicit-shift iteration), which is
exact enough and fast at the few-hundred-vertex scale this library targets.
Every call cross-checks the trace and Frobenius identities, so a silently
wrong spectrum cannot propagate into bound evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph

EIG_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending; ``tol`` is the guaranteed absolute accuracy."""

    values: tuple[float, ...]
    tol: float = EIG_TOL


def spectrum(g: Graph) -> Spectrum:
    if g.n == 0:
        raise ValueError("the order-0 graph has no spectrum")
    vals = np.linalg.eigvalsh(g.to_array())[::-1]
    if abs(float(vals.sum())) > g.n * EIG_TOL:
        raise ArithmeticError("eigensolver output violates the zero-trace identity")
    if abs(float((vals * vals).sum()) - 2.0 * g.m) > g.n * g.n * EIG_TOL:
        raise ArithmeticError("eigensolver output violates sum(eig^2) = 2m")
    return Spectrum(tuple(float(v) for v in vals))


def lambda_max(g: Graph) -> float:
    return spectrum(g).values[0]


def lambda_min(g: Graph) -> float:
    return spectrum(g).values[-1]


def eigenvalues_highprec(g: Graph, dps: int = 30) -> tuple[float, ...]:
    """Eigenvalues via mpmath at ``dps`` digits, rounded back to float.

    Slow; used only to re-check candidate bound violations at a tightened
    tolerance before they are reported.
    """
    import mpmath

    if g.n == 0:
        raise ValueError("the order-0 graph has no spectrum")
    with mpmath.workdps(dps):
        a = mpmath.zeros(g.n, g.n)
        for u, v in g.edges():
            a[u, v] = 1
            a[v, u] = 1
        eig = mpmath.mp.eigsy(a, eigvals_only=True)
        vals = sorted((float(e) for e in eig), reverse=True)
    return tuple(vals)
