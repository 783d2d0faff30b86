"""Closed-form spectral bounds and checks.

All functions take scalars (lambda_1, lambda_n, n, m, chi), not graphs, so
the algebraic property tests can evaluate them at synthetic points. A
BoundValue records the bound value and, once compared against the exact
quantity, whether it holds and whether it is tight.

Tolerances: 1e-7 absolute for "holds" (eigenvalue accuracy amplified
through square roots), 1e-6 for "equality". Candidate violations are
re-verified at a tightened eigensolver tolerance before being reported
(see harness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .quartic import symmetric_root

HOLDS_TOL = 1e-7
EQUALITY_TOL = 1e-6

# Known list chromatic number of K_{3,3} (documented constant, not computed):
# substituting it, or the coloring number, for chi in the least-eigenvalue
# chi-bound would fail on K_{3,3}, whose bound value is exactly 2.
LIST_CHROMATIC_K33 = 3


@dataclass(frozen=True)
class BoundValue:
    """One bound evaluation; ``holds``/``equality`` are set by ``compared``."""

    name: str
    direction: str  # "upper" | "lower"
    value: float | None
    applicable: bool = True
    holds: bool | None = None
    equality: bool | None = None
    note: str = ""

    def compared(self, exact: float | None,
                 holds_tol: float = HOLDS_TOL,
                 eq_tol: float = EQUALITY_TOL) -> "BoundValue":
        """Flag whether the bound holds against the exact quantity it bounds."""
        if not self.applicable or self.value is None or exact is None:
            return replace(self, holds=None, equality=None)
        if self.direction == "upper":
            ok = exact <= self.value + holds_tol
        else:
            ok = exact >= self.value - holds_tol
        return replace(self, holds=ok,
                       equality=abs(exact - self.value) <= eq_tol)


def chi_in_theorem_range(n: int, chi: int | None) -> bool:
    return chi is not None and 3 <= chi <= n - 1


def wilf_bound(lambda1: float) -> BoundValue:
    """chi <= 1 + lambda_1."""
    return BoundValue("wilf", "upper", 1.0 + lambda1)


def hoffman_bound(lambda1: float, lambdan: float) -> BoundValue:
    """chi >= 1 - lambda_1/lambda_n; needs an edge (lambda_n < 0)."""
    if lambdan >= 0:
        return BoundValue("hoffman", "lower", None, applicable=False,
                          note="no negative eigenvalue (empty graph)")
    return BoundValue("hoffman", "lower", 1.0 - lambda1 / lambdan)


def fan_yu_wang_lambda_bound(n: int, chi: int | None) -> BoundValue:
    """lambda_n >= -(n - chi + 2 + sqrt((n-chi-2)^2 + 4 chi (n-chi)))/4.

    Valid for 3 <= chi <= n-1; outside that range the bound is reported as
    not applicable rather than silently evaluated.
    """
    if not chi_in_theorem_range(n, chi):
        return BoundValue("fan_yu_wang_lambda", "lower", None, applicable=False,
                          note="chromatic number outside 3..n-1")
    return BoundValue("fan_yu_wang_lambda", "lower", symmetric_root(n, chi).root)


def fan_yu_wang_chi_bound(n: int, lambdan: float) -> BoundValue:
    """chi <= (n/2 + 1 + lambda_n) + sqrt((n/2 + 1 + lambda_n)^2
    - 4 (lambda_n + 1)(lambda_n + n/2)), valid for 3 <= chi <= n-1.

    The discriminant is nonnegative whenever lambda_n >= -n/2; the caller
    gates applicability on the chi range, which this function cannot see.
    """
    h = 0.5 * n + 1.0 + lambdan
    disc = h * h - 4.0 * (lambdan + 1.0) * (lambdan + 0.5 * n)
    if disc < -1e-9:
        return BoundValue("fan_yu_wang", "upper", None, applicable=False,
                          note=f"negative discriminant {disc} (lambda_n below -n/2?)")
    return BoundValue("fan_yu_wang", "upper", h + math.sqrt(max(disc, 0.0)))


def edge_chi_bound(m: int, lambdan: float) -> BoundValue:
    """Conjectured edge-based bound:
    chi (chi - 1) <= (m + 1 - lambda_n^2)
                     + sqrt((m + 1 - lambda_n^2)^2 - 4 (lambda_n^2 - 1)(lambda_n^2 - m)).

    Needs m >= 1. Nonnegativity of the discriminant follows from
    1 <= lambda_n^2 <= m; genuine violations of those are diagnosed.
    """
    if m < 1:
        return BoundValue("edge_conjecture", "upper", None, applicable=False,
                          note="needs at least one edge")
    x = lambdan * lambdan
    if x > m + 1e-6 or x < 1.0 - 1e-6:
        return BoundValue("edge_conjecture", "upper", None, applicable=False,
                          note=f"lambda_n^2 = {x} outside [1, m]")
    base = m + 1.0 - x
    disc = base * base - 4.0 * (x - 1.0) * (x - m)
    if disc < -1e-7:
        return BoundValue("edge_conjecture", "upper", None, applicable=False,
                          note=f"negative discriminant {disc}")
    return BoundValue("edge_conjecture", "upper", base + math.sqrt(max(disc, 0.0)))


def powers_check(m: int, lambdan: float,
                 holds_tol: float = HOLDS_TOL, eq_tol: float = EQUALITY_TOL) -> BoundValue:
    """lambda_n^2 <= m."""
    x = lambdan * lambdan
    return BoundValue("powers", "upper", float(m),
                      holds=x <= m + holds_tol,
                      equality=abs(x - m) <= eq_tol)


def wu_elphick_check(chi: int, lambda1: float, m: int,
                     holds_tol: float = HOLDS_TOL, eq_tol: float = EQUALITY_TOL) -> BoundValue:
    """chi (chi - 1) <= (lambda_1 + 1) lambda_1 <= 2m; value is the middle term."""
    mid = (lambda1 + 1.0) * lambda1
    lo = chi * (chi - 1)
    holds = lo <= mid + holds_tol and mid <= 2.0 * m + holds_tol
    eq = abs(lo - mid) <= eq_tol and abs(mid - 2.0 * m) <= eq_tol
    return BoundValue("wu_elphick", "upper", mid, holds=holds, equality=eq)


def constantine_check(n: int, lambdan: float,
                      holds_tol: float = HOLDS_TOL, eq_tol: float = EQUALITY_TOL) -> BoundValue:
    """lambda_n >= -n/2, with equality exactly for balanced complete bipartite graphs."""
    floor = -0.5 * n
    return BoundValue("constantine", "lower", floor,
                      holds=lambdan >= floor - holds_tol,
                      equality=abs(lambdan - floor) <= eq_tol)
