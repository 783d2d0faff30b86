"""The quartic family behind the least-eigenvalue analysis.

For fixed order n and chromatic target chi, each feasible pair (a, a0)
yields the monic quartic

    f(a, a0, x) = x^2 (x - a + 1)(x - b + 1)
                  - [(b + b0) x - b0 (b - 1)] [(a + a0) x - a0 (a - 1)],

whose unique negative real root is the least adjacency eigenvalue of the
join graph (K_a u O_a0) v (K_b u O_b0). Substituting x -> -x flips the
coefficient signs into the pattern (+, >=0, -, <=0, <=0), so Descartes'
rule certifies exactly one negative root; we isolate it by bisection on a
guaranteed bracket.

Everything is re-parametrized around the symmetric pair
(a, a0) = (chi/2, (n-chi)/2) via

    p = (n - chi)/2,  q = chi/2 - 1,  a = chi/2 + t,  a0 = p + s.

At the symmetric point the quartic factors as a difference of squares and
its negative root solves x^2 + (1 + p) x - p q = 0; that root is the tight
lower bound on the least eigenvalue over the whole family. The gap

    gap(s, t; x) = f(a, a0, x) - f(chi/2, (n-chi)/2, x)
                 = p (p - 2x) t^2 + (x - q)^2 s^2 - s^2 t^2 + 2 x (x + 1) s t

is a polynomial identity in real (s, t, x); minimized over s at the
symmetric root it stays nonnegative, which is what makes the bound tight
only at (s, t) = (0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import ExtremalParams

ROOT_TOL = 1e-12
RESIDUAL_TOL = 1e-12

# Expected coefficient sign classes of f(a, a0, -x), leading term first.
DESCARTES_CLASSES = ("+", ">=0", "-", "<=0", "<=0")


def _require_range(n: int, chi: int) -> None:
    if not 3 <= chi <= n - 1:
        raise ValueError(f"need 3 <= chi <= n-1: got chi={chi}, n={n}")


def feasible_pairs(n: int, chi: int) -> list[ExtremalParams]:
    """All (chi-1)(n-chi+1) feasible pairs in lexicographic (a, a0) order."""
    _require_range(n, chi)
    return [ExtremalParams(n=n, chi=chi, a=a, a0=a0)
            for a in range(1, chi)
            for a0 in range(n - chi + 1)]


@dataclass(frozen=True)
class SymmetricCoords:
    """Offsets (s, t) of a pair from the symmetric point, with p and q."""

    n: int
    chi: int
    p: float
    q: float
    s: float
    t: float

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0:
            raise ValueError(
                f"need p > 0 and q > 0 (3 <= chi <= n-1): p={self.p}, q={self.q}")

    @classmethod
    def from_pair(cls, params: ExtremalParams) -> "SymmetricCoords":
        p = (params.n - params.chi) / 2
        q = params.chi / 2 - 1
        return cls(n=params.n, chi=params.chi, p=p, q=q,
                   s=params.a0 - p, t=params.a - params.chi / 2)

    @property
    def a(self) -> float:
        return self.chi / 2 + self.t

    @property
    def a0(self) -> float:
        return self.p + self.s

    def half_n_lambda(self, lam: float) -> float:
        """n/2 * lambda, the scaled eigenvalue appearing in the symmetric factorization."""
        return 0.5 * self.n * lam


@dataclass(frozen=True)
class QuarticCoeffs:
    """Monic coefficients of f(a, a0, .) plus the sign data of f(a, a0, -x).

    ``coeffs`` is (1, c3, c2, c1, c0), highest degree first; ``g_coeffs``
    are the coefficients of the sign-flipped polynomial, whose classes
    must match DESCARTES_CLASSES. The linear factors of the product term
    are kept as (slope, constant) pairs: factor(x) = slope*x - constant.
    """

    params: ExtremalParams
    coeffs: tuple[int, int, int, int, int]
    g_coeffs: tuple[int, int, int, int, int]
    gsigns: tuple[str, str, str, str, str]
    slope_a: int      # a + a0, order of the first join side
    const_a: int      # a0 * (a - 1)
    slope_b: int      # b + b0, order of the second join side
    const_b: int      # b0 * (b - 1)

    def eval(self, x: float) -> float:
        c4, c3, c2, c1, c0 = self.coeffs
        return (((c4 * x + c3) * x + c2) * x + c1) * x + c0

    def matches_descartes_pattern(self) -> bool:
        g4, g3, g2, g1, g0 = self.g_coeffs
        return g4 > 0 and g3 >= 0 and g2 < 0 and g1 <= 0 and g0 <= 0


def _sign_char(v: int) -> str:
    return "+" if v > 0 else ("-" if v < 0 else "0")


def quartic(params: ExtremalParams) -> QuarticCoeffs:
    """Expand f(a, a0, .) to integer coefficients and classify the sign pattern."""
    a, a0, b, b0 = params.a, params.a0, params.b, params.b0
    slope_a, const_a = a + a0, a0 * (a - 1)
    slope_b, const_b = b + b0, b0 * (b - 1)
    c3 = -(a + b - 2)
    c2 = (a - 1) * (b - 1) - slope_a * slope_b
    c1 = slope_b * const_a + slope_a * const_b
    c0 = -const_a * const_b
    g = (1, a + b - 2, c2, -c1, c0)
    qc = QuarticCoeffs(
        params=params,
        coeffs=(1, c3, c2, c1, c0),
        g_coeffs=g,
        gsigns=tuple(_sign_char(v) for v in g),
        slope_a=slope_a, const_a=const_a,
        slope_b=slope_b, const_b=const_b,
    )
    if not qc.matches_descartes_pattern():
        raise ArithmeticError(
            f"sign pattern violated for {params}: {qc.gsigns}")
    return qc


def smallest_negative_root(params: ExtremalParams) -> float:
    """The unique root in (-inf, 0), bisected to 1e-12 on a guaranteed bracket.

    f(-n) > 0 by the leading term and f(0) <= 0; when f(0) = 0 the bracket
    shrinks to [-n, -1e-9], which is safe because the negative root is < -1.
    """
    qc = quartic(params)
    n = params.n
    lo = -float(n)
    if not qc.eval(lo) > 0.0:
        raise ArithmeticError(f"bracket failure at -n for {params}")
    hi = -1e-9 if qc.coeffs[4] == 0 else 0.0
    if not qc.eval(hi) <= 0.0:
        raise ArithmeticError(f"bracket failure near 0 for {params}")
    while hi - lo > ROOT_TOL:
        mid = 0.5 * (lo + hi)
        fm = qc.eval(mid)
        if fm > 0.0:
            lo = mid
        elif fm < 0.0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class SymmetricPointRoot:
    """Negative root of x^2 + (1+p)x - pq and its derived positive quantities.

    mu = -root, alpha = p + 2 mu, beta = q + mu. The residuals are computed
    in exact rational arithmetic on the rounded double, so they certify the
    root to roughly one ulp.
    """

    n: int
    chi: int
    p: float
    q: float
    root: float
    mu: float
    alpha: float
    beta: float
    residual_quadratic: float
    residual_pq_identity: float


def symmetric_root(n: int, chi: int) -> SymmetricPointRoot:
    """Closed-form root -(n - chi + 2 + sqrt((n-chi-2)^2 + 4 chi (n-chi)))/4.

    Accepts chi = 2 as well, where the expression collapses to -n/2 (the
    all-graphs floor); chi < 2 or chi > n-1 is a domain error. The closed
    form is polished by one exact-arithmetic Newton step.
    """
    if chi < 2:
        raise ValueError(f"need chi >= 2: got {chi}")
    if chi > n - 1:
        raise ValueError(f"need chi <= n-1: got chi={chi}, n={n}")
    disc = (n - chi - 2) ** 2 + 4 * chi * (n - chi)
    x0 = -(n - chi + 2 + math.sqrt(disc)) / 4.0
    p_ex = Fraction(n - chi, 2)
    q_ex = Fraction(chi, 2) - 1
    x = Fraction(x0)
    fx = x * x + (1 + p_ex) * x - p_ex * q_ex
    dfx = 2 * x + 1 + p_ex
    root = float(x - fx / dfx)
    r = Fraction(root)
    res_quad = float(r * r + (1 + p_ex) * r - p_ex * q_ex)
    res_key = float(r * (r + 1) - p_ex * (q_ex - r))
    p = float(p_ex)
    q = float(q_ex)
    mu = -root
    alpha = p + 2 * mu
    beta = q + mu
    if not (mu > 0 and alpha > 0 and beta > 0):
        raise ArithmeticError(f"derived quantities not positive at n={n}, chi={chi}")
    if abs(res_quad) > RESIDUAL_TOL or abs(res_key) > RESIDUAL_TOL:
        raise ArithmeticError(
            f"root residual above {RESIDUAL_TOL} at n={n}, chi={chi}")
    return SymmetricPointRoot(n=n, chi=chi, p=p, q=q, root=root, mu=mu,
                              alpha=alpha, beta=beta,
                              residual_quadratic=res_quad,
                              residual_pq_identity=res_key)


def _quartic_eval_real(a: float, a0: float, b: float, b0: float, x: float) -> float:
    return (x * x * (x - a + 1.0) * (x - b + 1.0)
            - ((b + b0) * x - b0 * (b - 1.0)) * ((a + a0) * x - a0 * (a - 1.0)))


def quartic_gap_direct(s: float, t: float, lam: float, n: int, chi: int) -> float:
    """gap(s, t; lam) as the literal difference of the two quartic evaluations.

    Real-valued offsets are accepted: the identity is polynomial, not just a
    lattice fact, and the property tests sample it continuously.
    """
    _require_range(n, chi)
    p = (n - chi) / 2.0
    half_chi = chi / 2.0
    return (_quartic_eval_real(half_chi + t, p + s, half_chi - t, p - s, lam)
            - _quartic_eval_real(half_chi, p, half_chi, p, lam))


def quartic_gap_closed(s: float, t: float, lam: float, n: int, chi: int) -> float:
    """The closed form p(p-2x)t^2 + (x-q)^2 s^2 - s^2 t^2 + 2x(x+1) s t."""
    _require_range(n, chi)
    p = (n - chi) / 2.0
    q = chi / 2.0 - 1.0
    return (p * (p - 2.0 * lam) * t * t
            + (lam - q) ** 2 * s * s
            - s * s * t * t
            + 2.0 * lam * (lam + 1.0) * s * t)


def gap_min_over_s(t: float, n: int, chi: int) -> float:
    """Unconstrained-in-s minimum of gap(., t; root) at the symmetric root.

    Completing the square in s gives
        (p t^2 / (beta^2 - t^2)) * (alpha (beta^2 - t^2) - p beta^2),
    valid for |t| < beta; feasible offsets satisfy |t| <= q < beta.
    """
    _require_range(n, chi)
    sr = symmetric_root(n, chi)
    bb = sr.beta * sr.beta
    if abs(t) >= sr.beta:
        raise ValueError(f"need |t| < beta = {sr.beta}: got t={t}")
    return (sr.p * t * t / (bb - t * t)) * (sr.alpha * (bb - t * t) - sr.p * bb)


def endpoint_margin(n: int, chi: int) -> float:
    """alpha (beta^2 - q^2) - p beta^2, the margin at the extreme offset t = q.

    Cross-checked against the expanded form 2 mu^3 + 4 (1+p) mu q + 3 p q^2;
    both must agree to 1e-9 relative and be strictly positive.
    """
    _require_range(n, chi)
    sr = symmetric_root(n, chi)
    p, q, mu = sr.p, sr.q, sr.mu
    direct = sr.alpha * (sr.beta * sr.beta - q * q) - p * sr.beta * sr.beta
    expanded = 2.0 * mu ** 3 + 4.0 * (1.0 + p) * mu * q + 3.0 * p * q * q
    if abs(direct - expanded) > 1e-9 * max(1.0, abs(direct)):
        raise ArithmeticError(
            f"margin forms disagree at n={n}, chi={chi}: {direct} vs {expanded}")
    if not direct > 0.0:
        raise ArithmeticError(f"margin not positive at n={n}, chi={chi}")
    return direct


def mirror_pair(params: ExtremalParams) -> ExtremalParams:
    """Swap the two join sides: (a, a0) -> (b, b0). Same graph, same quartic."""
    return ExtremalParams(n=params.n, chi=params.chi,
                          a=params.chi - params.a,
                          a0=params.n - params.chi - params.a0)


def canonical_pair(params: ExtremalParams) -> ExtremalParams:
    """Representative of {(a, a0), (b, b0)}: larger clique first, then smaller a0."""
    m = mirror_pair(params)
    if params.a != m.a:
        return params if params.a > m.a else m
    return params if params.a0 <= m.a0 else m


@dataclass(frozen=True)
class RootScan:
    """Feasible-pair scan result: minimizer(s) of the smallest negative root.

    ``ties`` lists every minimizing pair; ``classes`` collapses them modulo
    the side-swap symmetry (a, a0) <-> (b, b0), which maps a pair to the
    same graph and the identical quartic. ``best`` is the canonical
    representative of the first class.
    """

    best: ExtremalParams
    root: float
    ties: tuple[ExtremalParams, ...]
    classes: tuple[ExtremalParams, ...]

    @property
    def unique(self) -> bool:
        return len(self.classes) == 1


def min_root_pair(n: int, chi: int, tie_tol: float = 1e-9) -> RootScan:
    """Scan all feasible pairs for the minimum root; ties are reported, not hidden.

    The minimizing graph is expected to be the one at
    (ceil(chi/2), floor((n-chi)/2)); for odd parities that is a conjecture,
    so a genuine tie between distinct graphs or a different minimizer is a
    reportable finding rather than an internal error.
    """
    pairs = feasible_pairs(n, chi)
    roots = [smallest_negative_root(p) for p in pairs]
    best_val = min(roots)
    ties = tuple(p for p, r in zip(pairs, roots) if r <= best_val + tie_tol)
    classes = []
    for p in ties:
        rep = canonical_pair(p)
        if rep not in classes:
            classes.append(rep)
    classes.sort(key=lambda p: (p.a, p.a0))
    return RootScan(best=classes[0], root=best_val, ties=ties,
                    classes=tuple(classes))


def odd_parity_root_residual(n: int, chi: int) -> float:
    """Residual of the broken-symmetry quartic at the conjectured minimizer.

    For odd n and odd chi the pair (ceil(chi/2), (n-chi)/2) sits half a step
    off the symmetric point (t = 1/2, s = 0), and its least root z satisfies

        z^2 (z - q)^2 - (n z / 2 - p q)^2 + p (p - 2 z)/4 = 0.

    Returns the left-hand side at the bisected root (near zero up to the
    root tolerance amplified by the derivative).
    """
    _require_range(n, chi)
    if n % 2 == 0 or chi % 2 == 0:
        raise ValueError("both n and chi must be odd")
    params = ExtremalParams(n=n, chi=chi, a=(chi + 1) // 2, a0=(n - chi) // 2)
    z = smallest_negative_root(params)
    p = (n - chi) / 2.0
    q = chi / 2.0 - 1.0
    return (z * z * (z - q) ** 2
            - (0.5 * n * z - p * q) ** 2
            + 0.25 * p * (p - 2.0 * z))
