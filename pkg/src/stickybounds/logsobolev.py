"""Logarithmic Sobolev bounds for the mixture measure and boundary-trace constants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DimensionUnsupported, DomainError, InvalidRegime, MissingInput
from .geometry import DomainGeometry, _alpha, builtin_geometry
from .numerics import DEFAULT_TOL, Tolerance, integrate, minimize_scalar
from .poincare import EDGE, adapted_constants, compute_K_bb, compute_neg_laplace_bound, k_bb_formula


def bernoulli_factor(alpha) -> float:
    """(log a - log(1-a)) / (2a - 1): the two-point log-Sobolev constant kernel.

    Written as 2 atanh(x)/x with x = |2a - 1| so that a and 1 - a agree.
    """
    a = _alpha(alpha)
    x = abs(2 * a - 1)
    if x < 1e-5:
        x2 = x * x
        return 2.0 * (1.0 + x2 / 3.0 + x2 * x2 / 5.0)
    return 2.0 * math.atanh(x) / x


@dataclass(frozen=True)
class LsiInputs:
    L_int: Optional[float]
    L_bnd: Optional[float]
    L_bb: Optional[float]
    C_int: float
    C_bnd: float
    K1: float
    K2: float
    K_bb: float

    def require(self, *names: str) -> None:
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise MissingInput(f"log-Sobolev input(s) absent: {missing}")


def affine_coefficients(alpha, inp: LsiInputs) -> tuple[float, float, float, float, float, float]:
    """(a, b, c, d, e, theta) with  L_alpha <= inf_{s,t} max(a + s b + t c, d - s e - t theta)."""
    inp.require("L_int", "L_bnd", "L_bb")
    al = _alpha(alpha)
    beta = bernoulli_factor(al)
    a = inp.L_int + (1 - al) * beta * (inp.C_int + inp.K1)
    b = (1 - al) / al * inp.L_bb
    c = (1 - al) * beta * inp.K_bb
    d = inp.L_bnd + al * beta * (inp.C_bnd + inp.K2)
    e = inp.L_bnd
    theta = al * beta * inp.C_bnd
    return a, b, c, d, e, theta


def inf_max_affine(a, b, c, d, e, theta) -> float:
    """inf over s, t in [0, 1] of max(a + s b + t c, d - s e - t theta), all inputs >= 0.

    Case analysis: outside the two trivial cases the optimum sits on the line
    where both branches agree, at whichever end of its segment inside the box
    the increasing branch is smaller.
    """
    if a >= d:
        return a
    if d - e - theta >= a + b + c:
        return d - e - theta
    if b + e == 0:
        return a + c * (d - a) / (c + theta)
    if c + theta == 0:
        return a + b * (d - a) / (e + b)
    if b * (c + theta) >= c * (e + b):
        # objective along the equal line is nonincreasing in t: take t as large as possible
        if d - a - c - theta >= 0:
            return a + c + b * (d - a - c - theta) / (e + b)
        return a + c * (d - a) / (c + theta)
    if (d - a) / (e + b) <= 1:
        return a + b * (d - a) / (e + b)
    return a + b + c * (d - a - e - b) / (c + theta)


def minmax_closed_form(a, b, c, d, e, theta) -> float:
    """The one-line max/min rewriting of :func:`inf_max_affine`.

    Kept for comparison only: taking the min over all four edge candidates
    ignores whether a candidate lies inside the unit square, so this can
    undershoot the true infimum (e.g. a=0, b=1, c=2, d=1, e=1, theta=1 gives
    1/3 instead of 1/2).
    """
    return max(a, d - e - theta, min(
        a + c + b * (d - a - c - theta) / (e + b),
        a + c * (d - a) / (c + theta),
        a + b * (d - a) / (e + b),
        a + b + c * (d - a - e - b) / (c + theta),
    ))


def lsi_interpolation_bound(alpha, inp: LsiInputs) -> float:
    return inf_max_affine(*affine_coefficients(alpha, inp))


def lsi_no_interpolation_bound(alpha, inp: LsiInputs) -> float:
    inp.require("L_int", "L_bnd")
    al = _alpha(alpha)
    beta = bernoulli_factor(al)
    return max(inp.L_int + (1 - al) * beta * (inp.C_int + inp.K1),
               inp.L_bnd + al * beta * (inp.C_bnd + inp.K2))


def lsi_sticky_bound(alpha, L_int, L_bb, C_int, K_bb, K1) -> float:
    """Log-Sobolev bound without boundary diffusion."""
    if L_int is None or L_bb is None:
        raise MissingInput("lsi_sticky_bound needs L_int and L_bb")
    al = _alpha(alpha)
    return L_int + (1 - al) / al * L_bb + (1 - al) * bernoulli_factor(al) * (C_int + K_bb + K1)


def lsi_inputs(example: str) -> LsiInputs:
    """Inputs used for the disk log-Sobolev comparisons.

    Combines the curvature-based K1 with the disk-specific K_bb (optimal via
    the Steklov eigenvalue) and the literature values of L_Omega, L_boundary
    and L_{boundary,Omega} stored on the builtin geometry.
    """
    g = builtin_geometry(example)
    ad = adapted_constants(example)
    if example == "euclidean-disk":
        K1 = g.C_int / 4
    else:
        # curvature-based value written in closed form for the unit hyperbolic disk
        K1 = math.sinh(0.5) ** 2 / math.sinh(1.0) ** 2 * g.C_int
    return LsiInputs(L_int=g.L_int, L_bnd=g.L_bnd, L_bb=g.L_bb_known, C_int=g.C_int,
                     C_bnd=g.C_bnd, K1=K1, K2=0.0, K_bb=ad.K_bb)


# -- boundary trace inequalities ------------------------------------------------

def trace_norm_bound(g: DomainGeometry) -> float:
    """Upper bound on the norm of the trace map W^{1,2}(Omega) -> L^2(boundary)."""
    return math.sqrt(g.ratio * (1.0 + compute_neg_laplace_bound(g)))


def alt_K1_from_trace(g: DomainGeometry) -> float:
    """Mixed-term constant from the trace inequality; same value as K_bb."""
    return compute_K_bb(g)


def p_range(d: int) -> tuple[float, float]:
    if d < 3:
        raise DimensionUnsupported(f"Sobolev trace bounds need d >= 3, got d={d}")
    return 2.0, (2.0 * d - 2.0) / (d - 2.0)


def sobolev_trace_coefficient(p: float, ratio: float, neg_laplace: float,
                              sobolev: Callable[[float], float], grad_rho_sup: float = 1.0) -> float:
    """Constant C~_{p,2} in (int_bdry |f|^p)^{2/p} <= C~_{p,2} int_Omega |grad f|^2 for centred f."""
    q = 2.0 * (p - 1.0)
    return ((ratio * grad_rho_sup * p) ** (2.0 / p) * sobolev(q) ** (q / p)
            + (ratio * neg_laplace) ** (2.0 / p) * sobolev(p) ** 2)


def sobolev_trace_constant(g: DomainGeometry, p: float, neg_laplace: Optional[float] = None) -> float:
    lo, hi = p_range(g.d)
    if not lo <= p <= hi + 1e-12:
        raise DomainError(f"p must lie in [{lo}, {hi:g}] for d={g.d}, got {p}")
    neg = compute_neg_laplace_bound(g) if neg_laplace is None else neg_laplace
    return sobolev_trace_coefficient(p, g.ratio, neg, g.sobolev_constant)


def entropy_trace_formula(d: int, ratio: float, C_int: float, neg_laplace: float,
                          sobolev: Callable[[float], float], n_seeds: int = 128,
                          tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """(L_{boundary,Omega}, optimal p) from Rothaus' lemma and the Sobolev trace bound."""
    lo, hi = p_range(d)

    def objective(p):
        return p / (p - 2.0) * sobolev_trace_coefficient(p, ratio, neg_laplace, sobolev) / math.e

    # p/(p-2) blows up at p = 2, so clamping the open end cannot cut off the infimum
    p_star, v = minimize_scalar(objective, (lo + EDGE, hi), tol, n_seeds=n_seeds)
    return v + 2.0 * k_bb_formula(ratio, C_int, neg_laplace), p_star


def entropy_trace_constant(g: DomainGeometry, neg_laplace: Optional[float] = None) -> float:
    _, hi = p_range(g.d)
    # fail early on a table that cannot cover 2(p-1) at the top of the range
    g.sobolev_constant(2.0 * (hi - 1.0))
    neg = compute_neg_laplace_bound(g) if neg_laplace is None else neg_laplace
    return entropy_trace_formula(g.d, g.ratio, g.C_int, neg, g.sobolev_constant)[0]


# -- semigroup approach ---------------------------------------------------------

@dataclass(frozen=True)
class SemigroupInputs:
    """phi_sup = |phi|_inf, K_phi, the constant c in |P_t|_{1->inf} <= 1 + c t^{-d/2},
    |grad rho|_inf and |(Laplacian rho)^+|_inf."""

    phi_sup: float
    K_phi: float
    heat_c: float
    grad_rho_sup: float = 1.0
    pos_laplace_rho: float = 0.0

    def __post_init__(self):
        if self.phi_sup < 1:
            raise DomainError("phi must satisfy phi >= 1, so phi_sup >= 1")
        if self.heat_c < 0 or self.pos_laplace_rho < 0:
            raise DomainError("heat_c and pos_laplace_rho must be nonnegative")

    @classmethod
    def positive_curvature(cls, K: float, heat_c: float, grad_rho_sup: float = 1.0,
                           pos_laplace_rho: float = 0.0) -> "SemigroupInputs":
        """Convex boundary with Ric >= K > 0: phi = 1 is admissible and K_phi = K."""
        return cls(1.0, K, heat_c, grad_rho_sup, pos_laplace_rho)


def _log_heat_norm(t, c: float, d: int):
    # log(1 + c t^{-d/2}) without overflow as t -> 0
    if c == 0:
        return 0.0
    return float(np.logaddexp(0.0, math.log(c) - 0.5 * d * math.log(t)))


def semigroup_L_bb_formula(ratio: float, d: int, L_int: Optional[float], C_int: Optional[float],
                           s: SemigroupInputs, regime: str, tol: Tolerance = DEFAULT_TOL) -> float:
    """Upper bound on L'_{boundary,Omega} from the Neumann heat semigroup."""
    if regime not in ("positive-curvature", "general"):
        raise InvalidRegime(f"unknown regime {regime!r}")
    if s.pos_laplace_rho > 0 and L_int is None:
        raise MissingInput("L_int is needed when |(Laplacian rho)^+| > 0")
    K, c = s.K_phi, s.heat_c

    def head(t):
        return math.exp(-2 * K * t) * (1.0 + abs(_log_heat_norm(t, c, d)))

    if regime == "positive-curvature":
        if K <= 0:
            raise InvalidRegime("positive-curvature regime needs K_phi > 0")
        I = integrate(head, 0.0, 1.0, tol) + integrate(head, 1.0, math.inf, tol)
    else:
        if C_int is None:
            raise MissingInput("general regime needs C_int")
        # |P_1|_{1->inf} <= 1 + c; the e^{-2 K_phi} factor carries no t
        tail = integrate(lambda t: math.exp(-2 * K) * math.exp(-(t - 1) / C_int) * (1.0 + c),
                         1.0, math.inf, tol)
        I = integrate(head, 0.0, 1.0, tol) + tail
    first = (L_int or 0.0) * s.pos_laplace_rho
    return ratio * (first + math.sqrt(32.0) * s.grad_rho_sup * s.phi_sup ** 3 * math.sqrt(I))


def semigroup_L_bb_bound(g: DomainGeometry, s: SemigroupInputs, regime: str) -> float:
    return semigroup_L_bb_formula(g.ratio, g.d, g.L_int, g.C_int, s, regime)


def lsi_semigroup_bound(alpha, L_int: float, L_bb_prime: float) -> float:
    """L_alpha <= (alpha L_Omega + (1 - alpha) L') / alpha."""
    al = _alpha(alpha)
    return (al * L_int + (1 - al) * L_bb_prime) / al
