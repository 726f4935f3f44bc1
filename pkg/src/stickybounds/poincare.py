"""Poincaré-side constants and bounds for the sticky-reflecting diffusion.

The mixed term, boundary-variance constant and Steklov bound are built from
test functions of the form  int_0^{dist} (1 - s/t)^+ ds  whose Laplacian is
controlled by the comparison functions of :mod:`stickybounds.comparison`.
All open-interval infima are evaluated on intervals clamped ``EDGE`` inside
the open range, so every reported value is an upper bound of the infimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .comparison import ComparisonFn, first_zero, log_derivative
from .errors import DomainError
from .geometry import DomainGeometry, _alpha, builtin_geometry
from .numerics import DEFAULT_TOL, Tolerance, integrate, minimize_scalar

EDGE = 1e-6
T_CAP = 1e8  # search cap for t1 when the comparison function never vanishes


@dataclass(frozen=True)
class BoundSet:
    K1: float
    K2: float
    K_bb: float
    neg_laplace: float
    steklov_lb: float
    provenance: str = "general-curvature"

    def __post_init__(self):
        for key in ("K1", "K2", "K_bb", "neg_laplace", "steklov_lb"):
            v = getattr(self, key)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{key} must be finite and nonnegative, got {v}")


@dataclass(frozen=True)
class ConstantSet:
    """Inputs of the interpolation bounds: C_Omega, C_boundary, K1, K2, K_bb."""

    label: str
    C_int: float
    C_bnd: float
    K1: float
    K2: float
    K_bb: float


def eps_inf(A: float, B: float) -> float:
    """inf over eps > 0 of (1+eps) A + (1+1/eps) B, attained at eps = sqrt(B/A)."""
    if A < 0 or B < 0:
        raise DomainError("eps_inf needs A, B >= 0")
    return (math.sqrt(A) + math.sqrt(B)) ** 2


# -- the test function phi (mixed-term constant K1) ---------------------------

def _t0_range(g: DomainGeometry) -> float:
    return min(first_zero(g.h2), g.sphere_area.reach)


def _check_t0(g: DomainGeometry, t0: float) -> None:
    top = _t0_range(g)
    if not 0 < t0 < top:
        raise DomainError(f"t0 must lie in (0, {top:.6g}), got {t0}")


def grad_phi_sq(g: DomainGeometry, t0: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """|grad phi|_2^2 = 1/|Omega| int_0^t0 A(t) (1 - t/t0)^2 dt."""
    _check_t0(g, t0)
    A = g.sphere_area
    # t = t0 u keeps the quadrature well scaled for tiny t0
    return t0 / g.vol_interior * integrate(lambda u: A(t0 * u) * (1.0 - u) ** 2, 0.0, 1.0, tol)


def _laplace_integrand(g: DomainGeometry, t0: float):
    A, h1, h2, dm1 = g.sphere_area, g.h1, g.h2, g.d - 1

    def f(u):
        t = t0 * u
        lower = dm1 * log_derivative(h2, t) * (1.0 - u) - 1.0 / t0
        upper = dm1 * log_derivative(h1, t) * (1.0 - u) - 1.0 / t0
        return A(t) * (max(-lower, 0.0) ** 2 + max(upper, 0.0) ** 2)

    return f


def laplace_phi_sq(g: DomainGeometry, t0: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Upper bound on |Laplacian phi|_2^2 from the two Laplacian comparisons."""
    _check_t0(g, t0)
    return t0 / g.vol_interior * integrate(_laplace_integrand(g, t0), 0.0, 1.0, tol)


def k1_search(g: DomainGeometry, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """(K1, optimal t0) for the general-curvature mixed-term constant."""
    return _k1_search_cached(g, tol)


@lru_cache(maxsize=64)
def _k1_search_cached(g: DomainGeometry, tol: Tolerance) -> tuple[float, float]:
    top = _t0_range(g)

    def objective(t0):
        return eps_inf(grad_phi_sq(g, t0, tol), g.C_int * laplace_phi_sq(g, t0, tol))

    t0, val = minimize_scalar(objective, (EDGE, top - EDGE), tol)
    return g.ratio ** 2 * val, t0


def compute_K1(g: DomainGeometry, tol: Tolerance = DEFAULT_TOL) -> float:
    return k1_search(g, tol)[0]


# -- the test function rho (boundary-variance constant K_bb) ------------------

def neg_part_sup_raw(d: int, h2: ComparisonFn, t1: float, n_seeds: int = 256) -> float:
    """sup over t in (0, t1) of ((d-1) h2'/h2(t) (1 - t/t1) - 1/t1)^-."""
    if not 0 < t1 < first_zero(h2):
        raise DomainError(f"t1 must lie in (0, {first_zero(h2):.6g}), got {t1}")

    def minus_neg(t):
        e = (d - 1) * np.asarray(log_derivative(h2, t)) * (1.0 - np.asarray(t) / t1) - 1.0 / t1
        return -np.maximum(-e, 0.0)

    _, v = minimize_scalar(minus_neg, (0.0, t1), n_seeds=n_seeds, vectorized=True)
    return -v


def neg_part_sup(g: DomainGeometry, t1: float) -> float:
    return neg_part_sup_raw(g.d, g.h2, t1)


@lru_cache(maxsize=256)
def neg_laplace_search(d: int, h2: ComparisonFn, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """(inf over t1 of neg_part_sup, optimal t1)."""
    z = first_zero(h2)
    if math.isfinite(z):
        t1, v = minimize_scalar(lambda t: neg_part_sup_raw(d, h2, t), (EDGE, z - EDGE), tol)
        return v, t1
    u, v = minimize_scalar(lambda u: neg_part_sup_raw(d, h2, math.exp(u)),
                           (math.log(EDGE), math.log(T_CAP)), tol)
    return v, math.exp(u)


def compute_neg_laplace_bound(g: DomainGeometry) -> float:
    """Bound on |(Laplacian rho)^-|_inf, optimised over the cut-off t1."""
    return neg_laplace_search(g.d, g.h2)[0]


def k_bb_formula(ratio: float, C_int: float, neg_laplace: float, grad_rho_sup: float = 1.0) -> float:
    return ratio * (2 * grad_rho_sup * math.sqrt(C_int) + neg_laplace * C_int)


def compute_K_bb(g: DomainGeometry) -> float:
    return k_bb_formula(g.ratio, g.C_int, compute_neg_laplace_bound(g))


def steklov_lower_bound(g: DomainGeometry) -> float:
    """Lower bound on the first nontrivial Steklov eigenvalue."""
    return 1.0 / (2 * math.sqrt(g.C_int) + g.C_int * compute_neg_laplace_bound(g))


def general_bounds(g: DomainGeometry) -> BoundSet:
    neg = compute_neg_laplace_bound(g)
    return BoundSet(
        K1=compute_K1(g), K2=0.0, K_bb=k_bb_formula(g.ratio, g.C_int, neg),
        neg_laplace=neg, steklov_lb=1.0 / (2 * math.sqrt(g.C_int) + g.C_int * neg),
    )


# -- the three Poincaré bounds -------------------------------------------------

def poincare_interpolation_bound(alpha, C_int, C_bnd, K1, K2, K_bb) -> float:
    a = _alpha(alpha)
    mixed = ((1 - a) * K_bb * C_bnd + a * C_int * C_bnd + a * (1 - a) * (K_bb * K2 + C_bnd * K1)) / (
        (1 - a) * K_bb + a * C_bnd
    )
    return max(C_int + (1 - a) * K1, a * K2, mixed)


def poincare_trivial_bound(alpha, C_int, C_bnd, K1, K2) -> float:
    a = _alpha(alpha)
    return max(C_int + (1 - a) * K1, C_bnd + a * K2)


def poincare_sticky_bound(alpha, C_int, K_bb, K1) -> float:
    """Bound for pure sticky reflection (no boundary diffusion)."""
    a = _alpha(alpha)
    return C_int + (1 - a) / a * K_bb + (1 - a) * K1


def bounds_for(cs: ConstantSet, alpha) -> dict:
    return {
        "interp": poincare_interpolation_bound(alpha, cs.C_int, cs.C_bnd, cs.K1, cs.K2, cs.K_bb),
        "nointerp": poincare_trivial_bound(alpha, cs.C_int, cs.C_bnd, cs.K1, cs.K2),
        "sticky": poincare_sticky_bound(alpha, cs.C_int, cs.K_bb, cs.K1),
    }


# -- constant sets for the two disks -------------------------------------------

def hyperbolic_adapted_K1(tol: Tolerance = DEFAULT_TOL) -> float:
    """max over s in [0,1] of (sinh s - (s-1) cosh s - 1) / sinh s."""
    def neg(s):
        return -(math.sinh(s) - (s - 1) * math.cosh(s) - 1) / math.sinh(s)

    _, v = minimize_scalar(neg, (EDGE, 1.0), tol)
    return -v


def hyperbolic_steklov_exact() -> float:
    return 1 / math.tanh(1.0) - math.tanh(0.5)


def adapted_constants(example: str) -> ConstantSet:
    """Constants computed specifically for the disk (not from curvature bounds)."""
    g = builtin_geometry(example)
    if example == "euclidean-disk":
        return ConstantSet("adapted", g.C_int, g.C_bnd, K1=3 / 16, K2=0.0, K_bb=0.5)
    # K_bb = |Omega|/|boundary| / sigma with the exact Steklov eigenvalue
    return ConstantSet("adapted", g.C_int, g.C_bnd, K1=hyperbolic_adapted_K1(), K2=0.0,
                       K_bb=g.ratio / hyperbolic_steklov_exact())


def general_constants(g: DomainGeometry) -> ConstantSet:
    b = general_bounds(g)
    return ConstantSet("general", g.C_int, g.C_bnd, K1=b.K1, K2=b.K2, K_bb=b.K_bb)
