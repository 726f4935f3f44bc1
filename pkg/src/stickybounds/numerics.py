"""Scalar numerics kernel: roots, 1-D minimisation, quadrature, IVPs, Bessel J.

Thin, deterministic wrappers around SciPy that translate failures into the
package's exception types and add the coarse pre-scan needed for global
infima over objectives that are smooth but not known to be unimodal.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate as _integrate
from scipy import optimize as _optimize
from scipy import special as _special
from scipy.optimize import elementwise as _elementwise

from .errors import DomainError, NoConvergence, NoSignChange, StepUnderflow

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and self.lo < self.hi) or math.isnan(self.hi):
            raise DomainError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.hi)


@dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-10
    rel: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if self.abs < 0 or self.rel < 0 or self.abs + self.rel <= 0:
            raise ValueError("tolerance needs abs + rel > 0 with both nonnegative")
        if self.max_iter < 1:
            raise ValueError("max_iter must be positive")


DEFAULT_TOL = Tolerance()


def _as_interval(bracket) -> Interval:
    if isinstance(bracket, Interval):
        return bracket
    lo, hi = bracket
    return Interval(float(lo), float(hi))


def find_root(f: Callable[[float], float], bracket, tol: Tolerance = DEFAULT_TOL) -> float:
    """Root of ``f`` inside a sign-changing bracket (Brent: bisection + secant/IQI)."""
    iv = _as_interval(bracket)
    flo, fhi = f(iv.lo), f(iv.hi)
    if flo == 0.0:
        return iv.lo
    if fhi == 0.0:
        return iv.hi
    if flo * fhi > 0:
        raise NoSignChange(f"f({iv.lo})={flo:g} and f({iv.hi})={fhi:g} have the same sign")
    rtol = max(tol.rel, 4 * _EPS)
    try:
        x, res = _optimize.brentq(
            f, iv.lo, iv.hi, xtol=max(tol.abs, 1e-300), rtol=rtol,
            maxiter=tol.max_iter, full_output=True, disp=False,
        )
    except RuntimeError as exc:  # pragma: no cover - brentq raises only with disp=True
        raise NoConvergence(str(exc)) from exc
    if not res.converged:
        raise NoConvergence(f"root search stopped after {res.iterations} iterations")
    return float(x)


def find_roots(f: Callable, lo, hi, tol: Tolerance = DEFAULT_TOL, args: tuple = ()) -> np.ndarray:
    """Elementwise roots of ``f(x, *args)`` for arrays of sign-changing brackets.

    ``f`` is called on arrays and must act elementwise; ``args`` broadcast
    against the brackets. Uses Chandrupatla's bracketing method.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if lo.size == 0:
        return lo.copy()
    res = _elementwise.find_root(
        f, (lo, hi), args=args,
        tolerances={"xatol": max(tol.abs, 1e-300), "xrtol": max(tol.rel, 4 * _EPS), "fatol": 0.0, "frtol": 0.0},
        maxiter=tol.max_iter,
    )
    status = np.asarray(res.status)
    if np.any(status == -1):
        raise NoSignChange("at least one bracket has no sign change")
    if np.any(status < 0):
        raise NoConvergence(f"elementwise root search failed (status {sorted(set(status[status < 0].tolist()))})")
    return np.asarray(res.x, dtype=float)


def minimize_scalar(
    f: Callable[[float], float],
    rng,
    tol: Tolerance = DEFAULT_TOL,
    n_seeds: int = 64,
    vectorized: bool = False,
) -> tuple[float, float]:
    """Global-ish minimum of ``f`` on a closed interval.

    ``n_seeds`` equispaced points (endpoints included) are evaluated first; the
    best seed's neighbouring cell is then refined with bounded Brent. Endpoint
    minima are returned exactly. With ``vectorized=True`` the seed scan calls
    ``f`` once on an array.
    """
    iv = _as_interval(rng)
    if not iv.bounded:
        raise DomainError("minimize_scalar needs a bounded range")
    n = max(int(n_seeds), 3)
    xs = np.linspace(iv.lo, iv.hi, n)
    if vectorized:
        ys = np.asarray(f(xs), dtype=float)
    else:
        ys = np.array([f(float(x)) for x in xs])
    if np.all(np.isnan(ys)):
        raise NoConvergence("objective is NaN on every seed point")
    ys = np.where(np.isnan(ys), np.inf, ys)
    i = int(np.argmin(ys))
    best_x, best_y = float(xs[i]), float(ys[i])

    a, b = float(xs[max(i - 1, 0)]), float(xs[min(i + 1, n - 1)])
    xatol = max(tol.abs, tol.rel * max(abs(a), abs(b)), 1e-15)

    def scalar(x):
        return float(f(np.array([x]))[0]) if vectorized else float(f(x))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = _optimize.minimize_scalar(
            scalar, bounds=(a, b), method="bounded",
            options={"xatol": xatol, "maxiter": tol.max_iter},
        )
    if res.success and res.fun < best_y:
        best_x, best_y = float(res.x), float(res.fun)
    elif not res.success and not math.isfinite(best_y):
        raise NoConvergence(str(res.message))
    return best_x, best_y


def integrate(f: Callable[[float], float], a: float, b: float,
              tol: Tolerance = DEFAULT_TOL, points: Sequence[float] | None = None) -> float:
    """Adaptive Gauss-Kronrod quadrature of ``f`` over ``[a, b]``."""
    if b < a:
        raise DomainError(f"integrate needs a <= b, got [{a}, {b}]")
    if a == b:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", _integrate.IntegrationWarning)
        try:
            val, _err = _integrate.quad(
                f, a, b, epsabs=tol.abs, epsrel=max(tol.rel, 50 * _EPS),
                limit=tol.max_iter, points=points,
            )
        except _integrate.IntegrationWarning as exc:
            raise NoConvergence(str(exc).strip()) from exc
    return float(val)


def ode_solve(rhs: Callable, t0: float, t1: float, y0, tol: Tolerance = DEFAULT_TOL,
              args: tuple = ()) -> np.ndarray:
    """State at ``t1`` of ``y' = rhs(t, y, *args)`` (adaptive DOP853)."""
    y0 = np.atleast_1d(np.asarray(y0, dtype=float))
    if t0 == t1:
        return y0.copy()
    sol = _integrate.solve_ivp(
        rhs, (t0, t1), y0, method="DOP853", rtol=max(tol.rel, 100 * _EPS),
        atol=tol.abs, args=args,
    )
    if sol.status != 0:
        raise StepUnderflow(f"integration failed at t={sol.t[-1]:.6g}: {sol.message}")
    return sol.y[:, -1]


def bessel_j(m: int, x):
    """J_m(x) for integer m >= 0 and x >= 0 (array-aware)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("bessel_j is defined here for x >= 0")
    out = _special.jv(m, x)
    return float(out) if out.ndim == 0 else out


def bessel_j_deriv(m: int, x):
    """J_m'(x) = (J_{m-1}(x) - J_{m+1}(x)) / 2, with J_{-1} = -J_1."""
    x = np.asarray(x, dtype=float)
    out = 0.5 * (_special.jv(m - 1, x) - _special.jv(m + 1, x))
    return float(out) if out.ndim == 0 else out


def bessel_j_second(m: int, x):
    """J_m''(x) from the Bessel equation x^2 J'' + x J' + (x^2 - m^2) J = 0."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        ode = -bessel_j_deriv(m, x) / x - (1.0 - (m * m) / (x * x)) * _special.jv(m, x)
    # x = 0 is a regular singular point; use the three-term form there
    at0 = 0.25 * (_special.jv(m - 2, x) - 2 * _special.jv(m, x) + _special.jv(m + 2, x))
    out = np.where(x == 0, at0, ode)
    return float(out) if out.ndim == 0 else out
