"""Exact spectral gaps for the Euclidean and hyperbolic unit disks.

Separating variables reduces every boundary problem to a one-dimensional
equation in the spectral variable. On the Euclidean disk the radial part is
J_m(sqrt(lam) r); on the hyperbolic disk it is the solution T of

    T'' + coth(t) T' + (lam - l^2 / sinh(t)^2) T = 0,    T regular at 0,

integrated numerically. The boundary conditions (with gamma the mixture weight
of the normal derivative) become:

    wentzell   (lam - q) T(1) = gamma T'(1)      q = l^2 / sinh(1)^2  (m^2 on R^2)
    sticky      lam      T(1) = gamma T'(1)
    neumann              T'(1) = 0

For the sticky case the full Laplacian on the boundary was simplified with
the radial equation, which removes T'' and the angular term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, NoConvergence, NoRootInRange
from .geometry import _alpha
from .numerics import Tolerance, bessel_j, bessel_j_deriv, find_root, find_roots, ode_solve

EXAMPLES = ("euclidean-disk", "hyperbolic-disk")
FAMILIES = ("wentzell", "sticky")

EPS0 = 1e-6          # start of the radial integration
ODE_RTOL = 1e-12
LAMBDA_MAX = 200.0   # hyperbolic lambda scan
LAMBDA_STEP = 0.05
X_MAX = 30.0         # Euclidean sqrt(lambda) scan
X_STEP = 0.05
RESIDUAL_TOL = 1e-8

_SINH1 = math.sinh(1.0)
_KAPPA = _SINH1 / (math.cosh(1.0) - 1.0)   # |boundary| / |Omega| for the hyperbolic disk
_ROOT_TOL = Tolerance(abs=1e-14, rel=1e-14, max_iter=200)


def _example(name: str) -> str:
    aliases = {"euclidean": "euclidean-disk", "hyperbolic": "hyperbolic-disk"}
    name = aliases.get(name, name)
    if name not in EXAMPLES:
        raise DomainError(f"unknown example {name!r}; expected one of {EXAMPLES}")
    return name


@dataclass(frozen=True)
class Condition:
    kind: str
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.kind not in ("wentzell", "sticky", "neumann", "steklov"):
            raise DomainError(f"unknown boundary condition {self.kind!r}")
        if self.kind in FAMILIES:
            object.__setattr__(self, "alpha", _alpha(self.alpha))
        elif self.alpha is not None:
            raise DomainError(f"{self.kind} takes no alpha")

    @classmethod
    def wentzell(cls, alpha) -> "Condition":
        return cls("wentzell", alpha)

    @classmethod
    def sticky(cls, alpha) -> "Condition":
        return cls("sticky", alpha)

    @classmethod
    def neumann(cls) -> "Condition":
        return cls("neumann")

    @classmethod
    def steklov(cls) -> "Condition":
        return cls("steklov")


@dataclass(frozen=True)
class SpectralProblem:
    example: str
    condition: Condition
    mode: int

    def __post_init__(self):
        object.__setattr__(self, "example", _example(self.example))
        if self.mode < 0 or int(self.mode) != self.mode:
            raise DomainError("mode must be a nonnegative integer")

    def eigenvalue(self, branch: int = 0) -> float:
        if self.example == "euclidean-disk":
            return euclid_mode_eigenvalues(self.condition, self.mode, branch + 1)[branch]
        return hyperbolic_mode_eigenvalues(self.condition, self.mode, branch + 1)[branch]


@dataclass(frozen=True)
class CurveSeries:
    alphas: tuple
    values: tuple
    label: str

    def __post_init__(self):
        a = np.asarray(self.alphas, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if a.shape != v.shape or a.ndim != 1:
            raise ValueError("alphas and values must be 1-D and of equal length")
        if np.any(np.diff(a) <= 0):
            raise ValueError("alphas must be strictly increasing")
        if not np.all(np.isfinite(v)):
            raise ValueError("curve values must be finite")
        object.__setattr__(self, "alphas", tuple(float(x) for x in a))
        object.__setattr__(self, "values", tuple(float(x) for x in v))

    def __len__(self) -> int:
        return len(self.alphas)

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.array(self.alphas), np.array(self.values)


# -- residuals ----------------------------------------------------------------
# Each returns (residual, scale); residual/scale is the normalised residual.
# Family conditions are multiplied by (1 - alpha) so alpha -> 1 stays finite.

def _euclid_terms(kind, x, m, alpha, J, dJ):
    if kind == "neumann":
        return dJ, np.abs(dJ) + np.abs(J)
    x2 = x * x
    inner = x2 - m * m if kind == "wentzell" else x2
    u = (1 - alpha) * inner * J
    v = 2 * alpha * x * dJ
    return u - v, np.abs(u) + np.abs(v)


def _hyper_terms(kind, lam, l, alpha, T, P):
    if kind == "neumann":
        return P, np.abs(P) + np.abs(T)
    inner = lam - l * l / _SINH1 ** 2 if kind == "wentzell" else lam
    u = (1 - alpha) * inner * T
    v = alpha * _KAPPA * P
    return u - v, np.abs(u) + np.abs(v)


def _normalised(res, scale):
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(scale > 0, res / np.where(scale > 0, scale, 1.0), 0.0)


# -- Euclidean disk -------------------------------------------------------------

def _x_grid(x_max: float) -> np.ndarray:
    return np.concatenate([[1e-4], np.arange(X_STEP, x_max + X_STEP / 2, X_STEP)])


def _euclid_residual(kind, m, alpha):
    def f(x, *args):
        a = args[0] if args else alpha
        x = np.asarray(x, dtype=float)
        return _normalised(*_euclid_terms(kind, x, m, a, bessel_j(m, x), bessel_j_deriv(m, x)))
    return f


def euclid_mode_eigenvalues(condition: Condition, m: int, branches: int = 1, x_max: float = X_MAX) -> list:
    """First ``branches`` positive eigenvalues of angular mode ``m`` on the Euclidean disk."""
    if m < 0:
        raise DomainError("mode must be nonnegative")
    if condition.kind == "steklov":
        # harmonic extensions r^m cos(m theta) have normal derivative m
        return [float(m)]
    f = _euclid_residual(condition.kind, m, condition.alpha)
    xs = _x_grid(x_max)
    fx = f(xs)
    idx = np.nonzero(fx[:-1] * fx[1:] <= 0)[0]
    if len(idx) < branches:
        raise NoRootInRange(f"mode {m}: fewer than {branches} roots with sqrt(lambda) <= {x_max}")
    out = []
    for i in idx[:branches]:
        x = find_root(lambda t: float(f(t)), (xs[i], xs[i + 1]), _ROOT_TOL)
        out.append(x * x)
    return out


def euclid_mode_eigenvalue(condition: Condition, m: int, x_max: float = X_MAX) -> float:
    return euclid_mode_eigenvalues(condition, m, 1, x_max)[0]


def euclid_residual(condition: Condition, m: int, lam: float) -> float:
    """Normalised boundary residual at lambda (0 at an eigenvalue)."""
    return float(_euclid_residual(condition.kind, m, condition.alpha)(math.sqrt(lam)))


# -- hyperbolic disk --------------------------------------------------------------

def _radial_batch(lams: np.ndarray, l: int, rtol: float) -> tuple[np.ndarray, np.ndarray]:
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    n = lams.size
    ll = float(l * l)

    def rhs(t, y):
        T, P = y[:n], y[n:]
        return np.concatenate([P, -P / math.tanh(t) - (lams - ll / math.sinh(t) ** 2) * T])

    if l == 0:
        y0 = np.concatenate([np.ones(n), -lams * EPS0 / 2])
    else:
        # T ~ t^l near 0, rescaled by EPS0^-l so large l does not underflow
        y0 = np.concatenate([np.ones(n), np.full(n, l / EPS0)])
    y = ode_solve(rhs, EPS0, 1.0, y0, Tolerance(abs=1e-300, rel=rtol))
    return y[:n], y[n:]


def hyperbolic_radial_solve(lam: float, l: int, rtol: float = ODE_RTOL) -> tuple[float, float]:
    """(T(1), T'(1)) for the regular radial solution, up to a positive factor."""
    if l < 0:
        raise DomainError("mode must be nonnegative")
    T, P = _radial_batch(np.array([lam]), l, rtol)
    return float(T[0]), float(P[0])


def _lambda_grid(lambda_max: float) -> np.ndarray:
    return np.concatenate([[1e-8], np.arange(LAMBDA_STEP, lambda_max + LAMBDA_STEP / 2, LAMBDA_STEP)])


@lru_cache(maxsize=128)
def _hyper_table(l: int, lambda_max: float, rtol: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lams = _lambda_grid(lambda_max)
    T, P = _radial_batch(lams, l, rtol)
    return lams, T, P


def _hyper_residual(kind, l, alpha, rtol):
    def f(lam, *args):
        a = args[0] if args else alpha
        lam = np.asarray(lam, dtype=float)
        T, P = _radial_batch(lam.ravel(), l, rtol)
        return _normalised(*_hyper_terms(kind, lam.ravel(), l, a, T, P)).reshape(lam.shape)
    return f


def hyperbolic_steklov_eigenvalue(l: int, rtol: float = ODE_RTOL) -> float:
    """sigma_l = T'(1)/T(1) for the harmonic (lambda = 0) radial solution."""
    T, P = hyperbolic_radial_solve(0.0, l, rtol)
    return P / T


def hyperbolic_mode_eigenvalues(condition: Condition, l: int, branches: int = 1,
                                lambda_max: float = LAMBDA_MAX, rtol: float = ODE_RTOL) -> list:
    if l < 0:
        raise DomainError("mode must be nonnegative")
    if condition.kind == "steklov":
        return [hyperbolic_steklov_eigenvalue(l, rtol)]
    lams, T, P = _hyper_table(l, float(lambda_max), rtol)
    r = _normalised(*_hyper_terms(condition.kind, lams, l, condition.alpha, T, P))
    idx = np.nonzero(r[:-1] * r[1:] <= 0)[0]
    if len(idx) < branches:
        raise NoRootInRange(f"mode {l}: fewer than {branches} roots with lambda <= {lambda_max}")
    f = _hyper_residual(condition.kind, l, condition.alpha, rtol)
    return [find_root(lambda x: float(f(np.array([x]))[0]), (lams[i], lams[i + 1]), _ROOT_TOL)
            for i in idx[:branches]]


def hyperbolic_mode_eigenvalue(condition: Condition, l: int, lambda_max: float = LAMBDA_MAX,
                               rtol: float = ODE_RTOL) -> float:
    return hyperbolic_mode_eigenvalues(condition, l, 1, lambda_max, rtol)[0]


def hyperbolic_residual(condition: Condition, l: int, lam: float, rtol: float = ODE_RTOL) -> float:
    return float(_hyper_residual(condition.kind, l, condition.alpha, rtol)(np.array([lam]))[0])


def mode_eigenvalue(example: str, condition: Condition, mode: int) -> float:
    return SpectralProblem(example, condition, mode).eigenvalue()


def first_bracket(example: str, condition: Condition, mode: int) -> tuple[float, float]:
    """Scan interval (in lambda) holding the first eigenvalue of ``mode``."""
    example = _example(example)
    if example == "euclidean-disk":
        grid = _x_grid(X_MAX)
        r = _euclid_residual(condition.kind, mode, condition.alpha)(grid)
    else:
        grid, T, P = _hyper_table(mode, LAMBDA_MAX, ODE_RTOL)
        r = _normalised(*_hyper_terms(condition.kind, grid, mode, condition.alpha, T, P))
    idx = np.nonzero(r[:-1] * r[1:] <= 0)[0]
    if idx.size == 0:
        raise NoRootInRange(f"mode {mode}: no eigenvalue below the scan limit")
    lo, hi = grid[idx[0]], grid[idx[0] + 1]
    return (lo * lo, hi * hi) if example == "euclidean-disk" else (lo, hi)


def neumann_gap(example: str, mode_max: int = 8) -> tuple[float, int]:
    """(smallest positive Neumann eigenvalue, its angular mode)."""
    cond = Condition.neumann()
    brackets = [first_bracket(example, cond, m) for m in range(mode_max + 1)]
    cap = min(hi for _, hi in brackets)
    # only modes whose bracket starts below every upper end can hold the minimum
    vals = {m: mode_eigenvalue(example, cond, m) for m, (lo, _) in enumerate(brackets) if lo < cap}
    m = min(vals, key=vals.get)
    return vals[m], m


# -- curves ---------------------------------------------------------------------------

def _first_brackets(r: np.ndarray, branch_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Per row of r: index of the first sign change among the first branch_max, and a found-flag.

    Later branches of the same mode lie above the first, so only the first can
    realise the minimum; branch_max only bounds how many are required to exist.
    """
    change = r[:, :-1] * r[:, 1:] <= 0
    found = change.sum(axis=1) >= 1
    first = np.argmax(change, axis=1)
    return first, found


def _curve_lambdas(example: str, family: str, alphas: np.ndarray, mode_max: int, branch_max: int,
                   lambda_max: float, rtol: float) -> np.ndarray:
    n = alphas.size
    A = alphas[:, None]
    lo = np.full((mode_max + 1, n), np.inf)
    hi = np.full((mode_max + 1, n), np.inf)
    solvers = []
    for m in range(mode_max + 1):
        if example == "euclidean-disk":
            grid = _x_grid(X_MAX)
            J, dJ = bessel_j(m, grid), bessel_j_deriv(m, grid)
            r = _normalised(*_euclid_terms(family, grid[None, :], m, A, J[None, :], dJ[None, :]))
            solvers.append(_euclid_residual(family, m, None))
        else:
            grid, T, P = _hyper_table(m, float(lambda_max), rtol)
            r = _normalised(*_hyper_terms(family, grid[None, :], m, A, T[None, :], P[None, :]))
            solvers.append(_hyper_residual(family, m, None, rtol))
        first, found = _first_brackets(r, branch_max)
        lo[m, found] = grid[first[found]]
        hi[m, found] = grid[first[found] + 1]

    # a mode can hold the minimum only if its bracket starts below every upper end
    cap = hi.min(axis=0)
    if not np.all(np.isfinite(cap)):
        raise NoRootInRange("no eigenvalue found below the scan limit for some alpha")
    best = np.full(n, np.inf)
    for m in range(mode_max + 1):
        sel = np.nonzero(lo[m] < cap)[0]
        if sel.size == 0:
            continue
        roots = find_roots(solvers[m], lo[m, sel], hi[m, sel], _ROOT_TOL, args=(alphas[sel],))
        resid = np.abs(solvers[m](roots, alphas[sel]))
        if np.any(resid > RESIDUAL_TOL):
            raise NoConvergence(f"mode {m}: boundary residual {resid.max():.3g} above {RESIDUAL_TOL}")
        best[sel] = np.minimum(best[sel], roots)
    return best ** 2 if example == "euclidean-disk" else best


@lru_cache(maxsize=64)
def _curve_cached(example, family, alphas, mode_max, branch_max, lambda_max, rtol):
    lam = _curve_lambdas(example, family, np.array(alphas), mode_max, branch_max, lambda_max, rtol)
    label = f"{example} {family} exact C_alpha"
    return CurveSeries(alphas, tuple(1.0 / lam), label)


def exact_poincare_curve(example: str, family: str, alphas: Sequence[float], mode_max: int = 8,
                         branch_max: int = 3, lambda_max: float = LAMBDA_MAX,
                         rtol: float = ODE_RTOL) -> CurveSeries:
    """C_alpha = 1/lambda_alpha, the minimum over modes 0..mode_max, for each alpha."""
    example = _example(example)
    if family not in FAMILIES:
        raise DomainError(f"family must be one of {FAMILIES}")
    if mode_max < 2 or branch_max < 1:
        raise DomainError("need mode_max >= 2 and branch_max >= 1")
    alphas = tuple(_alpha(a) for a in alphas)
    return _curve_cached(example, family, alphas, int(mode_max), int(branch_max), float(lambda_max), float(rtol))


def alpha_grid(start: float, stop: float, count: int) -> np.ndarray:
    if not (0 < start < stop < 1) or count < 2:
        raise DomainError("alpha grid needs 0 < start < stop < 1 and count >= 2")
    return np.linspace(start, stop, int(count))
