"""Comparison function h for the Laplacian of the distance to the boundary.

h solves h'' = -k h with h(0) = 1, h'(0) = -gamma, i.e.

    k > 0:  cos(sqrt(k) t) - gamma/sqrt(k) sin(sqrt(k) t)
    k = 0:  1 - gamma t
    k < 0:  cosh(sqrt(-k) t) - gamma/sqrt(-k) sinh(sqrt(-k) t)

With Ric >= (d-1) k1, sect <= k2 and gamma1 <= II <= gamma2, the distance to
the boundary satisfies (d-1) h2'/h2 <= Laplacian <= (d-1) h1'/h1 before the
first zero of the respective h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class ComparisonFn:
    k: float
    gamma: float

    def h(self, t):
        return h_eval(self, t)

    def dh(self, t):
        return h_prime(self, t)

    @property
    def first_zero(self) -> float:
        return first_zero(self)

    def log_derivative(self, t):
        return log_derivative(self, t)


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def h_eval(cf: ComparisonFn, t):
    t = np.asarray(t, dtype=float)
    k, g = cf.k, cf.gamma
    if k > 0:
        s = math.sqrt(k)
        v = np.cos(s * t) - g / s * np.sin(s * t)
    elif k < 0:
        s = math.sqrt(-k)
        v = np.cosh(s * t) - g / s * np.sinh(s * t)
    else:
        v = 1.0 - g * t
    return _out(v)


def h_prime(cf: ComparisonFn, t):
    t = np.asarray(t, dtype=float)
    k, g = cf.k, cf.gamma
    if k > 0:
        s = math.sqrt(k)
        v = -s * np.sin(s * t) - g * np.cos(s * t)
    elif k < 0:
        s = math.sqrt(-k)
        v = s * np.sinh(s * t) - g * np.cosh(s * t)
    else:
        v = -g * np.ones_like(t)
    return _out(v)


def first_zero(cf: ComparisonFn) -> float:
    """Smallest t >= 0 with h(t) = 0, or ``math.inf`` if h stays positive."""
    k, g = cf.k, cf.gamma
    if k > 0:
        s = math.sqrt(k)
        # h = cos(st) - (g/s) sin(st) vanishes first where st = atan2(s, g)
        return math.atan2(s, g) / s
    if k < 0:
        s = math.sqrt(-k)
        if g <= s:
            return math.inf
        return math.atanh(s / g) / s
    return 1.0 / g if g > 0 else math.inf


def log_derivative(cf: ComparisonFn, t):
    """h'(t)/h(t) for 0 <= t < first_zero."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0) or np.any(t_arr >= first_zero(cf)):
        raise DomainError(
            f"log_derivative needs 0 <= t < {first_zero(cf):.6g} for (k={cf.k}, gamma={cf.gamma})"
        )
    k, g = cf.k, cf.gamma
    if k < 0:
        # divide through by cosh to stay finite for large t
        s = math.sqrt(-k)
        th = np.tanh(s * t_arr)
        v = (s * th - g) / (1.0 - g / s * th)
        return _out(v)
    return _out(np.asarray(h_prime(cf, t_arr)) / np.asarray(h_eval(cf, t_arr)))
