"""Independent reference computations used only by the tests.

None of these call into stickybounds; where a library routine is used it
replaces at most one side of a comparison.
"""

import math

import numpy as np


def bisect(f, a, b, tol=1e-13, max_iter=400):
    fa = f(a)
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0 or b - a < tol:
            return m
        if (fa < 0) == (fm < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def bessel_series(m, x, terms=80):
    """J_m(x) from the ascending series, summed with fsum."""
    half = x / 2.0
    return math.fsum((-1) ** k * half ** (2 * k + m) / (math.factorial(k) * math.factorial(k + m))
                     for k in range(terms))


def bessel_series_deriv(m, x, terms=80):
    half = x / 2.0
    out = []
    for k in range(terms):
        p = 2 * k + m
        if p == 0:
            continue
        out.append((-1) ** k * p * half ** (p - 1) / (2 * math.factorial(k) * math.factorial(k + m)))
    return math.fsum(out)


def hyperbolic_series(lam, l, t, terms=200):
    """(T, T') at t for the regular radial solution on the hyperbolic plane,

    T(t) = tanh(t/2)^l * 2F1(-nu, nu+1; l+1; -sinh(t/2)^2)  with nu(nu+1) = -lam,
    normalised so that T ~ (t/2)^l near 0.
    """
    z = -math.sinh(t / 2) ** 2
    c, F, dF = 1.0, 1.0, 0.0
    for n in range(terms):
        c_next = c * (lam + n * (n + 1)) / ((n + 1) * (n + 1 + l))
        dF += (n + 1) * c_next * z ** n
        F += c_next * z ** (n + 1)
        c = c_next
    u = math.tanh(t / 2) ** l
    du = 0.0 if l == 0 else l * math.tanh(t / 2) ** (l - 1) * 0.5 / math.cosh(t / 2) ** 2
    return u * F, du * F + u * dF * (-math.sinh(t) / 2)


def inf_max_vertices(a, b, c, d, e, th):
    """min over [0,1]^2 of max(a + s b + t c, d - s e - t th) by vertex enumeration.

    The objective is affine on each side of the crease where both pieces agree,
    so the minimum sits at a box corner or where the crease meets an edge.
    """
    def f(s, t):
        return max(a + s * b + t * c, d - s * e - t * th)

    cands = [(0, 0), (0, 1), (1, 0), (1, 1)]
    # crease: (b + e) s + (c + th) t = d - a
    g1, g2, r = b + e, c + th, d - a
    for s in (0.0, 1.0):
        if g2 != 0:
            t = (r - g1 * s) / g2
            if 0 <= t <= 1:
                cands.append((s, t))
    for t in (0.0, 1.0):
        if g1 != 0:
            s = (r - g2 * t) / g1
            if 0 <= s <= 1:
                cands.append((s, t))
    return min(f(s, t) for s, t in cands)


def inf_max_grid(a, b, c, d, e, th, n=201):
    """Plain n x n grid scan; overestimates the infimum by at most max(b+c, e+th)/(n-1)."""
    s = np.linspace(0.0, 1.0, n)
    S, T = np.meshgrid(s, s, indexing="ij")
    return float(np.min(np.maximum(a + S * b + T * c, d - S * e - T * th)))


def inf_max_lp(a, b, c, d, e, th):
    """Same infimum as a linear programme in (s, t, z) solved by HiGHS."""
    from scipy.optimize import linprog

    res = linprog([0, 0, 1], A_ub=[[b, c, -1], [-e, -th, -1]], b_ub=[-a, -d],
                  bounds=[(0, 1), (0, 1), (None, None)], method="highs")
    assert res.status == 0, res.message
    return float(res.fun)


def eps_grid_inf(A, B, n=20001):
    """inf over eps > 0 of (1+eps)A + (1+1/eps)B from two nested log grids."""
    eps = np.logspace(-8, 8, n)
    vals = (1 + eps) * A + (1 + 1 / eps) * B
    i = int(np.argmin(vals))
    lo, hi = eps[max(i - 1, 0)], eps[min(i + 1, n - 1)]
    fine = np.linspace(lo, hi, n)
    return float(min(vals.min(), np.min((1 + fine) * A + (1 + 1 / fine) * B)))


def trapezoid(f, a, b, n):
    x = np.linspace(a, b, n + 1)
    y = f(x)
    return float((b - a) / n * (y.sum() - 0.5 * (y[0] + y[-1])))
