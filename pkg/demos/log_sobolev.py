"""
Log-Sobolev bounds
==================

Twice the Poincare constant is a lower bound for the log-Sobolev constant,
so the exact curve gives a floor to compare against.
"""

import numpy as np

from stickybounds import bernoulli_factor, exact_poincare_curve
from stickybounds.logsobolev import lsi_inputs, lsi_interpolation_bound, lsi_no_interpolation_bound

# %%
# The weight log((1-a)/a)/(1-2a) equals 2 at a = 1/2 and is symmetric.
for a in (0.1, 0.3, 0.5, 0.7, 0.9):
    print(f"bernoulli_factor({a}) = {bernoulli_factor(a):.6f}")

# %%
alphas = np.linspace(0.05, 0.95, 7)
for name in ("euclidean-disk", "hyperbolic-disk"):
    inp = lsi_inputs(name)
    floor = 2 * np.asarray(exact_poincare_curve(name, "wentzell", alphas).values)
    print(f"\n{name}")
    for a, f in zip(alphas, floor):
        print(f" alpha={a:.2f} 2C={f:7.4f} interp={lsi_interpolation_bound(a, inp):8.4f} "
              f"nointerp={lsi_no_interpolation_bound(a, inp):8.4f}")
