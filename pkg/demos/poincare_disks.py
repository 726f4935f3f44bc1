"""
Poincare constants on the two model disks
=========================================

Exact constants C_alpha from shooting, next to the bounds built from
curvature data alone.
"""

import numpy as np

from stickybounds import builtin_geometry, exact_poincare_curve
from stickybounds.poincare import adapted_constants, bounds_for, general_bounds, general_constants

# %%
# The inputs: each builtin geometry carries volumes, curvature bounds and the
# interior / boundary Poincare constants.
for name in ("euclidean-disk", "hyperbolic-disk"):
    g = builtin_geometry(name)
    b = general_bounds(g)
    print(f"{name:16s} C_int={g.C_int:.4f} C_bnd={g.C_bnd:.4f} "
          f"K1={b.K1:.4f} K_bb={b.K_bb:.4f} Steklov lb={b.steklov_lb:.4f}")

# %%
# Sweep alpha, the weight of the interior part of the Dirichlet form.
alphas = np.linspace(0.05, 0.95, 10)
for name in ("euclidean-disk", "hyperbolic-disk"):
    exact = exact_poincare_curve(name, "wentzell", alphas).values
    ad, ge = adapted_constants(name), general_constants(builtin_geometry(name))
    print(f"\n{name}")
    print(" alpha   exact   interp(adapted)  nointerp(adapted)  interp(general)")
    for a, c in zip(alphas, exact):
        ba, bg = bounds_for(ad, a), bounds_for(ge, a)
        print(f" {a:.2f}  {c:7.4f}  {ba['interp']:10.4f}  {ba['nointerp']:14.4f}  {bg['interp']:14.4f}")

# %%
# Interpolation never does worse than the no-interpolation bound, and both
# stay above the exact constant.
