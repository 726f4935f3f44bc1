"""
Sticky boundary without boundary diffusion
==========================================

Without a boundary Laplacian the constant blows up as alpha -> 0. The
bound tracks the exact curve across the range.
"""

import numpy as np

from stickybounds import exact_poincare_curve
from stickybounds.poincare import adapted_constants, bounds_for

alphas = np.linspace(0.2, 0.99, 9)
for name in ("euclidean-disk", "hyperbolic-disk"):
    exact = exact_poincare_curve(name, "sticky", alphas).values
    ad = adapted_constants(name)
    print(f"\n{name}")
    for a, c in zip(alphas, exact):
        bound = bounds_for(ad, a)["sticky"]
        print(f" alpha={a:.3f} exact={c:8.4f} bound={bound:8.4f} ratio={bound / c:6.2f}")

# %%
# Close to alpha = 1 both tend to the interior Neumann constant.
