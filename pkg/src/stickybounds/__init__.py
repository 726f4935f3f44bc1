"""Spectral-gap and log-Sobolev bounds for Brownian motion with sticky-reflecting boundary diffusion.

Bounds are assembled from curvature data of a domain (comparison functions for
the Laplacian of the boundary distance) and compared with exact constants for
the Euclidean and hyperbolic unit disks.
"""

from .comparison import ComparisonFn, first_zero, h_eval, log_derivative
from .errors import (DimensionUnsupported, DomainError, InvalidRegime, InvariantViolation, MissingInput,
                     NoConvergence, NoRootInRange, NoSignChange, ParseError, StepUnderflow,
                     StickyBoundsError, UnknownName)
from .geometry import DomainGeometry, MixtureWeight, SphereArea, builtin_geometry, load_geometry, mixture_gamma
from .logsobolev import (LsiInputs, SemigroupInputs, bernoulli_factor, entropy_trace_constant,
                         lsi_interpolation_bound, lsi_no_interpolation_bound, lsi_sticky_bound,
                         semigroup_L_bb_bound, sobolev_trace_constant, trace_norm_bound)
from .numerics import Interval, Tolerance, find_root, integrate, minimize_scalar, ode_solve
from .poincare import (BoundSet, compute_K1, compute_K_bb, compute_neg_laplace_bound, eps_inf,
                       poincare_interpolation_bound, poincare_sticky_bound, poincare_trivial_bound,
                       steklov_lower_bound)
from .spectra import (Condition, CurveSeries, SpectralProblem, euclid_mode_eigenvalue, exact_poincare_curve,
                      hyperbolic_mode_eigenvalue, hyperbolic_radial_solve)

__version__ = "0.1.0"
