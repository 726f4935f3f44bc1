import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stickybounds.comparison import ComparisonFn
from stickybounds.errors import DomainError
from stickybounds.geometry import DomainGeometry, SphereArea, builtin_geometry
from stickybounds.poincare import (adapted_constants, bounds_for, compute_K1, compute_K_bb, compute_neg_laplace_bound,
                                   eps_inf, general_bounds, general_constants, grad_phi_sq, hyperbolic_adapted_K1,
                                   hyperbolic_steklov_exact, k_bb_formula, laplace_phi_sq, neg_laplace_search,
                                   neg_part_sup, neg_part_sup_raw, poincare_interpolation_bound,
                                   poincare_sticky_bound, poincare_trivial_bound, steklov_lower_bound)

import oracles

EUC = builtin_geometry("euclidean-disk")
HYP = builtin_geometry("hyperbolic-disk")
FLAT = DomainGeometry(2, math.pi, 2 * math.pi, 0, 0, 1, 1, 1 / 3.39, 1.0, SphereArea.table([0, 1], [0, 0]))
SH2 = math.sinh(0.5) ** 2 / math.sinh(1) ** 2


class TestEpsInf:
    @pytest.mark.parametrize("A, B, v", [(0, 3, 3), (1, 1, 4), (4, 9, 25)])
    def test_examples(self, A, B, v):
        assert eps_inf(A, B) == pytest.approx(v, rel=1e-15)

    def test_grid_oracle(self):
        assert oracles.eps_grid_inf(4, 9) == pytest.approx(25, abs=1e-6)

    @given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
    def test_lower_envelope(self, A, B, eps):
        v = eps_inf(A, B)
        assert v <= (1 + eps) * A + (1 + 1 / eps) * B + 1e-12 * v
        e = math.sqrt(B / A)
        assert abs((1 + e) * A + (1 + 1 / e) * B - v) <= 1e-9 * v

    def test_negative(self):
        with pytest.raises(DomainError):
            eps_inf(-1, 1)


class TestPhi:
    @pytest.mark.parametrize("t0", [0.1, 0.6, 0.9])
    def test_grad_euclidean_closed_form(self, t0):
        assert grad_phi_sq(EUC, t0) == pytest.approx(t0 ** 2 / 6, rel=1e-10)

    def test_zero_profile(self):
        assert grad_phi_sq(FLAT, 0.5) == 0.0
        assert laplace_phi_sq(FLAT, 0.5) == 0.0

    def test_small_t0_limits(self):
        assert grad_phi_sq(HYP, 1e-5) < 1e-9
        assert laplace_phi_sq(EUC, 1e-5) == pytest.approx(1.0, abs=1e-4)
        assert laplace_phi_sq(HYP, 1e-5) == pytest.approx(1 / (2 * (math.cosh(1) - 1)), abs=1e-4)
        assert 1 / (2 * (math.cosh(1) - 1)) == pytest.approx(0.92067, abs=1e-5)

    @pytest.mark.parametrize("t0", [0.0, 1.0, 1.2, -0.5])
    def test_out_of_range(self, t0):
        with pytest.raises(DomainError):
            grad_phi_sq(EUC, t0)
        with pytest.raises(DomainError):
            laplace_phi_sq(HYP, t0)

    @pytest.mark.parametrize("t0", [0.2, 0.5, 0.8])
    def test_laplace_against_trapezoid(self, t0):
        # Euclidean disk: h1 = h2 = 1 - t, so the bracket is -(1-u)/(1-t) - 1/t0 < 0
        def f(t):
            u = t / t0
            return 2 * np.pi * t * ((1 - u) / (1 - t) + 1 / t0) ** 2 / np.pi

        assert laplace_phi_sq(EUC, t0) == pytest.approx(oracles.trapezoid(f, 0, t0, 20000), rel=1e-6)


class TestK1:
    def test_hyperbolic(self):
        v = compute_K1(HYP)
        assert v == pytest.approx(SH2 * HYP.C_int, rel=1e-4)
        assert v == pytest.approx(0.0664, abs=5e-5)

    def test_euclidean(self):
        v = compute_K1(EUC)
        assert v == pytest.approx(EUC.C_int / 4, rel=1e-4)
        assert v == pytest.approx(0.0738, abs=1e-4)
        # an infimum approached from inside: never below the limit
        assert v >= EUC.C_int / 4 - 1e-12

    def test_zero_profile(self):
        assert compute_K1(FLAT) == 0.0

    @pytest.mark.parametrize("g", [EUC, HYP], ids=["euclidean", "hyperbolic"])
    def test_monotone_in_C_int(self, g):
        cs = (0.1, 0.3, 0.6)
        k1 = [compute_K1(dataclasses.replace(g, C_int=c)) for c in cs]
        kbb = [compute_K_bb(dataclasses.replace(g, C_int=c)) for c in cs]
        assert k1 == sorted(k1) and kbb == sorted(kbb)


class TestNegLaplace:
    def test_euclidean_near_one(self):
        assert neg_part_sup(EUC, 1 - 1e-6) == pytest.approx(2.0, abs=1e-5)

    @pytest.mark.parametrize("t1", [0.5, 1.0, 3.0, 20.0])
    def test_constant_log_derivative(self, t1):
        assert neg_part_sup_raw(2, ComparisonFn(-1, -1), t1) == pytest.approx(1 / t1, rel=1e-12)

    @given(st.integers(2, 6), st.floats(-2, 2), st.floats(-1, 3), st.floats(0.05, 0.95))
    def test_at_least_endpoint_limit(self, d, k, g, frac):
        # at t -> t1 the expression tends to -1/t1, so the negative part never vanishes
        h2 = ComparisonFn(k, g)
        z = h2.first_zero
        t1 = frac * (z if math.isfinite(z) else 10.0)
        assert neg_part_sup_raw(d, h2, t1) >= (1 / t1) * (1 - 1e-9)

    def test_values(self):
        assert compute_neg_laplace_bound(HYP) == pytest.approx(2.3131, abs=1e-4)
        assert compute_neg_laplace_bound(EUC) == pytest.approx(2.0, abs=1e-5)
        assert compute_neg_laplace_bound(EUC) >= 2.0

    def test_unbounded_range(self):
        # built from the raw comparison function: k2 > -gamma2^2 fails for (-1, -1)
        v, t1 = neg_laplace_search(2, ComparisonFn(-1, -1))
        assert v == pytest.approx(0.0, abs=1e-7) and t1 > 1e7

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            neg_part_sup(EUC, 1.0)


class TestKbbSteklov:
    def test_values(self):
        assert compute_K_bb(EUC) == pytest.approx(0.8381, abs=1e-4)
        assert compute_K_bb(HYP) == pytest.approx(0.8981, abs=1e-4)

    def test_zero_C(self):
        assert k_bb_formula(0.5, 0.0, 2.0) == 0.0

    def test_steklov(self):
        assert steklov_lower_bound(HYP) == pytest.approx(0.5145, abs=1e-4)
        assert hyperbolic_steklov_exact() == pytest.approx(0.8509, abs=1e-4)
        ref = 1 / (2 / math.sqrt(3.39) + 2 / 3.39)
        assert steklov_lower_bound(EUC) == pytest.approx(ref, rel=1e-5)
        assert ref == pytest.approx(0.5966, abs=1e-4)

    def test_steklov_below_exact(self):
        assert steklov_lower_bound(HYP) <= hyperbolic_steklov_exact()
        assert steklov_lower_bound(EUC) <= 1.0

    @pytest.mark.parametrize("g", [EUC, HYP], ids=["euclidean", "hyperbolic"])
    def test_general_K2_is_zero(self, g):
        b = general_bounds(g)
        assert b.K2 == 0.0 and b.provenance == "general-curvature"
        assert b.K_bb == pytest.approx(compute_K_bb(g), rel=1e-15)


class TestAlphaBounds:
    EUC_ADAPTED = dict(C_int=1 / 3.39, C_bnd=1.0, K1=3 / 16, K2=0.0, K_bb=0.5)

    def test_interpolation_example(self):
        v = poincare_interpolation_bound(0.5, **self.EUC_ADAPTED)
        assert v == pytest.approx(0.59249, abs=1e-5)
        assert v == pytest.approx((0.25 + 0.5 / 3.39 + 0.046875) / 0.75, rel=1e-14)

    def test_interpolation_limits(self):
        c = self.EUC_ADAPTED
        assert poincare_interpolation_bound(1e-12, **c) == pytest.approx(max(c["C_int"] + c["K1"], c["C_bnd"]),
                                                                         rel=1e-9)
        assert poincare_interpolation_bound(1 - 1e-12, **c) == pytest.approx(c["C_int"], rel=1e-9)

    def test_trivial(self):
        c = {k: v for k, v in self.EUC_ADAPTED.items() if k != "K_bb"}
        assert poincare_trivial_bound(0.5, **c) == 1.0
        assert poincare_trivial_bound(1 - 1e-12, **c) == pytest.approx(max(c["C_int"], c["C_bnd"] + c["K2"]))
        assert poincare_trivial_bound(0.3, 0.2, 0.7, 0.0, 0.0) == 0.7

    def test_sticky(self):
        assert poincare_sticky_bound(0.5, 1 / 3.39, 0.5, 3 / 16) == pytest.approx(0.8887, abs=1e-4)
        assert poincare_sticky_bound(1 - 1e-12, 1 / 3.39, 0.5, 3 / 16) == pytest.approx(1 / 3.39, rel=1e-9)
        assert poincare_sticky_bound(1e-9, 1 / 3.39, 0.5, 3 / 16) > 1e8

    @pytest.mark.parametrize("name", ["euclidean-disk", "hyperbolic-disk"])
    def test_interpolation_no_worse(self, name, alpha_grid):
        for cs in (adapted_constants(name), general_constants(builtin_geometry(name))):
            for a in alpha_grid:
                b = bounds_for(cs, a)
                assert b["interp"] <= b["nointerp"] + 1e-15

    @given(st.floats(0.01, 0.99), st.floats(0.01, 2), st.floats(0.01, 2), st.floats(0, 1), st.floats(0, 1),
           st.floats(0.01, 2))
    def test_interpolation_no_worse_random(self, a, ci, cb, k1, k2, kbb):
        assert poincare_interpolation_bound(a, ci, cb, k1, k2, kbb) <= poincare_trivial_bound(a, ci, cb, k1, k2) * (
            1 + 1e-14)


class TestAdapted:
    def test_hyperbolic_K1(self):
        assert hyperbolic_adapted_K1() == pytest.approx(0.1782, abs=1e-4)
        s = np.linspace(1e-6, 1, 200001)
        dense = np.max((np.sinh(s) - (s - 1) * np.cosh(s) - 1) / np.sinh(s))
        assert hyperbolic_adapted_K1() == pytest.approx(dense, abs=1e-9)

    def test_hyperbolic_K_bb(self):
        assert adapted_constants("hyperbolic-disk").K_bb == pytest.approx(0.5431, abs=1e-4)

    def test_euclidean(self):
        cs = adapted_constants("euclidean-disk")
        assert (cs.K1, cs.K2, cs.K_bb) == (3 / 16, 0.0, 0.5)
