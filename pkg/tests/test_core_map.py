"""Change of variable, tangent polynomial, Schwarzian and potentials."""

import math

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from drttp import core
from drttp.core import RayIdentifiers, TangentPoly
from drttp.errors import DomainError, PoleError

TP2 = TangentPoly(2.0)


class TestTypes:
    def test_ray_identifier_invariants(self):
        ri = RayIdentifiers(0.5, 3.0)
        assert ri.f0 == 3.0**2 - 1.0
        with pytest.raises(DomainError):
            RayIdentifiers(-0.1, 3.0)
        with pytest.raises(DomainError):
            RayIdentifiers(0.0, 0.0)

    def test_tangent_poly_derived_fields(self):
        tp = TangentPoly(-1.0)
        assert tp.c0 == pytest.approx(0.25)
        assert tp.sqrt_c0 == pytest.approx(0.5)      # z_T/(z_T-1) > 0
        assert tp.a2 == pytest.approx(0.25)
        assert tp.x_tilde_T == pytest.approx(-4.0)
        assert tp.gamma == pytest.approx(3.0)
        assert TP2.c0 == 4.0 and TP2.a2 == 1.0 and TP2.gamma == -3.0

    @pytest.mark.parametrize("z_t", [0.0, 0.5, 1.0, math.nan])
    def test_tangent_poly_rejects_inner_root(self, z_t):
        with pytest.raises(DomainError):
            TangentPoly(z_t)

    def test_c0_branches(self):
        assert TangentPoly(3.0).c0 > 1.0
        assert TangentPoly(-2.0).c0 < 1.0


class TestTangentEval:
    def test_value_at_zero_for_zt2(self):
        assert core.tangent_poly_eval(0.0, TP2) == pytest.approx(4.0)

    def test_normalization_at_one(self):
        for z_t in (2.0, -1.0, 5.5, -0.3):
            assert core.tangent_poly_eval(1.0, TangentPoly(z_t)) == pytest.approx(1.0)

    def test_double_root(self):
        assert core.tangent_poly_eval(2.0, TP2) == 0.0


class TestMap:
    def test_elementary_value_at_origin(self):
        assert core.map_x_to_z(0.0, TP2) == pytest.approx(2.0 / (1.0 + math.sqrt(2.0)),
                                                          abs=1e-15)

    def test_limits(self):
        assert core.map_x_to_z(50.0, TP2) == pytest.approx(1.0, abs=1e-12)
        assert core.map_x_to_z(-50.0, TP2) == pytest.approx(0.0, abs=1e-12)

    def test_monotone(self):
        xs = np.linspace(-8, 8, 200)
        for z_t in (2.0, -0.5):
            z = core.map_x_to_z(xs, TangentPoly(z_t))
            assert np.all(np.diff(z) > 0)

    def test_general_branch_against_ode_integration(self):
        # integrate dz/dx from a closed-form anchor and compare the inverse
        tp = TangentPoly(-0.5)
        z0 = 0.5
        x0 = core.x_of_z(z0, tp)
        sol = solve_ivp(
            lambda x, z: core.dz_dx(z, tp), (x0, 1.3), [z0],
            rtol=1e-12, atol=1e-14, dense_output=True,
        )
        assert core.map_x_to_z(1.3, tp) == pytest.approx(
            float(sol.y[0, -1]), abs=1e-9
        )

    def test_roundtrip_precision(self):
        tp = TangentPoly(-1.0)
        xs = np.linspace(-20.0, 20.0, 41)
        z, omz = core.map_x_to_z_pair(xs, tp)
        assert np.max(np.abs(z + omz - 1.0)) < 1e-15
        left = z < 0.5
        x_back = np.empty_like(xs)
        x_back[left] = core.x_of_z(z[left], tp)
        x_back[~left] = core._x_of_w(omz[~left], tp)
        assert np.max(np.abs(x_back - xs)) < 1e-12

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            core.map_x_to_z(math.inf, TP2)


class TestSchwarzian:
    def test_eta_mode_values(self):
        assert core.schwarzian_eta(1.0) == pytest.approx(-2.0)
        assert core.schwarzian_eta(1e9) == pytest.approx(-0.5)

    def test_pole_rejected(self):
        with pytest.raises(PoleError):
            core.schwarzian_eval(2.0, TP2)

    def test_eta_matches_x_gauge_at_zt2(self):
        for z in (0.2, 0.5, 2 / 3, 0.9):
            eta = 2.0 / z - 1.0
            assert core.schwarzian_eta(eta) == pytest.approx(
                core.schwarzian_eval(z, TP2, gauge="x"), rel=1e-13
            )

    def test_finite_difference_agreement(self):
        x0 = core.x_of_z(0.5, TP2)
        h = 4e-3

        def fd(hh):
            xs = x0 + hh * np.arange(-2, 3)
            z = core.map_x_to_z(xs, TP2)
            d1 = (z[0] - 8 * z[1] + 8 * z[3] - z[4]) / (12 * hh)
            d2 = (-z[0] + 16 * z[1] - 30 * z[2] + 16 * z[3] - z[4]) / (12 * hh**2)
            d3 = (-z[0] + 2 * z[1] - 2 * z[3] + z[4]) / (2 * hh**3)
            return d3 / d1 - 1.5 * (d2 / d1) ** 2

        approx = (4 * fd(h / 2) - fd(h)) / 3.0
        assert approx == pytest.approx(
            core.schwarzian_eval(0.5, TP2, gauge="x"), abs=1e-6
        )


class TestPotentials:
    def test_z_gauge_endpoints(self):
        ri = RayIdentifiers(1.0, 5.0)
        assert core.potential_eval_z(1.0, ri, TP2) == 0.0
        assert core.potential_eval_z(0.0, ri, TP2) == pytest.approx(0.25)
        with pytest.raises(DomainError):
            core.potential_eval_z(1.2, ri, TP2)

    def test_z_gauge_matches_levelled_form(self):
        # eta = 2z - 1 substitution into the asymmetric closed form
        mu_o = 5.0
        ri = RayIdentifiers(0.0, mu_o)
        A = 4.0 * ri.f0
        g = TP2.gamma
        for z in (0.3, 0.5, 0.75):
            eta = 2 * z - 1
            wl = (
                -A * (1 - eta**2) / (4 * (eta + g) ** 2)
                - eta * (1 - eta**2) / (eta + g) ** 3
                - 0.75 * (1 - eta**2) ** 2 / (eta + g) ** 4
            )
            assert core.potential_eval_z(z, ri, TP2) == pytest.approx(wl, rel=1e-13)

    def test_x_gauge_asymptotes(self):
        ri = RayIdentifiers(1.0, 5.0)
        assert core.potential_eval_x(60.0, ri, TP2) == pytest.approx(0.0, abs=1e-12)
        assert core.potential_eval_x(-60.0, ri, TP2) == pytest.approx(0.25, abs=1e-12)
        tp = TangentPoly(-1.0)
        left, right = core.potential_asymptotes(ri, tp)
        assert left == pytest.approx(4.0)
        assert core.potential_eval_x(-60.0, ri, tp) == pytest.approx(left, abs=1e-12)

    def test_x_gauge_value_zt2(self):
        # elementary-branch closed form at eta^ = sqrt(2)
        ri = RayIdentifiers(0.0, 2.0)
        want = 0.0 - 4.0 / (2 * math.sqrt(2)) + 11.0 / (4 * 2) - 3.0 / (4 * 4)
        assert core.potential_eval_x(0.0, ri, TP2) == pytest.approx(want, rel=1e-14)


class TestDkv:
    def test_forward_map(self):
        assert core.dkv_map(RayIdentifiers(0.0, 2.0)) == pytest.approx(
            (11.0 / 4.0, 2.0, 0.0)
        )
        assert core.dkv_map(RayIdentifiers(2.0, 2.0)) == pytest.approx(
            (7.0 / 4.0, 2.0, -1.0)
        )

    def test_roundtrip(self):
        rng = np.random.RandomState(0)
        for _ in range(100):
            ri = RayIdentifiers(rng.uniform(0.5, 3), rng.uniform(0.5, 9))
            A, B, _ = core.dkv_map(ri)
            back = core.dkv_inverse(A, B)
            assert back.lambda_o == pytest.approx(ri.lambda_o, abs=1e-14)
            assert back.mu_o == pytest.approx(ri.mu_o, abs=1e-14)

    def test_inverse_domain_error(self):
        with pytest.raises(DomainError):
            core.dkv_inverse(10.0, 1.0)

    def test_potential_values(self):
        assert core.dkv_potential_eval(1.0, 2.5, 1.5) == pytest.approx(
            2.5 - 1.5 - 0.75
        )
        assert core.dkv_potential_eval(1e9, 2.5, 1.5) == pytest.approx(0.0, abs=1e-8)
        e = math.sqrt(2.0)
        assert core.dkv_potential_eval(e, 11 / 4, 2.0) == pytest.approx(
            -2 / math.sqrt(2) + 11 / 8 - 3 / 16
        )
        with pytest.raises(DomainError):
            core.dkv_potential_eval(0.5, 1.0, 1.0)

    def test_gauge_identity(self):
        ri = RayIdentifiers(1.3, 4.2)
        A, B, shift = core.dkv_map(ri)
        assert shift == pytest.approx(-ri.lambda_o**2 / 4)
        xs = np.linspace(-12, 12, 200)
        lhs = core.dkv_potential_eval(core.eta_hat_of_x(xs), A, B) - (A - B - 0.75)
        rhs = core.potential_eval_x(xs, ri, TP2)
        assert np.max(np.abs(lhs - rhs)) < 1e-12
