"""Characteristic cubics, classification, levelled limit and spectra."""

import math

import numpy as np
import pytest

from drttp import spectral
from drttp.core import RayIdentifiers, TangentPoly
from drttp.errors import (
    ClassificationError,
    DegenerateLimitError,
    TransferAmbiguityError,
)
from drttp.spectral import (
    CubicVariable,
    Kind,
    Region,
    TransferDirection,
    bound_state_count,
    classify_region,
    classify_solution,
    cubic_coeffs,
    expdiff_transfer,
    nodeless_census,
    real_cubic_roots,
    spectrum,
    wl_solve,
)

TP2 = TangentPoly(2.0)
WL5 = RayIdentifiers(0.0, 5.0)


class TestCubicCoeffs:
    def test_lambda1_free_term_levelled(self):
        spec = cubic_coeffs(0, WL5, TP2, CubicVariable.LAMBDA1)
        assert spec.coeffs[0] == pytest.approx(576.0)
        assert spec.coeffs[3] == pytest.approx(8 * 2 * (1 - 2) * 1)

    def test_lambda0_free_term_zero_point(self):
        spec = cubic_coeffs(0, RayIdentifiers(0.0, 1.0), TP2, CubicVariable.LAMBDA0)
        assert spec.coeffs[0] == pytest.approx(0.0, abs=1e-12)
        spec2 = cubic_coeffs(1, RayIdentifiers(0.3, 3.0), TP2, CubicVariable.LAMBDA0)
        assert spec2.coeffs[0] > 0.0

    def test_leading_coefficients(self):
        ri = RayIdentifiers(1.0, 7.0)
        for z_t in (2.0, -1.0):
            tp = TangentPoly(z_t)
            s = tp.sqrt_c0
            for m in (0, 2):
                u = 2 * m + 1
                c1 = cubic_coeffs(m, ri, tp, CubicVariable.LAMBDA1)
                c0 = cubic_coeffs(m, ri, tp, CubicVariable.LAMBDA0)
                assert c1.coeffs[3] == pytest.approx(8 * s * (1 - s) * u)
                assert c0.coeffs[3] == pytest.approx(8 * (s - 1) * u)

    def test_coeffs_against_quartic_fit(self):
        # all four coefficients recovered by fitting the defining quartic
        # reduction at sample points
        ri = RayIdentifiers(1.0, 7.0)
        tp = TangentPoly(-1.0)
        m = 2
        s, u = tp.sqrt_c0, 2 * m + 1
        L, M = ri.lambda_o**2, ri.mu_o**2

        def reduction(lam):
            return (
                tp.c0 * (M - (lam + u) ** 2 + (1 - 2 / s) * (lam**2 - L)) ** 2
                - 4 * (lam**2 - L) * (lam + u) ** 2
            )

        xs = np.linspace(-2.5, 2.5, 5)
        fit = np.polyfit(xs, [reduction(x) for x in xs], 3)[::-1]
        got = cubic_coeffs(m, ri, tp, CubicVariable.LAMBDA0).coeffs
        assert np.allclose(fit, got, rtol=1e-9, atol=1e-9)

    def test_degenerate_limit_rejected(self):
        with pytest.raises(DegenerateLimitError):
            cubic_coeffs(0, WL5, TangentPoly(1e13), CubicVariable.LAMBDA1)


class TestRoots:
    def test_factored_cubic(self):
        spec = spectral.CubicSpec(
            CubicVariable.LAMBDA1, (0.0, -1.0, 0.0, 1.0), 4.0, False
        )
        assert real_cubic_roots(spec) == pytest.approx([-1.0, 0.0, 1.0])

    def test_levelled_root_set(self):
        spec = cubic_coeffs(0, WL5, TP2, CubicVariable.LAMBDA1)
        roots = real_cubic_roots(spec)
        want = sorted(
            [-12.0, (-6 + math.sqrt(804)) / 16, (-6 - math.sqrt(804)) / 16]
        )
        assert roots == pytest.approx(want, abs=1e-12)

    def test_single_real_root(self):
        # negative discriminant: lambda^3 + lambda + 1
        spec = spectral.CubicSpec(CubicVariable.LAMBDA1, (1.0, 1.0, 0.0, 1.0),
                                  -31.0 / 27.0, False)
        roots = real_cubic_roots(spec)
        assert len(roots) == 1
        assert spec(roots[0]) == pytest.approx(0.0, abs=1e-12)

    def test_double_root_vicinity_flag(self):
        # (lambda - 1)^2 (lambda + 2) has a double root
        spec = spectral.CubicSpec(CubicVariable.LAMBDA1, (2.0, -3.0, 0.0, 1.0),
                                  0.0, True)
        roots = real_cubic_roots(spec)
        assert len(roots) == 3
        assert sorted(roots) == pytest.approx([-2.0, 1.0, 1.0], abs=1e-7)

    def test_residual_bound(self):
        rng = np.random.RandomState(2)
        for _ in range(200):
            ri = RayIdentifiers(rng.uniform(0, 2), rng.uniform(0.3, 8))
            tp = TangentPoly(float(rng.choice([-2.0, -0.7, 1.5, 3.0])))
            spec = cubic_coeffs(int(rng.randint(0, 3)), ri, tp,
                                CubicVariable.LAMBDA1)
            scale = max(abs(c) for c in spec.coeffs)
            for r in real_cubic_roots(spec):
                assert abs(spec(r)) <= 1e-9 * scale * max(1.0, abs(r)) ** 3


class TestTransfer:
    def test_levelled_example(self):
        lam0 = expdiff_transfer(-12.0, 0, WL5, TP2,
                                TransferDirection.LAMBDA1_TO_LAMBDA0)
        assert lam0 == pytest.approx(24.0)
        assert lam0**2 == pytest.approx(0.0 + 4.0 * 144.0)

    def test_pole_raises(self):
        with pytest.raises(TransferAmbiguityError):
            expdiff_transfer(-1.0, 0, WL5, TP2,
                             TransferDirection.LAMBDA1_TO_LAMBDA0)

    def test_roundtrip(self):
        rng = np.random.RandomState(4)
        count = 0
        while count < 100:
            ri = RayIdentifiers(rng.uniform(0, 2), rng.uniform(0.3, 8))
            tp = TangentPoly(float(rng.choice([-2.0, 1.5])))
            m = int(rng.randint(0, 3))
            spec = cubic_coeffs(m, ri, tp, CubicVariable.LAMBDA1)
            for r in real_cubic_roots(spec):
                try:
                    l0 = expdiff_transfer(r, m, ri, tp,
                                          TransferDirection.LAMBDA1_TO_LAMBDA0)
                    back = expdiff_transfer(l0, m, ri, tp,
                                            TransferDirection.LAMBDA0_TO_LAMBDA1)
                except TransferAmbiguityError:
                    continue
                assert back == pytest.approx(r, abs=1e-10 * max(1, abs(r)))
                count += 1


class TestWlSolve:
    def test_m0_mu5(self):
        sols = {s.kind: s for s in wl_solve(0, 5.0, TP2)}
        a = sols[Kind.A]
        assert a.lambda1 == pytest.approx(-12.0)
        assert a.epsilon == pytest.approx(-144.0)      # -(z_T-1)^2 g^2 / 4u^2
        c = sols[Kind.C]
        assert c.lambda1 == pytest.approx((-6 + math.sqrt(804)) / 16)
        assert c.epsilon == pytest.approx(-1.9521143551, abs=1e-9)
        d = sols[Kind.D]
        assert d.lambda1 == pytest.approx((-6 - math.sqrt(804)) / 16)

    def test_threshold_solution(self):
        sols = wl_solve(2, 5.0, TP2)   # 2m+1 == mu_o
        lin = [s for s in sols
               if s.kind in (Kind.A_PRIME, Kind.B_PRIME, Kind.A, Kind.B)]
        assert len(lin) == 1
        assert lin[0].lambda1 == 0.0 and lin[0].epsilon == 0.0

    def test_supplementary_kinds(self):
        sols = {s.kind: s for s in wl_solve(3, 5.0, TP2)}
        assert Kind.B_PRIME in sols      # c0 > 1, 2m+1 > mu_o
        assert Kind.D_PRIME in sols
        d = sols[Kind.D]
        assert d.merged_tail and d.label == "d''"

    def test_invariants_on_all_solutions(self):
        for z_t in (2.0, -1.0):
            tp = TangentPoly(z_t)
            for m in range(4):
                for s in wl_solve(m, 6.3, tp):
                    assert s.lambda0**2 == pytest.approx(
                        tp.c0 * s.lambda1**2, abs=1e-9 * (1 + s.lambda0**2)
                    )
                    assert s.mu**2 == pytest.approx(
                        6.3**2 + tp.a2 * s.lambda1**2,
                        abs=1e-9 * (1 + s.mu**2),
                    )


class TestCountsAndRegions:
    def test_bound_state_count(self):
        assert bound_state_count(5.0) == 2
        assert bound_state_count(1.0) == 0
        assert bound_state_count(5.2) == 3
        assert bound_state_count(3.0, lambda_o=2.0) == 0
        assert bound_state_count(7.3, lambda_o=2.0) == 3

    def test_regions(self):
        assert classify_region(0, RayIdentifiers(1.0, 5.0))[0] is Region.A
        region, flags = classify_region(2, RayIdentifiers(1.0, 6.0))
        assert flags == ["A|D"]
        assert classify_region(0, RayIdentifiers(3.0, 1.0))[0] is Region.C
        assert classify_region(1, RayIdentifiers(0.5, 1.0))[0] is Region.B
        assert classify_region(0, RayIdentifiers(1.5, 1.2))[0] is Region.D

    def test_classify_solution(self):
        assert classify_solution(24.0, -12.0, 0, WL5, TP2) is Kind.A
        sols = {s.kind: s for s in wl_solve(3, 5.0, TP2)}
        dp = sols[Kind.D_PRIME]
        assert classify_solution(dp.lambda0, dp.lambda1, 3, WL5, TP2) is Kind.D_PRIME
        d = sols[Kind.D]
        assert classify_solution(d.lambda0, d.lambda1, 3, WL5, TP2) is Kind.D
        c = {s.kind: s for s in wl_solve(0, 5.0, TP2)}[Kind.C]
        assert classify_solution(c.lambda0, c.lambda1, 0, WL5, TP2) is Kind.C
        with pytest.raises(ClassificationError):
            classify_solution(5.0, 1.0, 0, WL5, TP2)   # violates constraints


class TestCensus:
    def test_levelled_bounds(self):
        census = nodeless_census(WL5, TP2)
        assert census.m_plus_c0 is not None and census.m_plus_c0 < 2.0
        assert census.m_plus_c0 < bound_state_count(5.0)
        assert census.mu_cross_slope == pytest.approx(math.sqrt(3.0))

    def test_empty_spectrum_marker(self):
        census = nodeless_census(RayIdentifiers(0.0, 0.8), TP2)
        assert census.m_plus_c0 is None
        assert census.count_primary_nodeless is None


class TestTau:
    def test_closed_forms_c0_4(self):
        slopes = spectral.asymptotic_tau(TP2)
        assert slopes.tau1_linear == pytest.approx(0.5)
        assert {slopes.tau1_d, slopes.tau1_d_tail} == {-0.25, -0.5}
        for t in (slopes.tau1_linear, slopes.tau1_d, slopes.tau1_d_tail):
            assert slopes.cubic_residual(t, TP2) == pytest.approx(0.0, abs=1e-12)

    def test_discriminant_limit(self):
        m = 10_000
        lim = spectral.wl_quadratic_discriminant(m, 5.0, TP2) / (2 * m + 1) ** 2
        assert lim == pytest.approx(4.0, rel=0.01)


class TestSpectrum:
    def test_levelled_two_levels(self):
        sols = spectrum(WL5, TP2)
        assert len(sols) == 2
        assert sols[0].epsilon == pytest.approx(
            -(((-6 + math.sqrt(804)) / 16) ** 2), abs=1e-12
        )
        assert sols[1].epsilon == pytest.approx(
            -(((-18 + math.sqrt(836)) / 16) ** 2), abs=1e-12
        )

    def test_empty(self):
        assert spectrum(RayIdentifiers(0.0, 1.0), TP2) == []

    def test_continuity_in_lambda_o(self):
        base = [s.epsilon for s in spectrum(WL5, TP2)]
        near = [s.epsilon for s in spectrum(RayIdentifiers(1e-6, 5.0), TP2)]
        assert np.max(np.abs(np.asarray(base) - near)) < 1e-5

    def test_ordering_and_negativity(self):
        for z_t in (2.0, -1.0):
            for lo, mo in ((0.5, 7.3), (2.0, 7.3), (1.0, 5.0)):
                eps = [s.epsilon for s in
                       spectrum(RayIdentifiers(lo, mo), TangentPoly(z_t))]
                assert all(e < 0 for e in eps)
                assert all(b > a for a, b in zip(eps, eps[1:]))

    def test_dkv_gauge_energy_relation(self):
        # E in the shifted elementary gauge is -lambda0^2/4
        sols = spectrum(WL5, TP2)
        for s in sols:
            assert s.epsilon - WL5.lambda_o**2 / 4 == pytest.approx(
                -s.lambda0**2 / 4, rel=1e-12
            )
