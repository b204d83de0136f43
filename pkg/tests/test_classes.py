import cmath
import math

import mpmath
import numpy as np
import pytest

from struveops import (
    ClassParams,
    DomainError,
    MobiusTarget,
    ParameterError,
    PowerSeries,
    StruveParams,
    class_expression,
    expression_evaluator,
    iter_membership_samples,
    j_functional,
    lemma3_check,
    lemma6_check,
    membership_test,
    mobius_image_check,
    power_mu,
)

HALF_PLANE = MobiusTarget(1.0, -1.0)
REFERENCE = StruveParams(0.5, 1.0, 1.0)


def make_cp(alpha=0.0, lam=1.0, mu=0.5, struve=REFERENCE, target=HALF_PLANE):
    return ClassParams(alpha=alpha, lam=lam, mu=mu, struve=struve, target=target)


class TestMobiusTarget:
    def test_disk_geometry_formulas(self):
        t = MobiusTarget(0.5, -0.5)
        assert t.center == pytest.approx(5.0 / 3.0)
        assert t.radius == pytest.approx(4.0 / 3.0)

    def test_geometry_against_boundary_sampling(self):
        # The boundary image of |z| = 1 must trace the computed circle.
        for A, B in ((0.5, -0.5), (1.0, 0.0), (0.7, 0.3), (0.2, -0.9)):
            t = MobiusTarget(A, B)
            for j in range(360):
                w = t.phi(cmath.exp(2j * math.pi * j / 360))
                assert abs(abs(w - t.center) - t.radius) <= 1e-12

    def test_half_plane_mode(self):
        t = MobiusTarget(1.0, -1.0)
        assert t.is_half_plane
        assert t.half_plane_edge == 0.0
        with pytest.raises(ParameterError):
            t.center

    def test_value_at_zero_is_one(self):
        assert MobiusTarget(0.3, -0.8).phi(0.0) == 1.0

    @pytest.mark.parametrize("A,B", [(0.5, 0.5), (0.2, 0.7), (1.5, 0.0), (0.5, -1.5)])
    def test_invalid_params_rejected(self, A, B):
        with pytest.raises(ParameterError):
            MobiusTarget(A, B)


class TestImageCheck:
    def test_half_plane_margin(self):
        assert mobius_image_check(MobiusTarget(1.0, -1.0), 1.0) == 1.0

    def test_disk_center_margin_is_radius(self):
        t = MobiusTarget(0.5, -0.5)
        assert mobius_image_check(t, 5.0 / 3.0) == pytest.approx(4.0 / 3.0)

    def test_outside_point_negative(self):
        assert mobius_image_check(MobiusTarget(1.0, 0.0), 2.5) == pytest.approx(-0.5)


class TestPowerMu:
    def test_one(self):
        assert power_mu(1.0, 0.7) == 1

    def test_principal_square_root(self):
        assert power_mu(4.0, 0.5) == pytest.approx(2.0)

    def test_imaginary_base(self):
        assert power_mu(1j, 0.5) == pytest.approx(cmath.exp(1j * math.pi / 4.0))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            power_mu(0.0, 0.5)


class TestClassParams:
    def test_alpha_range_enforced(self):
        with pytest.raises(ParameterError):
            make_cp(alpha=math.pi / 2)

    def test_mu_range_enforced(self):
        with pytest.raises(ParameterError):
            make_cp(mu=1.0)
        with pytest.raises(ParameterError):
            make_cp(mu=0.0)


class TestClassExpression:
    def test_identity_series_gives_rotation(self):
        f = PowerSeries.identity(16)
        for alpha in (0.0, 0.4, -1.2):
            cp = make_cp(alpha=alpha, lam=complex(0.3, 0.8))
            expected = complex(math.cos(alpha), math.sin(alpha))
            for z in (0.0, 0.5, complex(-0.3, 0.6)):
                assert abs(class_expression(cp, f, z) - expected) <= 1e-14

    def test_trivial_parameters(self):
        cp = make_cp(alpha=0.0, lam=0.0)
        assert abs(class_expression(cp, PowerSeries.identity(8), 0.7) - 1.0) <= 1e-14

    def test_against_independent_composition(self):
        # Second implementation path: operator coefficients from gamma-ratio
        # Pochhammers at high precision, plain power-sum evaluation, and the
        # expression composed in mpmath arithmetic.
        cp = make_cp(alpha=0.0, lam=1.0, mu=0.5)
        f = PowerSeries((0, 1, 1) + (0,) * 13)
        z = 0.1

        def op_value(k, zz, order=15):
            with mpmath.workdps(40):
                total = mpmath.mpc(0)
                for n in range(order):
                    a_n1 = 1 if n <= 1 else 0  # coefficients of z + z^2
                    if n == 0:
                        coeff = mpmath.mpf(1)
                    else:
                        coeff = (
                            (mpmath.mpf(-1) / 4) ** n
                            * mpmath.gamma(mpmath.mpf(3) / 2)
                            * mpmath.gamma(k)
                            / (mpmath.gamma(n + mpmath.mpf(3) / 2) * mpmath.gamma(k + n))
                        )
                    total += coeff * a_n1 * mpmath.mpc(zz) ** (n + 1)
                return total

        with mpmath.workdps(40):
            s_lo = op_value(2, z)
            s_hi = op_value(3, z)
            u = mpmath.power(mpmath.mpc(z) / s_hi, mpmath.mpf(1) / 2)
            oracle = complex((1 + 1) * u - 1 * (s_lo / s_hi) * u)
        assert abs(class_expression(cp, f, z) - oracle) <= 1e-10

    def test_vanishing_denominator_signaled(self):
        # S_{k+1} f = z (1 + s2 z) vanishes at z = -1/s2 inside the disk.
        sp = REFERENCE
        a2 = 20.0
        f = PowerSeries((0, 1, a2))
        s2 = (-1.0 / 4.0) * a2 / (1.5 * 3.0)  # kernel coefficient at k+1 = 3
        z0 = -1.0 / s2
        assert abs(z0) < 1.0
        cp = make_cp(struve=sp)
        with pytest.raises(DomainError):
            class_expression(cp, f, z0)


class TestJFunctional:
    def test_identity_anchor(self):
        rng = np.random.default_rng(41)
        f = PowerSeries.identity(16)
        for _ in range(25):
            cp = make_cp(
                alpha=rng.uniform(-1.4, 1.4),
                lam=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                mu=rng.uniform(0.05, 0.95),
            )
            z = 0.8 * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert abs(j_functional(cp, f, z) - 1.0) <= 1e-14

    def test_alpha_zero_equals_expression(self):
        cp = make_cp(alpha=0.0, lam=2.0)
        f = PowerSeries((0, 1, 0.5, -0.25))
        z = complex(0.4, 0.1)
        assert j_functional(cp, f, z) == class_expression(cp, f, z)

    def test_rotated_identity(self):
        cp = make_cp(alpha=math.pi / 4)
        assert abs(j_functional(cp, PowerSeries.identity(8), 0.5) - 1.0) <= 1e-14


class TestMembership:
    def test_identity_passes_everywhere(self):
        rng = np.random.default_rng(43)
        f = PowerSeries.identity(16)
        for _ in range(5):
            B = rng.uniform(-1.0, 0.5)
            A = rng.uniform(B + 0.1, 1.0)
            cp = make_cp(
                alpha=rng.uniform(-1.0, 1.0),
                lam=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                target=MobiusTarget(A, B),
            )
            verdict = membership_test(cp, f, radii=(0.3, 0.6, 0.9), points_per_circle=60)
            assert verdict.passed and verdict.margin > 0
            assert verdict.witness_z is None
            assert verdict.samples_used == 180

    def test_degenerate_operator_c_zero(self):
        sp = StruveParams(0.5, 1.0, 0.0)
        rng = np.random.default_rng(44)
        coeffs = (0, 1) + tuple(complex(*rng.uniform(-1, 1, 2)) for _ in range(10))
        cp = make_cp(lam=complex(1.5, -0.4), struve=sp)
        verdict = membership_test(cp, PowerSeries(coeffs), radii=(0.5, 0.9),
                                  points_per_circle=36)
        assert verdict.passed

    def test_constructed_failure_with_witness(self):
        # f = z + 2 z^2 with a strongly weighted difference term dips below
        # Re J = 0 near z = -0.95; the brute-force sampler is the oracle.
        lam, a2 = 30.0, 2.0
        f = PowerSeries((0, 1, a2) + (0,) * 14)
        cp = make_cp(lam=lam)
        evaluator = expression_evaluator(cp, f)
        brute = min(
            evaluator(0.95 * cmath.exp(2j * math.pi * j / 720)).real
            for j in range(720)
        )
        assert brute < 0
        verdict = membership_test(cp, f)
        assert not verdict.passed
        assert verdict.margin < 0
        assert verdict.witness_z is not None
        assert evaluator(verdict.witness_z).real < 0
        assert abs(verdict.margin - brute) <= 1e-12

    def test_half_plane_margin_matches_image_check(self):
        cp = make_cp(lam=complex(0.5, 0.5))
        f = PowerSeries((0, 1, 0.3, -0.2j))
        samples = list(iter_membership_samples(cp, f, radii=(0.5,), points_per_circle=16))
        for _, value, margin in samples:
            assert margin == mobius_image_check(cp.target, value)
            assert margin == value.real  # edge is 0 for (A, B) = (1, -1)

    def test_failure_monotone_in_radii(self):
        lam, a2 = 30.0, 2.0
        f = PowerSeries((0, 1, a2) + (0,) * 14)
        cp = make_cp(lam=lam)
        small = membership_test(cp, f, radii=(0.9, 0.95), points_per_circle=360)
        big = membership_test(cp, f, radii=(0.5, 0.9, 0.95), points_per_circle=360)
        assert not small.passed
        assert not big.passed
        assert big.margin <= small.margin + 1e-15

    def test_radii_validation(self):
        cp = make_cp()
        f = PowerSeries.identity(8)
        with pytest.raises(ParameterError):
            membership_test(cp, f, radii=(0.5, 0.4))
        with pytest.raises(ParameterError):
            membership_test(cp, f, radii=(0.0, 0.5))
        with pytest.raises(ParameterError):
            membership_test(cp, f, radii=())


class TestLemma6:
    def test_disk_in_half_plane(self):
        verdict = lemma6_check(MobiusTarget(0.5, 0.0), MobiusTarget(1.0, -1.0))
        assert verdict.passed and verdict.margin == pytest.approx(0.5)

    def test_equal_targets_margin_zero(self):
        t = MobiusTarget(0.6, -0.2)
        verdict = lemma6_check(t, t)
        assert verdict.passed and verdict.margin == pytest.approx(0.0, abs=1e-15)

    def test_same_b_wider_a(self):
        verdict = lemma6_check(MobiusTarget(0.9, -0.5), MobiusTarget(1.0, -0.5))
        assert verdict.passed and verdict.margin > 0

    def test_half_plane_in_half_plane(self):
        verdict = lemma6_check(MobiusTarget(0.8, -1.0), MobiusTarget(1.0, -1.0))
        assert verdict.passed and verdict.margin == pytest.approx(0.1)

    def test_ordering_violation_rejected(self):
        with pytest.raises(ParameterError):
            lemma6_check(MobiusTarget(0.5, -0.5), MobiusTarget(0.4, -0.2))

    def test_seeded_quadruples(self):
        rng = np.random.default_rng(47)
        for _ in range(100):
            vals = np.sort(rng.uniform(-1.0, 1.0, size=4))
            b1, b2, a2, a1 = (float(v) for v in vals)
            if a2 - b2 < 1e-3:
                continue
            verdict = lemma6_check(MobiusTarget(a2, b2), MobiusTarget(a1, b1))
            assert verdict.passed


class TestLemma3:
    def test_sigma_zero_matches_g(self):
        t = MobiusTarget(1.0, -1.0)
        f_vals = [complex(2.0, 0.3), complex(1.5, -0.2)]
        g_vals = [complex(0.4, 0.1), complex(0.8, 0.0)]
        combo = lemma3_check(t, f_vals, g_vals, 0.0)
        assert combo.margin == min(mobius_image_check(t, w) for w in g_vals)

    def test_sigma_one_matches_f(self):
        t = MobiusTarget(1.0, -1.0)
        f_vals = [complex(2.0, 0.3), complex(1.5, -0.2)]
        g_vals = [complex(0.4, 0.1), complex(0.8, 0.0)]
        combo = lemma3_check(t, f_vals, g_vals, 1.0)
        assert combo.margin == min(mobius_image_check(t, w) for w in f_vals)

    def test_center_and_interior_midpoint(self):
        t = MobiusTarget(0.5, 0.0)
        combo = lemma3_check(t, [complex(t.center)], [complex(t.center + 0.3)], 0.5)
        assert combo.passed

    def test_precondition_enforced(self):
        t = MobiusTarget(1.0, -1.0)
        with pytest.raises(ParameterError):
            lemma3_check(t, [complex(-1.0, 0.0)], [complex(1.0, 0.0)], 0.5)

    def test_sigma_range_enforced(self):
        t = MobiusTarget(1.0, -1.0)
        with pytest.raises(ParameterError):
            lemma3_check(t, [1.0 + 0j], [1.0 + 0j], 1.5)


def test_verdict_json_shape():
    cp = make_cp()
    verdict = membership_test(cp, PowerSeries.identity(8), radii=(0.5,),
                              points_per_circle=8)
    data = verdict.to_json()
    assert set(data) == {"passed", "witness", "margin", "samples_used"}
    assert data["passed"] is True
    assert data["witness"] is None
    assert data["samples_used"] == 8
