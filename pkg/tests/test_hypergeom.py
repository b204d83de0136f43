import cmath
import math

import numpy as np
import pytest

from struveops import (
    ConvergenceError,
    DomainError,
    HypergeomParams,
    ParameterError,
    f21,
    f21_euler,
    f21_pfaff,
    f21_series,
    f21_symmetry_check,
)


def log_form(z):
    """Closed form of 2F1(1, 1, 2; z) = -log(1-z)/z."""
    z = complex(z)
    return -cmath.log(1.0 - z) / z


class TestSeries:
    def test_at_zero(self):
        assert f21_series(HypergeomParams(0.3 + 1j, -2.0, 4.5), 0.0) == 1

    def test_log_anchor(self):
        value = f21_series(HypergeomParams(1, 1, 2), 0.5)
        assert abs(value - 2.0 * math.log(2.0)) <= 1e-12
        assert abs(value - log_form(0.5)) <= 1e-12

    def test_binomial_anchor(self):
        # b = c reduces to (1-z)^(-a)
        value = f21_series(HypergeomParams(2, 3, 3), 0.25)
        assert abs(value - 16.0 / 9.0) <= 1e-12

    def test_unit_disk_required(self):
        with pytest.raises(DomainError):
            f21_series(HypergeomParams(1, 1, 2), 1.0)

    def test_c_pole_rejected(self):
        with pytest.raises(ParameterError):
            HypergeomParams(1, 1, -3)

    def test_hard_cap_signaled(self):
        with pytest.raises(ConvergenceError):
            f21_series(HypergeomParams(1, 1, 2), 1.0 - 1e-14, tol=1e-300)


class TestEuler:
    def test_log_anchor(self):
        value = f21_euler(HypergeomParams(1, 1, 2), 0.5)
        assert abs(value - 2.0 * math.log(2.0)) <= 1e-10

    def test_beta_normalization_at_zero(self):
        value = f21_euler(HypergeomParams(0.7 - 0.2j, 1.4, 3.1), 0.0)
        assert abs(value - 1.0) <= 1e-12

    def test_cross_representation(self):
        hp = HypergeomParams(1.0, 0.7, 2.3)
        z = -0.6
        assert abs(f21_euler(hp, z) - f21_series(hp, z)) <= 1e-10

    def test_complex_a(self):
        hp = HypergeomParams(complex(0.5, 0.8), 1.1, 2.6)
        z = complex(0.2, -0.4)
        assert abs(f21_euler(hp, z) - f21_series(hp, z)) <= 1e-10

    def test_complex_bc_small_imaginary(self):
        # Imaginary endpoint exponents stay in the integrand as unit-modulus
        # factors; spectral accuracy degrades, so the contract is looser.
        hp = HypergeomParams(complex(0.5, 0.1), complex(1.2, 0.3), complex(2.7, -0.2))
        z = complex(-0.4, 0.2)
        assert abs(f21_euler(hp, z, nodes=256) - f21_series(hp, z)) <= 1e-5

    def test_ordering_precondition(self):
        with pytest.raises(ParameterError):
            f21_euler(HypergeomParams(1.0, 2.5, 2.0), 0.3)
        with pytest.raises(ParameterError):
            f21_euler(HypergeomParams(1.0, -0.5, 2.0), 0.3)

    def test_cut_rejected(self):
        with pytest.raises(DomainError):
            f21_euler(HypergeomParams(1.0, 1.0, 2.0), 1.5)


class TestPfaff:
    def test_at_zero(self):
        assert f21_pfaff(HypergeomParams(1.3, 0.4, 2.2), 0.0) == 1

    def test_log_anchor_at_minus_one(self):
        # transform argument (-1)/(-2) = 1/2
        value = f21_pfaff(HypergeomParams(1, 1, 2), -1.0)
        assert abs(value - math.log(2.0)) <= 1e-12

    def test_cross_representation_inside_disk(self):
        hp = HypergeomParams(1.0, 1.0, 2.5)
        for z in (-0.8, complex(-0.3, 0.55), complex(0.3, -0.5)):
            assert abs(f21_pfaff(hp, z) - f21_series(hp, z)) <= 1e-9

    def test_z_one_rejected(self):
        with pytest.raises(DomainError):
            f21_pfaff(HypergeomParams(1, 1, 2.5), 1.0)

    def test_transformed_argument_outside_disk_rejected(self):
        # Re z >= 1/2 maps outside the convergence region: |0.9/(0.9-1)| = 9.
        with pytest.raises(DomainError):
            f21_pfaff(HypergeomParams(1, 1, 2.5), 0.9)


class TestSymmetry:
    def test_real_params(self):
        assert f21_symmetry_check(HypergeomParams(1, 2, 3), 0.3) <= 1e-13

    def test_complex_params(self):
        hp = HypergeomParams(complex(0.5, 0.1), 1.2, 2.7)
        assert f21_symmetry_check(hp, -0.4) <= 1e-12

    def test_equal_parameters_exact(self):
        assert f21_symmetry_check(HypergeomParams(1.7, 1.7, 3.1), 0.45) == 0.0


class TestDispatcher:
    def test_small_arguments_use_series(self):
        hp = HypergeomParams(1, 1, 2)
        assert f21(hp, 0.4) == f21_series(hp, 0.4)

    def test_left_half_plane_handled(self):
        hp = HypergeomParams(1, 1, 2)
        assert abs(f21(hp, -0.95) - log_form(-0.95)) <= 1e-12

    def test_analytic_continuation_past_the_disk(self):
        # |z| > 1 but Re z < 1/2: only the Pfaff route reaches it.
        hp = HypergeomParams(1, 1, 2)
        z = complex(-2.0, 0.5)
        assert abs(f21(hp, z) - log_form(z)) <= 1e-12

    def test_slow_series_region(self):
        hp = HypergeomParams(1, 1, 2)
        assert abs(f21(hp, 0.8) - log_form(0.8)) <= 1e-11

    def test_unsupported_region_rejected(self):
        with pytest.raises(DomainError):
            f21(HypergeomParams(1, 1, 2), 1.2)

    def test_binomial_reduction_across_disk(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            a = rng.uniform(0.2, 2.0)
            b = rng.uniform(0.3, 2.0)
            z = rng.uniform(-0.9, 0.9)
            value = f21(HypergeomParams(a, b, b), z)
            assert abs(value - (1.0 - z) ** (-a)) <= 1e-11


def test_three_way_agreement_sample():
    rng = np.random.default_rng(31)
    for _ in range(15):
        a = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        b = rng.uniform(0.4, 2.2)
        c = b + rng.uniform(0.4, 2.2)
        while True:
            z = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
            if abs(z) <= 0.7 and z.real < 0.35:
                break
        hp = HypergeomParams(a, b, c)
        s = f21_series(hp, z)
        assert abs(s - f21_euler(hp, z)) <= 1e-9
        assert abs(s - f21_pfaff(hp, z)) <= 1e-9
