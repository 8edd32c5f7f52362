import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import kronecker_points
from ferrox.complexmath import (
    RootVariant,
    gamma,
    gamma_quotient,
    ln_gamma,
    pochhammer,
    principal_pow,
    rgamma,
    root_y,
    z2m1_pow,
)
from ferrox.errors import BranchCutError, DomainError, PoleError

SQRT_PI = math.sqrt(math.pi)


class TestLnGamma:
    def test_at_one(self):
        assert abs(ln_gamma(1.0)) < 1e-15

    def test_at_half(self):
        # Gamma(1/2) = sqrt(pi)
        assert ln_gamma(0.5).real == pytest.approx(0.5723649429247001, abs=1e-13)
        assert abs(ln_gamma(0.5).imag) < 1e-15

    def test_factorial(self):
        assert ln_gamma(5.0).real == pytest.approx(math.log(24.0), abs=1e-13)

    @pytest.mark.parametrize("z", [0.0, -1.0, -7.0])
    def test_poles_raise(self, z):
        with pytest.raises(PoleError):
            ln_gamma(z)

    def test_conjugate_symmetry(self):
        z = 1.7 - 2.3j
        assert ln_gamma(z) == ln_gamma(z.conjugate()).conjugate()

    def test_reflection_formula_on_sample(self):
        # Gamma(z) Gamma(1-z) sin(pi z) / pi = 1 away from the integers
        worst = 0.0
        for z in kronecker_points(1000, -10.0, 10.0):
            if abs(z.real - round(z.real)) < 1e-3 and abs(z.imag) < 1e-3:
                continue
            val = gamma(z) * gamma(1.0 - z) * cmath.sin(math.pi * z) / math.pi
            worst = max(worst, abs(val - 1.0))
        assert worst < 1e-10

    def test_duplication_formula_on_sample(self):
        # Gamma(2z) sqrt(pi) = 2^(2z-1) Gamma(z) Gamma(z+1/2)
        worst = 0.0
        for z in kronecker_points(1000, -10.0, 10.0):
            if abs(2 * z.real - round(2 * z.real)) < 1e-3 and abs(z.imag) < 1e-3:
                continue
            lhs = ln_gamma(2 * z)
            rhs = ((2 * z - 1) * math.log(2.0) - 0.5 * math.log(math.pi)
                   + ln_gamma(z) + ln_gamma(z + 0.5))
            val = cmath.exp(lhs - rhs)
            worst = max(worst, abs(val - 1.0))
        assert worst < 1e-10


class TestRgamma:
    def test_zeros_at_poles(self):
        assert rgamma(-1.0) == 0.0
        assert rgamma(0.0) == 0.0
        assert rgamma(-12.0) == 0.0

    def test_simple_values(self):
        assert rgamma(1.0) == pytest.approx(1.0, abs=1e-14)
        assert rgamma(0.5).real == pytest.approx(0.5641895835477563, abs=1e-13)

    def test_inverse_of_gamma(self):
        for z in (0.3 + 0.7j, 2.5, -1.3 + 0.2j, 4.0 - 3.0j):
            assert abs(rgamma(z) * gamma(z) - 1.0) < 1e-12

    def test_continuous_through_poles(self):
        # tiny values just off the nonpositive integers
        assert abs(rgamma(-3.0 + 1e-10)) < 1e-8
        assert abs(rgamma(-3.0 + 1e-10j)) < 1e-8

    def test_quotient_zero_on_denominator_pole(self):
        assert gamma_quotient((1.3,), (-2.0,)) == 0.0


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(4.2 + 1j, 0) == 1.0

    def test_rising_factorial(self):
        assert pochhammer(3.0, 4) == pytest.approx(360.0)

    def test_hits_zero(self):
        assert pochhammer(-2.0, 4) == 0.0

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(1.0, -1)


class TestPrincipalPow:
    def test_real_root(self):
        assert principal_pow(4.0, 0.5) == pytest.approx(2.0)

    def test_imaginary_square(self):
        assert principal_pow(1j, 2) == pytest.approx(-1.0)

    def test_continuity_above_negative_axis(self):
        # sqrt just above -1 approaches +i
        got = principal_pow(-1.0 + 1e-12j, 0.5)
        assert abs(got - 1j) < 1e-6

    def test_branch_cut_rejected(self):
        with pytest.raises(BranchCutError):
            principal_pow(-1.0, 0.5)

    def test_integer_power_of_negative_base_is_real(self):
        assert principal_pow(-2.0, 3) == pytest.approx(-8.0)
        assert principal_pow(-2.0, 2) == pytest.approx(4.0)

    def test_zero_base(self):
        assert principal_pow(0.0, 2.5) == 0.0
        assert principal_pow(0.0, 0.0) == 1.0
        with pytest.raises(DomainError):
            principal_pow(0.0, -1.0)


class TestZ2m1Pow:
    def test_simple(self):
        assert z2m1_pow(3.0, 1.0) == pytest.approx(8.0)
        assert z2m1_pow(3.0, 0.5) == pytest.approx(math.sqrt(8.0))

    def test_square_and_continuity(self):
        val = z2m1_pow(2j, 0.5)
        z = 2j
        assert abs(val * val - (z * z - 1.0)) < 1e-12
        # continuity along a path from 3 to 2i inside the cut plane
        prev = z2m1_pow(3.0, 0.5)
        for t in [k / 40.0 for k in range(1, 41)]:
            cur = z2m1_pow(3.0 * (1 - t) + 2j * t, 0.5)
            assert abs(cur - prev) < 0.2
            prev = cur
        assert abs(prev - val) < 1e-12

    def test_domain_error(self):
        with pytest.raises(DomainError):
            z2m1_pow(0.5, 0.5)
        with pytest.raises(DomainError):
            z2m1_pow(-2.0, 0.5)


class TestRootY:
    def test_values(self):
        assert root_y(RootVariant.Y1, 0.0) == pytest.approx(1j)
        assert root_y(RootVariant.Y2, 2.0) == pytest.approx(math.sqrt(3.0))

    def test_branches_agree_upper_half_plane(self):
        x = 0.5 + 0.5j
        assert abs(root_y(RootVariant.Y1, x) - root_y(RootVariant.Y2, x)) < 1e-14

    def test_sign_relation_lower_half_plane(self):
        x = 0.5 - 0.5j
        assert abs(root_y(RootVariant.Y1, x) + root_y(RootVariant.Y2, x)) < 1e-14

    def test_parity(self):
        x = 0.3 + 1.1j
        assert root_y(RootVariant.Y1, -x) == pytest.approx(root_y(RootVariant.Y1, x))
        assert root_y(RootVariant.Y2, -x) == pytest.approx(-root_y(RootVariant.Y2, x))

    def test_square_is_x2_minus_1(self):
        for x in (0.2 + 0.9j, -0.7 + 0.1j, 1.5 - 2.0j):
            for variant in RootVariant:
                y = root_y(variant, x)
                assert abs(y * y - (x * x - 1.0)) <= 1e-12 * abs(x * x - 1.0)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            root_y(RootVariant.Y1, 1.5)
        with pytest.raises(DomainError):
            root_y(RootVariant.Y2, 0.5)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.complex_numbers(min_magnitude=0.01, max_magnitude=8.0,
                          allow_nan=False, allow_infinity=False))
def test_reflection_identity_fuzz(z):
    if abs(z.real - round(z.real)) < 1e-3 and abs(z.imag) < 1e-3:
        return
    val = gamma(z) * gamma(1.0 - z) * cmath.sin(math.pi * z) / math.pi
    assert abs(val - 1.0) < 1e-9
