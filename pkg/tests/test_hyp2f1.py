import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import kronecker_reals, rel_diff
from ferrox.errors import (
    BranchCutError,
    ConvergenceError,
    DegenerateParameterError,
    ParameterError,
)
from ferrox.hyp2f1 import (
    CutSide,
    HypParams,
    f21,
    f21_cut,
    f21_cut_via,
    f21_regularized,
    f21_series,
)


def poly_2f1_oracle(a: int, b: float, c: float, w: complex) -> complex:
    """Independent terminating-series oracle: explicit rising-factorial
    products, no shared code with the implementation."""
    total = 0.0 + 0.0j
    for n in range(-a + 1):
        num = den = 1.0
        for k in range(n):
            num *= (a + k) * (b + k)
            den *= (c + k) * (k + 1)
        total += num / den * w ** n
    return total


class TestSeries:
    def test_empty_argument(self):
        r = f21_series(HypParams(0.7, -1.3, 2.2), 0.0)
        assert r.value == 1.0
        assert r.tail_estimate == 0.0

    def test_log_closed_form(self):
        # 2F1(1,1;2;w) = -log(1-w)/w
        r = f21_series(HypParams(1, 1, 2), 0.5, tol=1e-14)
        assert abs(r.value - 2.0 * math.log(2.0)) < 1e-12

    def test_terminating_polynomial(self):
        r = f21_series(HypParams(-2, 5, 1), 0.3)
        assert r.value == pytest.approx(poly_2f1_oracle(-2, 5.0, 1.0, 0.3))
        assert r.value.real == pytest.approx(-0.65)
        assert r.tail_estimate == 0.0

    def test_c_pole_rejected(self):
        with pytest.raises(ParameterError):
            f21_series(HypParams(0.5, 0.5, -2.0), 0.3)

    def test_termination_before_c_pole_allowed(self):
        # a = -2 terminates at n = 2 before the c = -3 pole at n = 4
        r = f21_series(HypParams(-2, 1.5, -3.0), 0.4)
        assert r.value == pytest.approx(poly_2f1_oracle(-2, 1.5, -3.0, 0.4))

    def test_divergent_argument_rejected(self):
        with pytest.raises(ConvergenceError):
            f21_series(HypParams(0.5, 0.5, 1.5), 1.2)

    def test_tail_estimate_below_tol(self):
        r = f21_series(HypParams(0.3, 1.7, 2.9), 0.6, tol=1e-10)
        assert r.tail_estimate <= 1e-10


class TestF21:
    def test_log_form_left_of_disk(self):
        r = f21(HypParams(1, 1, 2), -3.0)
        assert abs(r.value - math.log(4.0) / 3.0) < 1e-12

    def test_unit_at_origin(self):
        assert f21(HypParams(0.5, 0.7, 1.3), 0.0).value == 1.0

    def test_log_form_far_field(self):
        w = 0.5 + 10.0j
        want = -cmath.log(1.0 - w) / w
        assert abs(f21(HypParams(1, 1, 2), w).value - want) < 1e-11 * abs(want)

    def test_triple_point(self):
        # all candidate arguments have modulus 1 here; continuation covers it
        w = cmath.exp(1j * math.pi / 3.0)
        got = f21(HypParams(1, 1, 2), w).value
        want = -cmath.log(1.0 - w) / w
        assert abs(got - want) < 1e-11

    def test_cut_rejected(self):
        with pytest.raises(BranchCutError):
            f21(HypParams(0.5, 0.5, 1.5), 1.7)
        with pytest.raises(BranchCutError):
            f21(HypParams(0.5, 0.5, 1.5), 1.0)

    def test_polynomial_any_argument(self):
        want = poly_2f1_oracle(-3, 2.2, 0.7, 5.5)
        assert f21(HypParams(-3, 2.2, 0.7), 5.5).value == pytest.approx(want)

    @pytest.mark.parametrize("w", [0.3 + 0.4j, -0.8, 0.7j, 2.5j, -4.0 + 1.0j,
                                   0.95, 1.0 + 1.0j, -20.0])
    def test_route_consistency_log_form(self, w):
        want = -cmath.log(1.0 - w) / w
        got = f21(HypParams(1, 1, 2), w).value
        assert abs(got - want) <= 1e-11 * (1.0 + abs(want))


EULER_SAMPLES = [
    (0.3, 0.7, 1.9, 0.5 + 0.4j),
    (-1.2, 2.1, 0.8, -0.6 + 0.2j),
    (1.4 + 0.3j, 0.2 - 0.5j, 2.5 + 0.1j, 0.3 - 0.6j),
    (2.2, -0.4, 1.1, -0.75),
    (0.9, 1.8, 3.3, 0.78j),
]


class TestTransformIdentities:
    @pytest.mark.parametrize("a,b,c,w", EULER_SAMPLES)
    def test_euler(self, a, b, c, w):
        lhs = f21(HypParams(a, b, c), w).value
        pref = (1.0 - w) ** complex(c - a - b)
        rhs = pref * f21(HypParams(c - a, c - b, c), w).value
        assert rel_diff(lhs, rhs) < 1e-9

    @pytest.mark.parametrize("a,b,c,w", EULER_SAMPLES)
    def test_pfaff_a(self, a, b, c, w):
        lhs = f21(HypParams(a, b, c), w).value
        rhs = (1.0 - w) ** complex(-a) * f21(HypParams(a, c - b, c), w / (w - 1.0)).value
        assert rel_diff(lhs, rhs) < 1e-9

    @pytest.mark.parametrize("a,b,c,w", EULER_SAMPLES)
    def test_pfaff_b(self, a, b, c, w):
        lhs = f21(HypParams(a, b, c), w).value
        rhs = (1.0 - w) ** complex(-b) * f21(HypParams(b, c - a, c), w / (w - 1.0)).value
        assert rel_diff(lhs, rhs) < 1e-9


class TestRegularized:
    def test_scaling(self):
        r = f21_regularized(HypParams(1, 1, 2), 0.5)
        assert abs(r.value - 2.0 * math.log(2.0)) < 1e-12

    def test_unit(self):
        assert f21_regularized(HypParams(2.3, -0.7, 1.0), 0.0).value == pytest.approx(1.0)

    def test_nonpositive_c_limit(self):
        # limit value matches the perturbed ratio at c = 1e-6
        got = f21_regularized(HypParams(1, 1, 0), 0.5).value
        eps = 1e-6
        approx = f21_regularized(HypParams(1, 1, eps), 0.5).value
        assert abs(got - approx) < 1e-4
        got2 = f21_regularized(HypParams(0.7, -1.9, -2.0), 0.3).value
        approx2 = f21_regularized(HypParams(0.7, -1.9, -2.0 + eps), 0.3).value
        assert abs(got2 - approx2) < 1e-4


def _cut_param_sets(n):
    out = []
    reals = kronecker_reals(3 * n, -2.5, 3.5)
    i = 0
    while len(out) < n:
        a, b, c = reals[3 * i % len(reals)], reals[(3 * i + 1) % len(reals)], \
            reals[(3 * i + 2) % len(reals)] + 1.3
        i += 1
        if min(abs(a - b - round(a - b)), abs(c - a - b - round(c - a - b))) < 0.05:
            continue
        if abs(c - round(c)) < 0.05 and round(c) <= 0:
            continue
        if min(abs(a - round(a)), abs(b - round(b))) < 0.02:
            continue
        out.append((a, b, c))
    return out


class TestCutValues:
    def test_log_case_above_below(self):
        # 2F1(1,1;2;2 +- i0) = -log(-1 -+ i0)/2 = +- i pi / 2
        above = f21_cut(HypParams(1, 1, 2), 2.0, CutSide.ABOVE).value
        below = f21_cut(HypParams(1, 1, 2), 2.0, CutSide.BELOW).value
        assert abs(above - 0.5j * math.pi) < 1e-10
        assert abs(below + 0.5j * math.pi) < 1e-10

    def test_polynomial_has_no_cut(self):
        want = poly_2f1_oracle(-2, 5.0, 1.0, 3.0)
        above = f21_cut(HypParams(-2, 5, 1), 3.0, CutSide.ABOVE).value
        below = f21_cut(HypParams(-2, 5, 1), 3.0, CutSide.BELOW).value
        plain = f21(HypParams(-2, 5, 1), 3.0).value
        assert above == below == pytest.approx(want)
        assert want.real == pytest.approx(106.0)
        assert plain == pytest.approx(want)

    def test_four_formulas_agree(self):
        for a, b, c in _cut_param_sets(25):
            for x in (1.17, 2.4, 4.6):
                vals = [f21_cut_via(k, HypParams(a, b, c), x, CutSide.ABOVE).value
                        for k in (1, 2, 3, 4)]
                for i in range(4):
                    for j in range(i + 1, 4):
                        assert rel_diff(vals[i], vals[j]) < 1e-8

    def test_matches_off_axis_limit(self):
        for a, b, c in _cut_param_sets(10):
            x = 2.3
            cut = f21_cut(HypParams(a, b, c), x, CutSide.ABOVE).value
            near = f21(HypParams(a, b, c), complex(x, 1e-7)).value
            assert rel_diff(cut, near) < 1e-5

    def test_schwarz_reflection(self):
        for a, b, c in _cut_param_sets(10):
            above = f21_cut(HypParams(a, b, c), 1.8, CutSide.ABOVE).value
            below = f21_cut(HypParams(a, b, c), 1.8, CutSide.BELOW).value
            assert abs(above - below.conjugate()) <= 1e-12 * (1.0 + abs(above))

    def test_degenerate_formula_raises_per_theorem(self):
        with pytest.raises(DegenerateParameterError):
            f21_cut_via(1, HypParams(1.0, 2.0, 0.7), 2.0, CutSide.ABOVE)
        with pytest.raises(DegenerateParameterError):
            f21_cut_via(2, HypParams(0.4, 0.6, 2.0), 2.0, CutSide.ABOVE)

    def test_x_inside_disk_rejected(self):
        from ferrox.errors import DomainError
        with pytest.raises(DomainError):
            f21_cut(HypParams(0.5, 0.5, 1.5), 0.5, CutSide.ABOVE)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(
    st.floats(-2.0, 2.0), st.floats(-2.0, 2.0),
    st.floats(0.3, 3.0), st.floats(0.05, 0.8), st.floats(-3.1, 3.1),
)
def test_euler_identity_fuzz(a, b, c, r, phi):
    w = r * cmath.exp(1j * phi)
    if abs(c - round(c)) < 1e-2 and round(c) <= 0:
        return
    lhs = f21(HypParams(a, b, c), w).value
    rhs = (1.0 - w) ** complex(c - a - b) * f21(HypParams(c - a, c - b, c), w).value
    assert rel_diff(lhs, rhs) < 1e-9
