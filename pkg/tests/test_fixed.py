"""Fixed-point core: construction, truncation semantics, kernels."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pimachin.errors import DivisionByZeroError, DomainError
from pimachin.fixed import (
    FixedReal,
    fx_agree_digits,
    fx_cos,
    fx_div,
    fx_floor,
    fx_mul,
    fx_sqrt,
)
from conftest import mp_to_fixed


class TestConstruction:
    def test_from_int(self):
        x = FixedReal.from_int(7, 3)
        assert x.man == 7000 and x.scale == 3
        assert x.to_decimal_string() == "7.000"

    def test_from_fraction_truncates_toward_zero(self):
        assert FixedReal.from_fraction(Fraction(2, 3), 4).man == 6666
        assert FixedReal.from_fraction(Fraction(-2, 3), 4).man == -6666

    def test_from_str(self):
        assert FixedReal.from_str("1.25").man == 125
        assert FixedReal.from_str("-0.5").man == -5
        assert FixedReal.from_str("42").scale == 0
        assert FixedReal.from_str("+3.5", 3).man == 3500

    def test_from_str_rejects_garbage(self):
        for bad in ("abc", "1.2.3", "1e5", ""):
            with pytest.raises(ValueError):
                FixedReal.from_str(bad)

    def test_negative_scale_rejected(self):
        with pytest.raises(ValueError):
            FixedReal(1, -1)

    def test_immutable(self):
        x = FixedReal.from_int(1)
        with pytest.raises(AttributeError):
            x.man = 5


class TestScaleAndArithmetic:
    def test_rescale_up_is_exact(self):
        x = FixedReal(125, 2).rescale(5)
        assert x.man == 125000 and x.scale == 5

    def test_rescale_down_truncates_toward_zero(self):
        assert FixedReal(-199, 2).rescale(0).man == -1
        assert FixedReal(199, 2).rescale(0).man == 1

    def test_add_sub_align_scales(self):
        a = FixedReal.from_str("1.5")
        b = FixedReal.from_str("0.25")
        assert (a + b).to_decimal_string() == "1.75"
        assert (a - b).to_decimal_string() == "1.25"

    def test_int_multiplication_exact(self):
        assert (FixedReal.from_str("0.333") * 3).to_decimal_string() == "0.999"
        assert (2 * FixedReal.from_str("-1.1")).to_decimal_string() == "-2.2"

    def test_comparisons_ignore_scale(self):
        assert FixedReal(15, 1) == FixedReal(1500, 3)
        assert FixedReal(15, 1) < FixedReal(16, 1)
        assert FixedReal(-1, 0) <= FixedReal(0, 5)

    def test_neg_abs(self):
        x = FixedReal.from_str("-2.5")
        assert (-x).to_decimal_string() == "2.5"
        assert abs(x) == -x

    def test_to_fraction_round_trip(self):
        q = Fraction(-355, 113)
        x = FixedReal.from_fraction(q, 30)
        assert abs(x.to_fraction() - q) < Fraction(1, 10**30)


class TestKernels:
    def test_fx_floor_toward_minus_infinity(self):
        assert fx_floor(FixedReal.from_str("-0.5")) == -1
        assert fx_floor(FixedReal.from_str("2.9")) == 2
        assert fx_floor(FixedReal.from_int(3)) == 3

    def test_fx_mul_against_fraction(self):
        a = FixedReal.from_fraction(Fraction(22, 7), 30)
        b = FixedReal.from_fraction(Fraction(-3, 11), 30)
        got = fx_mul(a, b, 25)
        want = FixedReal.from_fraction(Fraction(22, 7) * Fraction(-3, 11), 25)
        assert fx_agree_digits(got, want) >= 24

    def test_fx_div_against_fraction(self):
        a = FixedReal.from_int(1, 10)
        b = FixedReal.from_int(7, 10)
        got = fx_div(a, b, 40)
        want = FixedReal.from_fraction(Fraction(1, 7), 40)
        assert fx_agree_digits(got, want) >= 39

    def test_fx_div_by_zero(self):
        with pytest.raises(DivisionByZeroError):
            fx_div(FixedReal.from_int(1), FixedReal(0, 5), 10)

    def test_fx_sqrt_matches_mpmath(self):
        for n in (2, 3, 5, 10, 12345):
            got = fx_sqrt(FixedReal.from_int(n), 60)
            with mpmath.workdps(90):
                want = mp_to_fixed(mpmath.sqrt(n), 60)
            assert fx_agree_digits(got, want) >= 59

    def test_fx_sqrt_negative(self):
        with pytest.raises(DomainError):
            fx_sqrt(FixedReal.from_int(-1), 10)

    def test_fx_sqrt_squares_back(self):
        x = FixedReal.from_fraction(Fraction(17, 3), 50)
        r = fx_sqrt(x, 50)
        assert fx_agree_digits(fx_mul(r, r, 50), x) >= 48


class TestCos:
    @pytest.mark.parametrize("p", [30, 200, 3500])
    @pytest.mark.parametrize(
        "literal", ["0", "0.25", "1.5707963267948966", "-3.9", "2.718281828", "4"]
    )
    def test_matches_mpmath(self, p, literal):
        x = FixedReal.from_str(literal, p)
        got = fx_cos(x, p)
        with mpmath.workdps(p + 25):
            want = mp_to_fixed(mpmath.cos(mpmath.mpf(literal)), p)
        assert fx_agree_digits(got, want) >= p - 1

    def test_rejects_large_argument(self):
        with pytest.raises(DomainError):
            fx_cos(FixedReal.from_str("4.01"), 20)

    def test_halved_and_plain_paths_agree(self):
        # straddle the internal threshold with the same mathematical input
        x = FixedReal.from_str("1.234567")
        lo = fx_cos(x, 2999)
        hi = fx_cos(x, 3500).rescale(2999)
        assert fx_agree_digits(lo, hi) >= 2997


class TestAgreeDigits:
    def test_exact_match_returns_min_scale(self):
        a = FixedReal(1500, 3)
        b = FixedReal(150000, 5)
        assert fx_agree_digits(a, b) == 3

    def test_counts_leading_agreement(self):
        a = FixedReal.from_str("3.14159265")
        b = FixedReal.from_str("3.14159000")
        assert fx_agree_digits(a, b) == 5

    def test_power_of_ten_difference(self):
        a = FixedReal(10000, 4)  # 1.0000
        b = FixedReal(10001, 4)  # diff exactly 10^-4
        assert fx_agree_digits(a, b) == 4

    def test_clamped_at_zero(self):
        assert fx_agree_digits(FixedReal.from_int(0), FixedReal.from_int(1000)) == 0


fractions_st = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=10**6
)


@settings(max_examples=300, deadline=None)
@given(fractions_st, fractions_st, st.sampled_from([20, 37, 61]))
def test_guard_digit_property(qa, qb, p):
    """Kernel outputs at scale p sit within one ulp of the exact value."""
    a = FixedReal.from_fraction(qa, p + 40)
    b = FixedReal.from_fraction(qb, p + 40)
    checks = [(fx_mul(a, b, p), qa * qb)]
    if abs(qb) >= Fraction(1, 1000):
        checks.append((fx_div(a, b, p), qa / qb))
    for got, exact in checks:
        want = FixedReal.from_fraction(exact, p)
        assert fx_agree_digits(got, want) >= p - 1
    if qa >= 0:
        lo = fx_sqrt(a, p)
        hi = fx_sqrt(a, p + 40).rescale(p)
        assert fx_agree_digits(lo, hi) >= p - 1
