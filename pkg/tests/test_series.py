"""Arctangent engines, formula evaluation, and the pi reference."""

from fractions import Fraction

import mpmath
import pytest

from conftest import mp_to_fixed
from pimachin import series
from pimachin.errors import (
    DomainError,
    PrecisionExhaustedError,
    ReferenceInconsistencyError,
)
from pimachin.fixed import FixedReal, fx_agree_digits
from pimachin.machin import MachinFormula, two_term_formula
from pimachin.series import (
    ENGINES,
    arctan,
    arctan_euler,
    arctan_fast,
    arctan_maclaurin,
    eval_pi,
    pi_reference,
)

ARGS = [
    Fraction(1, 5),
    Fraction(1, 239),
    Fraction(-1, 7),
    Fraction(2, 3),
]


class TestEngineAgreement:
    @pytest.mark.parametrize("x", ARGS)
    @pytest.mark.parametrize("p", [40, 200])
    def test_against_mpmath(self, x, p, mp_atan):
        want = mp_atan(x, p)
        for engine in ENGINES:
            got = arctan(x, p, engine).value
            assert fx_agree_digits(got, want) >= p - 1, engine

    def test_engines_agree_pairwise(self):
        p = 500
        x = Fraction(3, 7)
        values = [arctan(x, p, e).value for e in ENGINES]
        for v in values[1:]:
            assert fx_agree_digits(values[0], v) >= p - 1

    def test_fixedreal_input(self):
        x = FixedReal.from_str("0.125")
        a = arctan(x, 80, "euler").value
        b = arctan(Fraction(1, 8), 80, "accelerated").value
        assert fx_agree_digits(a, b) >= 79

    def test_negative_argument_is_odd(self):
        p = 60
        for engine in ENGINES:
            pos = arctan(Fraction(2, 9), p, engine).value
            neg = arctan(Fraction(-2, 9), p, engine).value
            assert fx_agree_digits(pos, -neg) >= p - 1


class TestEngineDomains:
    def test_maclaurin_rejects_outside_unit(self):
        with pytest.raises(DomainError):
            arctan_maclaurin(Fraction(3, 2), 30)

    def test_euler_accepts_outside_unit(self, mp_atan):
        got = arctan_euler(Fraction(7, 2), 50).value
        assert fx_agree_digits(got, mp_atan(Fraction(7, 2), 50)) >= 49

    def test_fast_rejects_zero(self):
        with pytest.raises(DomainError):
            arctan_fast(Fraction(0), 30)

    def test_unit_argument(self, mp_atan):
        # arctan(1) = pi/4 through the transformed engines; the plain
        # series cannot get there in bounded time
        want = mp_atan(Fraction(1), 80)
        assert fx_agree_digits(arctan_euler(Fraction(1), 80).value, want) >= 79
        assert fx_agree_digits(arctan_fast(Fraction(1), 80).value, want) >= 79
        with pytest.raises(PrecisionExhaustedError):
            arctan_maclaurin(Fraction(1), 30)

    def test_zero_shortcuts(self):
        assert arctan_maclaurin(Fraction(0), 30).value.is_zero()
        assert arctan_euler(Fraction(0), 30).value.is_zero()

    def test_fast_tiny_argument(self, mp_atan):
        x = Fraction(1, 10**40)
        got = arctan_fast(x, 60).value
        assert fx_agree_digits(got, mp_atan(x, 60)) >= 59

    def test_unknown_engine(self):
        with pytest.raises(ValueError):
            arctan(Fraction(1, 5), 30, "chebyshev")


class TestConvergenceOrdering:
    def test_terms_ordering_at_one_fifth(self):
        p = 1000
        m = arctan_maclaurin(Fraction(1, 5), p).terms_used
        e = arctan_euler(Fraction(1, 5), p).terms_used
        a = arctan_fast(Fraction(1, 5), p).terms_used
        assert a < e < m

    def test_terms_ordering_at_one_tenth(self):
        p = 1000
        e = arctan_euler(Fraction(1, 10), p).terms_used
        a = arctan_fast(Fraction(1, 10), p).terms_used
        assert a < e

    def test_maclaurin_term_count_scales_with_log(self):
        # ~p / (2 log10 5) terms at x = 1/5
        n = arctan_maclaurin(Fraction(1, 5), 700).terms_used
        assert 480 <= n <= 540


class TestEvalPi:
    def test_machin_formula(self, mp_pi):
        f = MachinFormula(terms=[(4, Fraction(1, 5)), (-1, Fraction(1, 239))])
        for engine in ENGINES:
            got = eval_pi(f, 120, engine)
            assert fx_agree_digits(got, mp_pi(120)) >= 119

    def test_generated_formula(self, mp_pi):
        got = eval_pi(two_term_formula(5), 200)
        assert fx_agree_digits(got, mp_pi(200)) >= 199

    def test_rejects_invalid_formula(self):
        bad = MachinFormula(terms=[(4, Fraction(1, 5)), (-1, Fraction(1, 259))])
        with pytest.raises(DomainError):
            eval_pi(bad, 50)

    def test_linearity_of_coefficients(self):
        # splitting 4*atan(1/5) into two 2*atan(1/5) terms changes nothing
        p = 90
        a = MachinFormula(terms=[(4, Fraction(1, 5)), (-1, Fraction(1, 239))])
        b = MachinFormula(
            terms=[(2, Fraction(1, 5)), (2, Fraction(1, 5)), (-1, Fraction(1, 239))]
        )
        assert fx_agree_digits(eval_pi(a, p), eval_pi(b, p)) >= p - 1


class TestPiReference:
    def test_against_mpmath(self, mp_pi):
        for p in (16, 100, 3000):
            assert fx_agree_digits(pi_reference(p), mp_pi(p)) >= p - 1

    def test_prefix_consistency(self):
        lo = pi_reference(20)
        hi = pi_reference(500)
        assert fx_agree_digits(lo, hi.rescale(20)) >= 19

    def test_minimum_precision(self):
        with pytest.raises(ValueError):
            pi_reference(10)

    def test_fault_injection_trips_cross_check(self, monkeypatch):
        real = series.arctan_euler

        def corrupted(x, p):
            # a 10^-60 bias: small enough to slip past the 50-digit formula
            # sanity check, large enough to break the 100-digit cross-check
            r = real(x, p)
            return type(r)(r.value + FixedReal(1, 60).rescale(r.value.scale),
                           r.terms_used)

        monkeypatch.setattr(series, "arctan_euler", corrupted)
        series._reference_cache.clear()
        try:
            with pytest.raises(ReferenceInconsistencyError):
                pi_reference(100)
        finally:
            series._reference_cache.clear()

    def test_cache_returns_prefix(self):
        series._reference_cache.clear()
        try:
            hi = pi_reference(300)
            lo = pi_reference(50)
            assert fx_agree_digits(lo, hi.rescale(50)) == 50
        finally:
            series._reference_cache.clear()
