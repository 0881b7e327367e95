"""Exact arithmetic: rationals, floors, Gaussian integers."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pimachin.exact import BigRational, GaussianInt, gauss_pow, rat_floor


def test_big_rational_is_normalized():
    q = BigRational(6, -4)
    assert q.numerator == -3 and q.denominator == 2


@given(st.integers(-10**12, 10**12), st.integers(1, 10**9))
def test_rat_floor_matches_math_floor(n, d):
    q = Fraction(n, d)
    f = rat_floor(q)
    assert f <= q < f + 1
    assert f == math.floor(q)


def test_rat_floor_is_floor_not_truncation():
    assert rat_floor(Fraction(-1, 2)) == -1
    assert rat_floor(Fraction(1, 2)) == 0
    assert rat_floor(Fraction(-4, 2)) == -2


gauss = st.builds(GaussianInt, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


@given(gauss, gauss)
def test_gaussian_mul_matches_complex(z, w):
    zc = complex(z.re, z.im)
    wc = complex(w.re, w.im)
    prod = z * w
    ref = (z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re)
    assert (prod.re, prod.im) == ref
    # cross-check the float path for small operands
    assert abs(complex(prod.re, prod.im) - zc * wc) < 1e-3 * (1 + abs(zc * wc))


@given(gauss, gauss, gauss)
def test_gaussian_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(gauss)
def test_conjugate_involution_and_norm(z):
    assert z.conjugate().conjugate() == z
    n = z * z.conjugate()
    assert n.im == 0 and n.re == z.re**2 + z.im**2


def test_gaussian_str():
    assert str(GaussianInt(2, 2)) == "2+2i"
    assert str(GaussianInt(-1, -3)) == "-1-3i"
    assert str(GaussianInt(0, 0)) == "0+0i"


@given(gauss, st.integers(0, 12))
def test_gauss_pow_matches_repeated_product(z, e):
    expected = GaussianInt(1, 0)
    for _ in range(e):
        expected = expected * z
    assert gauss_pow(z, e) == expected


def test_gauss_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        gauss_pow(GaussianInt(2, 1), -1)


def test_gauss_pow_large_exponent():
    # (2+i)^32 computed through Python complex-free integer arithmetic
    z = gauss_pow(GaussianInt(2, 1), 32)
    w = GaussianInt(2, 1)
    acc = GaussianInt(1, 0)
    for _ in range(32):
        acc = acc * w
    assert z == acc
