"""Shared helpers: mpmath-backed oracles independent of the package's
own fixed-point arithmetic.
"""

import mpmath
import pytest

from pimachin.fixed import FixedReal


def mp_to_fixed(x, p: int) -> FixedReal:
    """Truncate an mpmath value to a FixedReal at scale p."""
    with mpmath.workdps(p + 25):
        man = int(mpmath.floor(abs(x) * mpmath.mpf(10) ** p))
    return FixedReal(-man if x < 0 else man, p)


@pytest.fixture
def mp_pi():
    def _pi(p: int) -> FixedReal:
        with mpmath.workdps(p + 25):
            return mp_to_fixed(+mpmath.pi, p)

    return _pi


@pytest.fixture
def mp_atan():
    def _atan(x, p: int) -> FixedReal:
        with mpmath.workdps(p + 25):
            return mp_to_fixed(mpmath.atan(mpmath.mpf(x.numerator) / x.denominator
                                           if hasattr(x, "numerator") else x), p)

    return _atan
