"""Nested radicals of 2: the sequence c_n, the integer gamma_k, and the
radical ratio sqrt(2 - c_{n-1}) / c_n.

c_0 = 0 and c_n = sqrt(2 + c_{n-1}) converge monotonically to 2, so the
ratio c_k / sqrt(2 - c_{k-1}) blows up and its floor gamma_k supplies the
first arctangent argument of the generated two-term formulas.
"""

from __future__ import annotations

from functools import lru_cache

from .fixed import FixedReal, fx_div, fx_floor, fx_sqrt

_TWO = FixedReal.from_int(2)


class RadicalSequence:
    """Memoized c_0..c_n at one working precision."""

    def __init__(self, precision: int):
        if precision < 1:
            raise ValueError("precision must be positive")
        self.precision = precision
        self._values = [FixedReal(0, precision)]

    def c(self, n: int) -> FixedReal:
        if n < 0:
            raise ValueError("index must be nonnegative")
        while len(self._values) <= n:
            prev = self._values[-1]
            self._values.append(fx_sqrt(_TWO + prev, self.precision))
        return self._values[n]

    def ratio(self, n: int) -> FixedReal:
        """sqrt(2 - c_{n-1}) / c_n at the sequence precision."""
        if n < 1:
            raise ValueError("ratio index must be >= 1")
        p = self.precision
        return fx_div(fx_sqrt(_TWO - self.c(n - 1), p), self.c(n), p)


def nested_c(n: int, p: int) -> FixedReal:
    """c_n at precision p (>= 16)."""
    if p < 16:
        raise ValueError("nested_c requires p >= 16")
    return RadicalSequence(p).c(n)


def radical_ratio(n: int, p: int) -> FixedReal:
    return RadicalSequence(p).ratio(n)


@lru_cache(maxsize=None)
def gamma(k: int) -> int:
    """floor(c_k / sqrt(2 - c_{k-1})), computed with adaptive precision.

    Two evaluations 32 guard digits apart must yield the same floor before
    the value is trusted; otherwise the precision is doubled.  The ratio is
    irrational, so this terminates.
    """
    if k < 1:
        raise ValueError("gamma requires k >= 1")
    # gamma_k has ~0.3k digits and the subtraction 2 - c_{k-1} loses ~0.6k,
    # so 2k digits leaves comfortable headroom on the first attempt.
    p = max(2 * k, 64)
    while True:
        f1 = fx_floor(_gamma_ratio(k, p))
        f2 = fx_floor(_gamma_ratio(k, p + 32))
        if f1 == f2:
            return f1
        p *= 2


def _gamma_ratio(k: int, p: int) -> FixedReal:
    seq = RadicalSequence(p)
    return fx_div(seq.c(k), fx_sqrt(_TWO - seq.c(k - 1), p), p)
