"""Decimal fixed-point big-real arithmetic with guard digits.

A ``FixedReal`` is an integer mantissa scaled by a power of ten:
``value = man * 10**(-scale)``.  All composite operations carry G guard
digits (default 10, override with the ``GUARD_DIGITS`` environment
variable) and round toward zero, so every result obeys
``|result - true value| <= 10**(-scale + 1)``.

Mantissas are gmpy2 ``mpz`` integers: GMP's subquadratic multiplication
is what makes the 10^5-digit runs practical in pure Python.
"""

from __future__ import annotations

import os
from fractions import Fraction

from gmpy2 import isqrt, mpz

from .errors import DivisionByZeroError, DomainError

DEFAULT_GUARD = 10

_TEN = mpz(10)
_pow10_cache: dict[int, "mpz"] = {}


def guard_digits() -> int:
    return int(os.environ.get("GUARD_DIGITS", DEFAULT_GUARD))


def pow10(n: int):
    v = _pow10_cache.get(n)
    if v is None:
        v = _TEN**n
        if len(_pow10_cache) > 256:
            _pow10_cache.clear()
        _pow10_cache[n] = v
    return v


def _tdiv(a, b):
    """Integer division truncated toward zero."""
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


class FixedReal:
    """Immutable decimal fixed-point number: mantissa * 10**(-scale)."""

    __slots__ = ("man", "scale")

    def __init__(self, man, scale: int):
        if scale < 0:
            raise ValueError("FixedReal scale must be nonnegative")
        object.__setattr__(self, "man", mpz(man))
        object.__setattr__(self, "scale", int(scale))

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("FixedReal is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int, p: int = 0) -> "FixedReal":
        return cls(mpz(n) * pow10(p), p)

    @classmethod
    def from_fraction(cls, q, p: int) -> "FixedReal":
        q = Fraction(q)
        return cls(_tdiv(mpz(q.numerator) * pow10(p), q.denominator), p)

    @classmethod
    def from_str(cls, s: str, p: int | None = None) -> "FixedReal":
        s = s.strip()
        neg = s.startswith("-")
        if neg or s.startswith("+"):
            s = s[1:]
        if "." in s:
            intpart, fracpart = s.split(".", 1)
        else:
            intpart, fracpart = s, ""
        if not (intpart + fracpart).isdigit():
            raise ValueError(f"not a decimal literal: {s!r}")
        man = int(intpart + fracpart or "0")
        x = cls(-man if neg else man, len(fracpart))
        return x if p is None else x.rescale(p)

    # -- scale management --------------------------------------------------

    def rescale(self, p: int) -> "FixedReal":
        """Return the same value at scale p (truncating toward zero)."""
        if p == self.scale:
            return self
        if p > self.scale:
            return FixedReal(self.man * pow10(p - self.scale), p)
        return FixedReal(_tdiv(self.man, pow10(self.scale - p)), p)

    def _aligned(self, other: "FixedReal"):
        s = max(self.scale, other.scale)
        a = self.man * pow10(s - self.scale) if s != self.scale else self.man
        b = other.man * pow10(s - other.scale) if s != other.scale else other.man
        return a, b, s

    # -- arithmetic (exact where possible) ---------------------------------

    def __add__(self, other: "FixedReal") -> "FixedReal":
        a, b, s = self._aligned(other)
        return FixedReal(a + b, s)

    def __sub__(self, other: "FixedReal") -> "FixedReal":
        a, b, s = self._aligned(other)
        return FixedReal(a - b, s)

    def __neg__(self) -> "FixedReal":
        return FixedReal(-self.man, self.scale)

    def __abs__(self) -> "FixedReal":
        return FixedReal(abs(self.man), self.scale)

    def __mul__(self, n: int) -> "FixedReal":
        """Exact multiplication by a plain integer."""
        if not isinstance(n, int):
            return NotImplemented
        return FixedReal(self.man * n, self.scale)

    __rmul__ = __mul__

    # -- comparisons -------------------------------------------------------

    def _cmp(self, other: "FixedReal") -> int:
        a, b, _ = self._aligned(other)
        return (a > b) - (a < b)

    def __eq__(self, other) -> bool:
        return isinstance(other, FixedReal) and self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.to_fraction())

    # -- conversion --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.man == 0

    def to_fraction(self) -> Fraction:
        return Fraction(int(self.man), 10**self.scale)

    def to_decimal_string(self) -> str:
        """Canonical form ``-?d+.d{scale}`` with no exponent."""
        digits = str(abs(self.man)).rjust(self.scale + 1, "0")
        sign = "-" if self.man < 0 else ""
        if self.scale == 0:
            return sign + digits
        return f"{sign}{digits[:-self.scale]}.{digits[-self.scale:]}"

    def __repr__(self) -> str:
        return f"FixedReal({self.to_decimal_string()})"


FX_ZERO = FixedReal(0, 0)
FX_ONE = FixedReal(1, 0)


def fx_floor(x: FixedReal) -> int:
    """Floor toward -infinity as an exact integer."""
    return int(x.man // pow10(x.scale))


def fx_mul(a: FixedReal, b: FixedReal, p: int) -> FixedReal:
    return FixedReal(a.man * b.man, a.scale + b.scale).rescale(p)


def fx_div(a: FixedReal, b: FixedReal, p: int) -> FixedReal:
    if b.man == 0:
        raise DivisionByZeroError("fx_div: division by zero")
    e = p + b.scale - a.scale
    num = a.man * pow10(e) if e >= 0 else _tdiv(a.man, pow10(-e))
    return FixedReal(_tdiv(num, b.man), p)


def fx_sqrt(x: FixedReal, p: int) -> FixedReal:
    """Integer-Newton square root: isqrt of the mantissa rescaled to 2p."""
    if x.man < 0:
        raise DomainError("fx_sqrt: negative input")
    e = 2 * p - x.scale
    v = x.man * pow10(e) if e >= 0 else x.man // pow10(-e)
    return FixedReal(isqrt(v), p)


# Beyond roughly this many digits the plain cosine series is dominated by
# huge-mantissa multiplications; argument halving trades series terms for
# cheap squarings (cos 2y = 2 cos^2 y - 1) and wins decisively.
_COS_HALVING_THRESHOLD = 3000


def _tshift(a, b: int):
    """Right shift truncated toward zero."""
    return -((-a) >> b) if a < 0 else a >> b


def fx_cos(x: FixedReal, p: int) -> FixedReal:
    """Maclaurin cosine for |x| <= 4 (no general argument reduction).

    Internally the series runs in binary fixed point (mantissa * 2^-bits)
    so that renormalisation after each multiply is a shift instead of a
    division by a power of ten.
    """
    if abs(x.man) > 4 * pow10(x.scale):
        raise DomainError("fx_cos: |x| > 4 is outside the supported range")
    G = guard_digits()
    halvings = 0
    if p > _COS_HALVING_THRESHOLD:
        # Balances series terms against un-halving squarings; each halving
        # costs about 0.602 digits of precision, covered by the wp bump.
        halvings = int((p / 0.602) ** 0.5)
    wp = p + G + halvings + 10
    bits = int(wp * 3.3219280948873626) + 16
    xs = x.rescale(wp)
    y = _tdiv(xs.man << (bits - halvings), pow10(wp))
    unit = mpz(1) << bits
    y2 = _tshift(y * y, bits)
    thr = unit // pow10(p + G)
    s = unit
    t = unit
    n = 0
    while True:
        n += 1
        t = -_tdiv(_tshift(t * y2, bits), (2 * n - 1) * (2 * n))
        s += t
        if -thr < t < thr:
            break
    for _ in range(halvings):
        s = _tshift(s * s, bits - 1) - unit
    return FixedReal(_tshift(s * pow10(wp), bits), wp).rescale(p)


def fx_agree_digits(a: FixedReal, b: FixedReal) -> int:
    """floor(-log10 |a - b|), clamped to >= 0; min scale on exact match."""
    am, bm, s = a._aligned(b)
    d = abs(am - bm)
    if d == 0:
        return min(a.scale, b.scale)
    ndig = d.num_digits(10)
    agree = s - ndig
    if d == pow10(ndig - 1):  # exact power of ten: -log10 is an integer
        agree += 1
    return max(agree, 0)
