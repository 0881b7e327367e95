"""Exact rational and Gaussian-integer arithmetic.

Rationals are plain ``fractions.Fraction`` values: they normalize eagerly
on construction (gcd reduced, positive denominator), which is exactly the
invariant the formula-generation code relies on.  ``GaussianInt`` supplies
the complex-integer product used to certify Machin-like formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

BigRational = Fraction


def rat_floor(q: Fraction) -> int:
    """Greatest integer <= q (floor toward -infinity, never truncation)."""
    return math.floor(q)


@dataclass(frozen=True)
class GaussianInt:
    """A complex integer a + b*i with exact arbitrary-precision parts."""

    re: int
    im: int

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def __str__(self) -> str:
        if self.im < 0:
            return f"{self.re}-{-self.im}i"
        return f"{self.re}+{self.im}i"


GAUSS_ONE = GaussianInt(1, 0)


def gauss_pow(z: GaussianInt, e: int) -> GaussianInt:
    """z**e by binary exponentiation; e must be nonnegative."""
    if e < 0:
        raise ValueError("gauss_pow: exponent must be nonnegative")
    result = GAUSS_ONE
    base = z
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:  # skip the final squaring, it can double a huge digit count
            base = base * base
    return result
