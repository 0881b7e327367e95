"""Approximation drivers: rational approximations of pi, the cubic
cosine iteration, fixed-precision v-iteration, nested-radical digit
extraction, radical arctangent sums, and the arbitrary-convergence
two-term evaluation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import DivergenceError, DomainError, PrecisionExhaustedError
from .fixed import (
    FixedReal,
    fx_agree_digits,
    fx_cos,
    fx_div,
    fx_sqrt,
    guard_digits,
    pow10,
)
from .radicals import RadicalSequence, gamma
from .series import arctan, pi_reference


@dataclass
class ReportRow:
    iteration: int
    digits: int
    work: int  # terms or working precision, whichever drives the step
    wall_ms: int


@dataclass
class ConvergenceReport:
    rows: list

    CSV_HEADER = "iteration,digits,work,wall_ms"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for r in self.rows:
            lines.append(f"{r.iteration},{r.digits},{r.work},{r.wall_ms}")
        return "\n".join(lines) + "\n"

    def digit_column(self) -> list:
        return [r.digits for r in self.rows]


class Approximation(NamedTuple):
    value: FixedReal
    digits: int


class RadicalApproximation(NamedTuple):
    value: FixedReal
    reference: FixedReal
    digits: int


def _default_precision(k: int) -> int:
    """Default working precision: as many digits as gamma_k has."""
    return max(len(str(gamma(k))), 16)


# -- rational approximations ----------------------------------------------


def pi_rational_single(k: int) -> Approximation:
    """pi ~ 4 * 2^(k-1) / gamma_k, with correct-digit count."""
    if k < 2:
        raise DomainError("pi_rational_single requires k >= 2")
    p = max(2 * k, 64)
    value = FixedReal.from_fraction(Fraction(4 * 2 ** (k - 1), gamma(k)), p)
    return Approximation(value, fx_agree_digits(value, pi_reference(p)))


def pi_rational_double(k: int, p: Optional[int] = None) -> Approximation:
    """pi ~ 4 * (2^(k-1)/v_1 + (v_k - 1)/2) with fixed-precision v_k."""
    if k < 2:
        raise DomainError("pi_rational_double requires k >= 2")
    g = gamma(k)
    if p is None:
        p = 2 * len(str(g)) + 4  # twice the expected single-term digits
    G = guard_digits()
    vk = v_iter_fixed(g, k, p + G)
    first = FixedReal.from_fraction(Fraction(2 ** (k - 1), g), p + G)
    half_excess = FixedReal(_half(vk.man - pow10(vk.scale)), vk.scale)
    value = ((first + half_excess) * 4).rescale(p)
    return Approximation(value, fx_agree_digits(value, pi_reference(p + G)))


def _half(man):
    return man // 2 if man >= 0 else -((-man) // 2)


# -- fixed-precision v-iteration ------------------------------------------


def v_iter_fixed(v1: int, k: int, p: int) -> FixedReal:
    """k-1 applications of v <- (v - 1/v)/2 in fixed point at scale p."""
    if v1 < 2:
        raise DomainError("v_iter_fixed requires v1 >= 2")
    if k < 1:
        raise DomainError("v_iter_fixed requires k >= 1")
    v = FixedReal.from_int(v1, p)
    one = FixedReal.from_int(1, p)
    floor_tiny = pow10(2) if p >= 2 else 1  # |v| < 10^(-p+2) in mantissa units
    for _ in range(k - 1):
        if abs(v.man) < floor_tiny:
            raise PrecisionExhaustedError("v_iter_fixed: iterate vanished")
        diff = v - fx_div(one, v, p)
        v = FixedReal(_half(diff.man), p)
    return v


def _v_iter_fixed_keep(v1: int, k: int, keep: int, p: int):
    """As v_iter_fixed but also returns the intermediate v_keep."""
    v = FixedReal.from_int(v1, p)
    one = FixedReal.from_int(1, p)
    kept = v if keep == 1 else None
    for n in range(2, k + 1):
        if abs(v.man) < pow10(2):
            raise PrecisionExhaustedError("v iteration: iterate vanished")
        diff = v - fx_div(one, v, p)
        v = FixedReal(_half(diff.man), p)
        if n == keep:
            kept = v
    return v, kept


# -- cosine-hint and cubic iteration --------------------------------------

DEFAULT_CUBIC_SEED = FixedReal.from_str("1.572963")  # 3.145926/2, as published


def pi_cos_hint(k: int, p: int) -> FixedReal:
    """pi ~ 2 * (2^k/gamma_k + cos(2^k/gamma_k))."""
    if k < 2:
        raise DomainError("pi_cos_hint requires k >= 2")
    x = FixedReal.from_fraction(Fraction(2**k, gamma(k)), p + guard_digits())
    return ((x + fx_cos(x, x.scale)) * 2).rescale(p)


def pi_cubic(
    iterations: int,
    seed: FixedReal = DEFAULT_CUBIC_SEED,
    schedule_factor: int = 5,
    progress=None,
) -> ConvergenceReport:
    """Iterate a <- a + cos(a) toward pi/2, scaling precision each step.

    The working precision starts at 10 digits and is multiplied by
    ``schedule_factor`` after every iteration, matching the published
    schedule at factor 5.  Reports correct digits of 2*a_n per iteration.
    """
    if iterations < 1 or iterations > 12:
        raise DomainError("pi_cubic supports 1..12 iterations")
    if schedule_factor < 3:
        raise DomainError("pi_cubic requires schedule_factor >= 3")
    half = FixedReal.from_str("0.5")
    if abs(seed - fx_div(pi_reference(32), FixedReal.from_int(2), 32)) > half:
        raise DivergenceError("pi_cubic: seed not within 0.5 of pi/2")
    acc = 10
    a = seed
    rows = []
    ref_p = 64
    best = -1
    stale = 0
    for n in range(1, iterations + 1):
        t0 = time.perf_counter()
        a = (a.rescale(acc) + fx_cos(a, acc)).rescale(acc)
        wall = int((time.perf_counter() - t0) * 1000)
        two_a = a * 2
        digits = fx_agree_digits(two_a, pi_reference(ref_p))
        while digits >= ref_p - 2:  # reference too short to resolve the error
            ref_p = max(ref_p * 3, 4 * digits + 50)
            digits = fx_agree_digits(two_a, pi_reference(ref_p))
        rows.append(ReportRow(n, digits, acc, wall))
        if progress is not None:
            progress(n, digits)
        if digits <= best:
            stale += 1
            if stale >= 3:
                raise DivergenceError(
                    f"pi_cubic: no digit gain for {stale} iterations"
                )
        else:
            best = digits
            stale = 0
        acc *= schedule_factor
    return ConvergenceReport(rows)


# -- nested radicals through the v-iteration ------------------------------


def nested_radical_via_v(
    k: int, n: int, p: Optional[int] = None
) -> RadicalApproximation:
    """v_k / v_{k-n} as an approximation of sqrt(2 - c_n)/c_{n+1}.

    Reports the digits of agreement against the directly computed radical
    ratio; the attainable count improves with k and is reported, not
    demanded.
    """
    if not k > n >= 1:
        raise DomainError("nested_radical_via_v requires k > n >= 1")
    g = gamma(k)
    if p is None:
        p = _default_precision(k)
    vk, vkn = _v_iter_fixed_keep(g, k, k - n, p)
    value = fx_div(vk, vkn, p)
    reference = RadicalSequence(p).ratio(n + 1)
    return RadicalApproximation(value, reference, fx_agree_digits(value, reference))


def sqrt2_via_v(k: int, p: Optional[int] = None) -> RadicalApproximation:
    """1 + v_k/v_{k-1} as an approximation of sqrt(2)."""
    if k < 2:
        raise DomainError("sqrt2_via_v requires k >= 2")
    g = gamma(k)
    if p is None:
        p = _default_precision(k)
    vk, vk1 = _v_iter_fixed_keep(g, k, k - 1, p)
    value = FixedReal.from_int(1, p) + fx_div(vk, vk1, p)
    reference = fx_sqrt(FixedReal.from_int(2), p)
    return RadicalApproximation(value, reference, fx_agree_digits(value, reference))


# -- radical arctangent sums ----------------------------------------------


def pi_radical_sum(
    k: int, terms: int, p: int, arctan_form: bool = True
) -> Approximation:
    """2^k * sum_{n=k}^{k+terms-1} arctan(sqrt(2 - c_{n-1})/c_n).

    The arctangent form truncates exactly (each term is pi/2^(n+1)); with
    ``arctan_form=False`` the bare ratios are summed instead, which is the
    limit form of the sum and only approximate at finite k.
    """
    if k < 2:
        raise DomainError("pi_radical_sum requires k >= 2")
    if terms < 1:
        raise DomainError("pi_radical_sum requires terms >= 1")
    G = guard_digits()
    wp = p + G + k  # the 2^k factor amplifies per-term error by ~0.3k digits
    seq = RadicalSequence(wp)
    total = FixedReal(0, wp)
    for n in range(k, k + terms):
        ratio = seq.ratio(n)
        if arctan_form:
            total = total + arctan(ratio, wp, "euler").value
        else:
            total = total + ratio
    value = (total * 2**k).rescale(p)
    return Approximation(value, fx_agree_digits(value, pi_reference(p)))


# -- arbitrary-convergence two-term evaluation ----------------------------


def pi_two_term(k: int, p: int) -> Approximation:
    """4 * (2^(k-1) arctan(1/v_1) + arctan((v_k-1)/(v_k+1))) at scale p."""
    if k < 2:
        raise DomainError("pi_two_term requires k >= 2")
    if p < 100:
        raise DomainError("pi_two_term requires p >= 100")
    g = gamma(k)
    G = guard_digits()
    amp = len(str(2 ** (k - 1)))
    wp = p + G + amp
    vk = v_iter_fixed(g, k, wp)
    one = FixedReal.from_int(1, wp)
    first = arctan(Fraction(1, g), wp, "accelerated").value * 2 ** (k - 1)
    second = arctan(fx_div(vk - one, vk + one, wp), wp, "accelerated").value
    value = ((first.rescale(wp) + second) * 4).rescale(p)
    ref = pi_reference(p + G)
    return Approximation(value, fx_agree_digits(value, ref))
