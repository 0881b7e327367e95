"""Arctangent series engines and formula-driven pi evaluation.

Three engines are provided:

* ``maclaurin`` -- the alternating odd-power series, |x| <= 1;
* ``euler``     -- Euler's transformed series, converging for every x
  with per-term ratio x^2 / (1 + x^2);
* ``accelerated`` -- the two-sequence (g, h) series with per-term ratio
  1 / (1 + 4/x^2), the fastest of the three for reciprocal arguments.

The accelerated recursion is run in normalized form: (g, h) is rotated on
a circle of fixed radius while a separate shrinking factor tracks the
modulus growth, which keeps every mantissa at working size instead of
letting g and h explode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

from .errors import DomainError, PrecisionExhaustedError, ReferenceInconsistencyError
from .fixed import FixedReal, _tdiv, fx_div, guard_digits, pow10

ArctanInput = Union[Fraction, FixedReal, int]

ENGINES = ("maclaurin", "euler", "accelerated")


class ArctanResult(NamedTuple):
    value: FixedReal
    terms_used: int


def _to_fixed(x: ArctanInput, p: int) -> FixedReal:
    if isinstance(x, FixedReal):
        return x.rescale(p)
    return FixedReal.from_fraction(Fraction(x), p)


def arctan(x: ArctanInput, p: int, engine: str = "accelerated") -> ArctanResult:
    if engine == "maclaurin":
        return arctan_maclaurin(x, p)
    if engine == "euler":
        return arctan_euler(x, p)
    if engine == "accelerated":
        return arctan_fast(x, p)
    raise ValueError(f"unknown engine {engine!r}")


def arctan_maclaurin(x: ArctanInput, p: int) -> ArctanResult:
    """x - x^3/3 + x^5/5 - ... (plain odd denominators), |x| <= 1."""
    G = guard_digits()
    wp = p + G + 5
    xf = _to_fixed(x, wp)
    unit = pow10(wp)
    if abs(xf.man) > unit:
        raise DomainError("arctan_maclaurin: |x| > 1")
    if abs(xf.man) == unit:
        # at |x| = 1 the alternating series gains no digits per term and
        # would need ~10^p terms; the transformed engines handle this case
        raise PrecisionExhaustedError(
            "arctan_maclaurin: |x| = 1 converges too slowly; use euler "
            "or accelerated"
        )
    if xf.man == 0:
        return ArctanResult(FixedReal(0, p), 1)
    x2 = _tdiv(xf.man * xf.man, unit)
    thr = pow10(wp - p - G)
    u = xf.man
    s = u
    n = 0
    while True:
        n += 1
        u = _tdiv(u * x2, unit)
        term = _tdiv(u, 2 * n + 1)
        s += term if n % 2 == 0 else -term
        if -thr < term < thr:
            break
    return ArctanResult(FixedReal(s, wp).rescale(p), n + 1)


def arctan_euler(x: ArctanInput, p: int) -> ArctanResult:
    """Euler's series: sum of [2^2n (n!)^2 / (2n+1)!] x^(2n+1)/(1+x^2)^(n+1).

    Evaluated with the term recurrence t_{n+1} = t_n * (2n+2)/(2n+3) * c
    where c = x^2/(1+x^2).
    """
    G = guard_digits()
    wp = p + G + 5
    xf = _to_fixed(x, wp)
    if xf.man == 0:
        return ArctanResult(FixedReal(0, p), 1)
    unit = pow10(wp)
    x2 = _tdiv(xf.man * xf.man, unit)
    denom = unit + x2  # 1 + x^2 at scale wp
    c = _tdiv(x2 * unit, denom)
    t = _tdiv(xf.man * unit, denom)  # x / (1 + x^2)
    thr = pow10(wp - p - G)
    s = t
    n = 0
    while True:
        n += 1
        t = _tdiv(t * c, unit)
        t = _tdiv(t * (2 * n), 2 * n + 1)
        s += t
        if -thr < t < thr:
            break
    return ArctanResult(FixedReal(s, wp).rescale(p), n + 1)


def arctan_fast(x: ArctanInput, p: int) -> ArctanResult:
    """The accelerated (g, h) series, normalized to constant modulus."""
    G = guard_digits()
    wp = p + G + 12
    if isinstance(x, FixedReal):
        if x.man == 0:
            raise DomainError("arctan_fast: x = 0 (g_1 = 2/x undefined)")
    elif Fraction(x) == 0:
        raise DomainError("arctan_fast: x = 0 (g_1 = 2/x undefined)")
    xf = _to_fixed(x, wp)
    if xf.man == 0:
        # nonzero but below the working resolution: arctan(x) = x + O(x^3)
        return ArctanResult(FixedReal(0, p), 1)
    xm = abs(xf.man)
    lead = wp - xm.num_digits(10)  # ~ -log10 |x|
    if 3 * lead > p + G + 3:
        # the x^3/3 term is already beyond the target precision
        return ArctanResult(xf.rescale(p), 1)
    if lead > 0:
        # 4/x^2 eats ~2*lead digits of relative precision; pre-pay them
        wp += 2 * lead
        xf = _to_fixed(x, wp)
        xm = abs(xf.man)
    neg = xf.man < 0
    unit = pow10(wp)
    x2 = _tdiv(xm * xm, unit)
    inv4x2 = _tdiv(4 * unit * unit, x2)  # 4 / x^2
    b_raw = _tdiv(4 * unit * unit, xm)  # 4 / x
    a_raw = unit - inv4x2  # 1 - 4/x^2
    rho = unit + inv4x2  # 1 + 4/x^2 = |g_1 + i h_1|^2
    rhoinv = _tdiv(unit * unit, rho)
    a = _tdiv(a_raw * rhoinv, unit)
    b = _tdiv(b_raw * rhoinv, unit)
    g = _tdiv(2 * unit * unit, xm)  # g_1 = 2/x
    h = unit  # h_1 = 1
    q = unit  # rho^-(n-1)
    thr = pow10(wp - p - G)
    s = 0
    n = 0
    below = 0
    while True:
        n += 1
        term = _tdiv(2 * _tdiv(_tdiv(g * q, unit) * rhoinv, unit), 2 * n - 1)
        s += term
        # The terms are not provably monotone: require two consecutive
        # sub-threshold terms before stopping.
        if -thr < term < thr:
            below += 1
            if below >= 2:
                break
        else:
            below = 0
        g, h = (
            _tdiv(g * a + h * b, unit),
            _tdiv(h * a - g * b, unit),
        )
        q = _tdiv(q * rhoinv, unit)
    if neg:
        s = -s
    return ArctanResult(FixedReal(s, wp).rescale(p), n)


def eval_pi(formula, p: int, engine: str = "accelerated") -> FixedReal:
    """4 * sum A_j * arctan(x_j) at precision p (formula must validate)."""
    from .machin import validate_formula

    if not formula.validated and not validate_formula(formula):
        raise DomainError("eval_pi: formula does not validate to pi/4")
    G = guard_digits()
    # integer coefficients amplify per-term error: widen accordingly
    amp = max(len(str(abs(A))) for A, _ in formula.terms)
    wp = p + G + amp
    total = FixedReal(0, wp)
    for A, xj in formula.terms:
        total = total + arctan(xj, wp, engine).value * A
    return (total * 4).rescale(p)


# -- self-checking pi reference -------------------------------------------

_MACHIN_TERMS = [(4, Fraction(1, 5)), (-1, Fraction(1, 239))]
_reference_cache: dict[str, tuple[FixedReal, int]] = {}


def pi_reference(p: int) -> FixedReal:
    """pi via two independent formula/engine pairs, cross-checked.

    The classic Machin formula under the Euler engine must agree with the
    generated k=4 two-term formula under the accelerated engine to at
    least p digits, otherwise an engine bug is assumed and evaluation
    aborts.
    """
    if p < 16:
        raise ValueError("pi_reference requires p >= 16")
    cached = _reference_cache.get("best")
    if cached is not None and cached[1] >= p:
        return cached[0].rescale(p)
    from .fixed import fx_agree_digits
    from .machin import MachinFormula, two_term_formula

    G = guard_digits()
    q = p + G
    machin = MachinFormula(terms=list(_MACHIN_TERMS), k=3, m=0, path="classic")
    via_machin = eval_pi(machin, q, engine="euler")
    via_generated = eval_pi(two_term_formula(4), q, engine="accelerated")
    agree = fx_agree_digits(via_machin, via_generated)
    if agree < p:
        raise ReferenceInconsistencyError(
            f"pi reference paths agree to only {agree} digits (need {p})"
        )
    _reference_cache["best"] = (via_machin, p)
    return via_machin.rescale(p)
