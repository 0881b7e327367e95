"""Generation, expansion and certification of Machin-like formulas.

Three independent routes to the second coefficient of the two-term
formula pi/4 = 2^(k-1) arctan(1/gamma_k) + arctan(1/theta):

* ``beta_direct``      -- exact complex-rational evaluation (oracle scale);
* ``kappa_lambda_iter``-- repeated exact complex squaring of
  (a+i)/(a-i), tracking real and imaginary parts;
* ``v_iter_exact``     -- the cotangent-halving recursion
  v_n = (v_{n-1} - 1/v_{n-1})/2 with theta = (v+1)/(v-1).

All three must agree exactly; ``two_term_formula`` uses the v-route and
the other two serve as cross-validation oracles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import mpmath

from .errors import (
    DomainError,
    FloorIdentityError,
    InternalInconsistencyError,
    MalformedFormulaError,
    PoleError,
    PrecisionExhaustedError,
    SingularMeasureError,
)
from .exact import GaussianInt, gauss_pow, rat_floor
from .fixed import FixedReal, fx_agree_digits, fx_cos, fx_div, guard_digits, pow10
from .radicals import gamma
from .series import arctan_euler, pi_reference


@dataclass
class MachinFormula:
    """Ordered arctangent terms (A_j, x_j) summing to pi/4."""

    terms: list
    target: str = "pi/4"
    k: Optional[int] = None
    m: Optional[int] = None
    path: Optional[str] = None
    validated: bool = False
    exact_tail: bool = False

    def __post_init__(self):
        self.terms = [(int(A), Fraction(x)) for A, x in self.terms]
        for A, x in self.terms:
            if x == 0:
                raise MalformedFormulaError("zero arctangent argument")
            if abs(x) > 1:
                raise MalformedFormulaError(f"argument {x} outside (0, 1]")

    def render_text(self) -> str:
        parts = []
        for i, (A, x) in enumerate(self.terms):
            coeff = A if x > 0 else -A
            ax = abs(x)
            arg = f"atan({ax.numerator}/{ax.denominator})"
            mag = abs(coeff)
            body = arg if mag == 1 else f"{mag}*{arg}"
            if i == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return "pi/4 = " + " ".join(parts)

    def to_json_dict(self, lehmer: Optional[str] = None) -> dict:
        return {
            "target": self.target,
            "k": self.k,
            "M": self.m,
            "terms": [
                {
                    "coeff": str(A),
                    "arg_num": str(x.numerator),
                    "arg_den": str(x.denominator),
                }
                for A, x in self.terms
            ],
            "validated": self.validated,
            "lehmer": lehmer,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "MachinFormula":
        try:
            terms = [
                (int(t["coeff"]), Fraction(int(t["arg_num"]), int(t["arg_den"])))
                for t in doc["terms"]
            ]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise MalformedFormulaError(f"bad formula document: {exc}") from exc
        if not terms:
            raise MalformedFormulaError("formula has no terms")
        k = doc.get("k")
        m = doc.get("M")
        return cls(
            terms=terms,
            target=doc.get("target", "pi/4"),
            k=None if k is None else int(k),
            m=None if m is None else int(m),
            validated=bool(doc.get("validated", False)),
        )

    def to_json(self, lehmer: Optional[str] = None) -> str:
        return json.dumps(self.to_json_dict(lehmer), indent=2)


# -- exact generation paths ------------------------------------------------


def _cmul(z, w):
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def _cdiv(z, w):
    d = w[0] * w[0] + w[1] * w[1]
    return ((z[0] * w[0] + z[1] * w[1]) / d, (z[1] * w[0] - z[0] * w[1]) / d)


def beta_direct(alpha: int, k: int) -> Fraction:
    """beta = 2/([(a+i)/(a-i)]^(2^(k-1)) - i) - i, evaluated exactly.

    Oracle scale only: the exponent 2^(k-1) makes this blow up past k ~ 8.
    """
    if not 2 <= k <= 8:
        raise DomainError("beta_direct is an oracle for 2 <= k <= 8")
    a = Fraction(alpha)
    z = _cdiv((a, Fraction(1)), (a, Fraction(-1)))
    for _ in range(k - 1):
        z = _cmul(z, z)
    w = _cdiv((Fraction(2), Fraction(0)), (z[0], z[1] - 1))
    beta = (w[0], w[1] - 1)
    if beta[1] != 0:
        raise InternalInconsistencyError(
            f"beta_direct: nonzero imaginary part for alpha={alpha}, k={k}"
        )
    return beta[0]


def kappa_lambda_iter(alpha: int, k: int) -> Fraction:
    """beta = kappa_k / (1 - lambda_k) via exact complex squaring.

    The recursion is complex squaring of (a+i)/(a-i):
    kappa_n = kappa^2 - lambda^2, lambda_n = 2*kappa*lambda, seeded with
    kappa_1 = (a^2-1)/(a^2+1), lambda_1 = 2a/(a^2+1).
    """
    if k < 2:
        raise DomainError("kappa_lambda_iter requires k >= 2")
    a2 = alpha * alpha
    kappa = Fraction(a2 - 1, a2 + 1)
    lam = Fraction(2 * alpha, a2 + 1)
    for _ in range(2, k + 1):
        kappa, lam = kappa * kappa - lam * lam, 2 * kappa * lam
    if lam == 1:
        raise InternalInconsistencyError("kappa_lambda_iter: lambda_k = 1")
    return kappa / (1 - lam)


def v_iter_exact(alpha: int, k: int) -> Fraction:
    """v_1 = alpha; v_n = (v_{n-1} - 1/v_{n-1})/2; returns v_k exactly."""
    if k < 1:
        raise DomainError("v_iter_exact requires k >= 1")
    if alpha < 2:
        raise DomainError("v_iter_exact requires alpha >= 2")
    v = Fraction(alpha)
    for _ in range(k - 1):
        if v == 0:
            raise DomainError("v_iter_exact: division by zero in recursion")
        v = (v - 1 / v) / 2
    return v


def theta_from_v(v: Fraction) -> Fraction:
    """theta = (v + 1)/(v - 1); pole at v = 1."""
    v = Fraction(v)
    if v == 1:
        raise PoleError("theta_from_v: pole at v = 1")
    return (v + 1) / (v - 1)


def two_term_formula(k: int) -> MachinFormula:
    """pi/4 = 2^(k-1) arctan(1/gamma_k) + arctan(1/theta_{1,k})."""
    if k < 2:
        raise DomainError("two_term_formula requires k >= 2")
    g = gamma(k)
    theta = theta_from_v(v_iter_exact(g, k))
    f = MachinFormula(
        terms=[(2 ** (k - 1), Fraction(1, g)), (1, 1 / theta)],
        k=k,
        m=0,
        path="v-iteration",
    )
    f.validated = validate_formula(f)
    if not f.validated:
        raise InternalInconsistencyError(f"generated formula k={k} fails validation")
    return f


def expand_template(k: int, M: int) -> MachinFormula:
    """Peel M integer-argument terms off the two-term formula.

    theta_{m,k} = (1 + floor(theta)*theta) / (floor(theta) - theta); each
    peeled term is arctan(1/floor(theta)).  If some theta lands on an
    integer the expansion terminates early with an exact tail.
    """
    if k < 2:
        raise DomainError("expand_template requires k >= 2")
    if M < 0:
        raise DomainError("expand_template requires M >= 0")
    g = gamma(k)
    theta = theta_from_v(v_iter_exact(g, k))
    terms = [(2 ** (k - 1), Fraction(1, g))]
    exact_tail = False
    for _ in range(M):
        fl = rat_floor(theta)
        if theta == fl:
            exact_tail = True
            break
        if fl == 0:
            raise FloorIdentityError(
                "floor identity needs theta outside [0, 1); got "
                f"{float(theta):.6g}"
            )
        terms.append((1, Fraction(1, fl)))
        theta = (1 + fl * theta) / (fl - theta)
    terms.append((1, 1 / theta))
    f = MachinFormula(terms=terms, k=k, m=M, path="template", exact_tail=exact_tail)
    f.validated = validate_formula(f)
    if not f.validated:
        raise InternalInconsistencyError(
            f"expanded formula k={k}, M={M} fails validation"
        )
    return f


# -- certification ---------------------------------------------------------


def gaussian_product(f: MachinFormula) -> GaussianInt:
    """prod (q_j + p_j i)^A_j with negative powers divided out exactly.

    When the denominator does not divide evenly (possible for formulas
    that do not certify), it is folded in by conjugation instead, which
    scales the product by a positive real and so preserves its argument.
    """
    if not f.terms:
        raise MalformedFormulaError("formula has no terms")
    num = GaussianInt(1, 0)
    den = GaussianInt(1, 0)
    for A, x in f.terms:
        if x == 0:
            raise MalformedFormulaError("zero arctangent argument")
        base = GaussianInt(x.denominator, x.numerator)
        if A < 0:
            den = den * gauss_pow(base, -A)
        else:
            num = num * gauss_pow(base, A)
    if den != GaussianInt(1, 0):
        norm = den.re * den.re + den.im * den.im
        exact = num * den.conjugate()
        if exact.re % norm == 0 and exact.im % norm == 0:
            return GaussianInt(exact.re // norm, exact.im // norm)
        return exact
    return num


_SANITY_DIGITS = 50


def validate_formula(f: MachinFormula) -> bool:
    """True iff the Gaussian product has argument pi/4 (mod 2pi).

    The exact product must satisfy Re = Im > 0; a 50-digit floating check
    of sum A_j arctan(x_j) against arctan(1) rules out off-by-full-turns.
    """
    prod = gaussian_product(f)
    if prod.re != prod.im or prod.re <= 0:
        return False
    p = _SANITY_DIGITS + 10
    total = FixedReal(0, p)
    for A, x in f.terms:
        total = total + arctan_euler(x, p).value * A
    quarter_pi = arctan_euler(1, p).value
    return fx_agree_digits(total, quarter_pi) >= _SANITY_DIGITS


class LehmerMeasure(NamedTuple):
    value: FixedReal
    non_integer_args: bool


_LEHMER_SCALE = 30


def lehmer_measure(f: MachinFormula) -> LehmerMeasure:
    """mu = sum 1/log10|1/x_j| at 30 digits.

    The measure is meaningful only when every 1/x_j is an integer; the
    ``non_integer_args`` flag is set when that is not the case.
    """
    non_integer = False
    with mpmath.workdps(_LEHMER_SCALE + 25):
        mu = mpmath.mpf(0)
        for _, x in f.terms:
            B = 1 / x
            if abs(B) == 1:
                raise SingularMeasureError("lehmer_measure: |B| = 1 term")
            if B.denominator != 1:
                non_integer = True
            logb = mpmath.log10(
                abs(mpmath.mpf(B.numerator)) / mpmath.mpf(B.denominator)
            )
            mu += 1 / logb
        man = int(mpmath.floor(mu * mpmath.mpf(10) ** _LEHMER_SCALE))
    return LehmerMeasure(FixedReal(man, _LEHMER_SCALE), non_integer)


# -- trigonometric form ----------------------------------------------------


def theta_trig(k: int, p: int) -> FixedReal:
    """theta_{1,k} ~ cos(T) / (1 - sin(T)), T = 2^(k-1) arctan(2g/(g^2-1)).

    sin(T) is obtained as cos(pi/2 - T) against the pi reference.
    """
    if k < 2:
        raise DomainError("theta_trig requires k >= 2")
    g = gamma(k)
    G = guard_digits()
    wp = p + G + 10
    amp = len(str(2 ** (k - 1)))
    t_small = arctan_euler(Fraction(2 * g, g * g - 1), wp + amp).value
    T = (t_small * 2 ** (k - 1)).rescale(wp)
    cos_T = fx_cos(T, wp)
    half_pi = fx_div(pi_reference(wp), FixedReal.from_int(2), wp)
    sin_T = fx_cos(half_pi - T, wp)
    denom = FixedReal.from_int(1, wp) - sin_T
    if abs(denom.man) < pow10(wp - p):
        raise PrecisionExhaustedError("theta_trig: denominator below 10^-p")
    return fx_div(cos_T, denom, p)
