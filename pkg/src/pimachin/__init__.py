"""High-precision Machin-like formulas for pi from nested radicals of 2.

Exact generation, expansion and Gaussian-integer certification of
two-term and multi-term Machin-like formulas, three arctangent series
engines, and the approximation drivers (rational, cubic-convergence,
nested-radical and arbitrary-convergence digit computation).
"""

from .approx import (
    ConvergenceReport,
    nested_radical_via_v,
    pi_cos_hint,
    pi_cubic,
    pi_radical_sum,
    pi_rational_double,
    pi_rational_single,
    pi_two_term,
    sqrt2_via_v,
    v_iter_fixed,
)
from .exact import BigRational, GaussianInt, gauss_pow, rat_floor
from .fixed import (
    FixedReal,
    fx_agree_digits,
    fx_cos,
    fx_div,
    fx_sqrt,
)
from .machin import (
    MachinFormula,
    beta_direct,
    expand_template,
    kappa_lambda_iter,
    lehmer_measure,
    theta_from_v,
    theta_trig,
    two_term_formula,
    v_iter_exact,
    validate_formula,
)
from .radicals import RadicalSequence, gamma, nested_c, radical_ratio
from .series import (
    arctan,
    arctan_euler,
    arctan_fast,
    arctan_maclaurin,
    eval_pi,
    pi_reference,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "ConvergenceReport",
    "FixedReal",
    "GaussianInt",
    "MachinFormula",
    "RadicalSequence",
    "arctan",
    "arctan_euler",
    "arctan_fast",
    "arctan_maclaurin",
    "beta_direct",
    "eval_pi",
    "expand_template",
    "fx_agree_digits",
    "fx_cos",
    "fx_div",
    "fx_sqrt",
    "gamma",
    "gauss_pow",
    "kappa_lambda_iter",
    "lehmer_measure",
    "nested_c",
    "nested_radical_via_v",
    "pi_cos_hint",
    "pi_cubic",
    "pi_radical_sum",
    "pi_rational_double",
    "pi_rational_single",
    "pi_reference",
    "pi_two_term",
    "radical_ratio",
    "rat_floor",
    "sqrt2_via_v",
    "theta_from_v",
    "theta_trig",
    "two_term_formula",
    "v_iter_exact",
    "v_iter_fixed",
    "validate_formula",
]
