"""Command-line surface: generate, expand, validate, pi, radical, bench.

Exit codes: 0 success, 2 usage error, 3 validation failure or malformed
input, 4 numeric-domain error, 5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import approx, machin, series
from .errors import (
    DomainError,
    InternalInconsistencyError,
    MalformedFormulaError,
    NumericsError,
)
from .fixed import FixedReal, fx_agree_digits

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_DOMAIN = 4
EXIT_INTERNAL = 5

DIGITS_PER_LINE = 50


def _digit_lines(value: FixedReal) -> str:
    """Stream a decimal value in 50-digit groups per line."""
    text = value.to_decimal_string()
    if "." not in text:
        return text
    head, frac = text.split(".", 1)
    lines = [head + "."]
    for i in range(0, len(frac), DIGITS_PER_LINE):
        lines.append(frac[i : i + DIGITS_PER_LINE])
    return "\n".join(lines)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# -- subcommands -----------------------------------------------------------


def run_generate(args) -> int:
    f = machin.expand_template(args.k, args.m)
    if not f.validated:
        print("error: generated formula fails the Gaussian-product relation",
              file=sys.stderr)
        return EXIT_VALIDATION
    mu = machin.lehmer_measure(f)
    if args.format == "json":
        _emit(f.to_json(lehmer=mu.value.to_decimal_string()), args.output)
    else:
        lines = [f.render_text(), f"lehmer: {mu.value.to_decimal_string()}"]
        if mu.non_integer_args:
            lines.append("warning: non-integer arctangent reciprocals; "
                         "Lehmer measure is only indicative")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def run_validate(args) -> int:
    try:
        with open(args.path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON at line {exc.lineno}, column {exc.colno}: "
              f"{exc.msg}", file=sys.stderr)
        return EXIT_VALIDATION
    f = machin.MachinFormula.from_json_dict(doc)
    f.validated = False
    ok = machin.validate_formula(f)
    prod = machin.gaussian_product(f)
    mu = machin.lehmer_measure(f)
    if args.format == "json":
        _emit(json.dumps({
            "valid": ok,
            "product_re": str(prod.re),
            "product_im": str(prod.im),
            "lehmer": mu.value.to_decimal_string(),
        }, indent=2), args.output)
    else:
        lines = [
            "true" if ok else "false",
            f"product: {prod}",
            f"lehmer: {mu.value.to_decimal_string()}",
        ]
        _emit("\n".join(lines), args.output)
    return EXIT_OK if ok else EXIT_VALIDATION


def _pi_series(args):
    digits = args.digits or 100
    if args.k is not None:
        f = machin.two_term_formula(args.k)
    else:
        f = machin.MachinFormula(
            terms=[(4, Fraction(1, 5)), (-1, Fraction(1, 239))],
            k=3, m=0, path="classic")
    value = series.eval_pi(f, digits, engine=args.engine)
    achieved = fx_agree_digits(value, series.pi_reference(digits))
    report = approx.ConvergenceReport(
        [approx.ReportRow(1, achieved, digits, 0)])
    return value, report


def run_pi(args) -> int:
    t0 = time.perf_counter()
    if args.method == "cubic":
        seed = (FixedReal.from_str(args.seed) if args.seed
                else approx.DEFAULT_CUBIC_SEED)
        progress = None
        if args.progress:
            progress = lambda n, d: print(f"iteration {n}: {d} digits",
                                          file=sys.stderr)
        report = approx.pi_cubic(args.iterations, seed=seed,
                                 schedule_factor=args.schedule_factor,
                                 progress=progress)
        value = None
    elif args.method == "two-term":
        if args.k is None or args.digits is None:
            raise UsageError("pi --method two-term needs --k and --digits")
        result = approx.pi_two_term(args.k, args.digits)
        value = result.value
        report = approx.ConvergenceReport(
            [approx.ReportRow(1, result.digits, args.digits,
                              int((time.perf_counter() - t0) * 1000))])
    elif args.method == "rational-single":
        if args.k is None:
            raise UsageError("pi --method rational-single needs --k")
        result = approx.pi_rational_single(args.k)
        value = result.value
        report = approx.ConvergenceReport(
            [approx.ReportRow(1, result.digits, args.k,
                              int((time.perf_counter() - t0) * 1000))])
    elif args.method == "rational-double":
        if args.k is None:
            raise UsageError("pi --method rational-double needs --k")
        result = approx.pi_rational_double(args.k, args.digits)
        value = result.value
        report = approx.ConvergenceReport(
            [approx.ReportRow(1, result.digits, args.k,
                              int((time.perf_counter() - t0) * 1000))])
    else:  # series
        value, report = _pi_series(args)

    if args.plot:
        from .report import save_convergence_figure
        save_convergence_figure(report, args.plot,
                                title=f"pi via {args.method}")
    if args.format == "csv":
        _emit(report.to_csv(), args.output)
    elif args.format == "json":
        doc = {
            "method": args.method,
            "report": [vars(r) for r in report.rows],
        }
        if value is not None:
            doc["value"] = value.to_decimal_string()
        _emit(json.dumps(doc, indent=2), args.output)
    else:
        lines = []
        last = report.rows[-1]
        lines.append(f"{last.digits} digits")
        if args.method == "cubic":
            lines.append("iteration | digits")
            for r in report.rows:
                lines.append(f"{r.iteration:9d} | {r.digits}")
        if value is not None:
            lines.append(_digit_lines(value))
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def run_radical(args) -> int:
    if not args.k > args.n >= 1:
        raise UsageError("radical requires k > n >= 1")
    if args.sqrt2:
        result = approx.sqrt2_via_v(args.k, args.precision)
        label = "square root of 2"
    else:
        result = approx.nested_radical_via_v(args.k, args.n, args.precision)
        label = "nested radical"
    if args.format == "json":
        _emit(json.dumps({
            "value": result.value.to_decimal_string(),
            "reference": result.reference.to_decimal_string(),
            "digits": result.digits,
        }, indent=2), args.output)
    elif args.format == "csv":
        _emit(f"digits\n{result.digits}\n", args.output)
    else:
        lines = [f"{result.digits} computed digits of {label}"]
        if args.sqrt2:
            prefix = result.value.rescale(19).to_decimal_string()
            lines.append(f"Computed {label} is {prefix}...")
        lines.append(_digit_lines(result.value))
        _emit("\n".join(lines), args.output)
    return EXIT_OK


_ENGINE_ALIASES = {
    "mse": "maclaurin", "maclaurin": "maclaurin",
    "ese": "euler", "euler": "euler",
    "ase": "accelerated", "accelerated": "accelerated",
}


def run_bench(args) -> int:
    try:
        x = Fraction(args.x)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --x value: {exc}")
    if x == 0 or abs(x) > 1:
        raise DomainError("bench requires 0 < |x| <= 1")
    engines = []
    for name in args.series.split(","):
        name = name.strip().lower()
        if name not in _ENGINE_ALIASES:
            raise UsageError(f"unknown series engine {name!r}")
        engines.append(_ENGINE_ALIASES[name])
    rows = []
    p = args.digits
    oracle = series.arctan(x, p + 40, "euler").value
    for engine in sorted(set(engines)):
        t0 = time.perf_counter()
        result = series.arctan(x, p, engine)
        wall = int((time.perf_counter() - t0) * 1000)
        achieved = fx_agree_digits(result.value, oracle)
        rows.append((engine, result.terms_used, wall, achieved))
    if args.plot:
        from .report import save_bench_figure
        save_bench_figure(rows, args.plot, title=f"arctan({x}) to {p} digits")
    lines = ["engine,terms_used,wall_ms,digits_achieved"]
    for engine, terms, wall, achieved in rows:
        lines.append(f"{engine},{terms},{wall},{achieved}")
    _emit("\n".join(lines), args.output)
    return EXIT_OK


class UsageError(Exception):
    pass


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pimachin",
        description="Machin-like formulas for pi from nested radicals of 2: "
                    "generation, validation, digit computation, benchmarks.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["text", "json", "csv"],
                       default="text")
        p.add_argument("--output", help="write to file instead of stdout")

    p_gen = sub.add_parser("generate", help="generate a Machin-like formula")
    p_gen.add_argument("--k", type=int, required=True)
    p_gen.add_argument("--m", type=int, default=0)
    add_common(p_gen)

    p_exp = sub.add_parser("expand",
                           help="expand a formula into integer reciprocals")
    p_exp.add_argument("--k", type=int, required=True)
    p_exp.add_argument("--m", type=int, default=1)
    add_common(p_exp)

    p_val = sub.add_parser("validate", help="validate a formula JSON file")
    p_val.add_argument("path")
    add_common(p_val)

    p_pi = sub.add_parser("pi", help="compute digits of pi")
    p_pi.add_argument("--method", required=True,
                      choices=["series", "two-term", "cubic",
                               "rational-single", "rational-double"])
    p_pi.add_argument("--digits", type=int)
    p_pi.add_argument("--k", type=int)
    p_pi.add_argument("--iterations", type=int, default=8)
    p_pi.add_argument("--engine", choices=list(series.ENGINES),
                      default="accelerated")
    p_pi.add_argument("--seed", help="cubic iteration seed (decimal literal)")
    p_pi.add_argument("--schedule-factor", type=int, default=5)
    p_pi.add_argument("--progress", action="store_true",
                      help="iteration counter on stderr")
    p_pi.add_argument("--plot", help="write a convergence figure (PNG/SVG)")
    add_common(p_pi)

    p_rad = sub.add_parser("radical", help="compute nested radicals / sqrt 2")
    p_rad.add_argument("--k", type=int, required=True)
    p_rad.add_argument("--n", type=int, default=1)
    p_rad.add_argument("--sqrt2", action="store_true")
    p_rad.add_argument("--precision", type=int)
    add_common(p_rad)

    p_bench = sub.add_parser("bench", help="benchmark the arctangent engines")
    p_bench.add_argument("--series", default="mse,ese,ase")
    p_bench.add_argument("--x", required=True, help="rational argument, e.g. 1/5")
    p_bench.add_argument("--digits", type=int, default=1000)
    p_bench.add_argument("--plot", help="write a benchmark figure (PNG/SVG)")
    add_common(p_bench)

    return parser


_DISPATCH = {
    "generate": run_generate,
    "expand": run_generate,
    "validate": run_validate,
    "pi": run_pi,
    "radical": run_radical,
    "bench": run_bench,
}


def _check_usage(args) -> None:
    if args.subcommand in ("generate", "expand"):
        if args.k < 2:
            raise UsageError("k must be >= 2")
        if args.m < 0:
            raise UsageError("m must be >= 0")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_usage(args)
        return _DISPATCH[args.subcommand](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedFormulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericsError as exc:  # pragma: no cover - catch-all for subtypes
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
