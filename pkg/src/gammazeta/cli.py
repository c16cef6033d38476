"""Command-line interface: table emission, expansion evaluation,
convergence studies, integral checks, and the verification suites.

Exit codes are a stable contract:
    0  success
    1  verification failure
    2  usage error
    3  numeric-domain error (poles, out-of-domain arguments)
    4  quadrature budget exceeded

All JSON output is a single object with schema_version, command,
parameters, and payload; big integers are serialized as decimal strings
so no consumer can lose precision to floating point. CSV uses a header
row, comma separators, LF line endings, and plain decimal strings.
Output is deterministic for identical flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import (
    combinatorics as comb,
    gamma_expansion,
    mittag_leffler,
    oracles,
    verify as verify_mod,
    zeta_expansion,
)
from .report import BudgetExceededError, DomainError

SCHEMA_VERSION = "1.0"
DEFAULT_TABLE_CAP = 64

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    pass


def _parse_decimal(text: str) -> Fraction:
    # decimal literals only; Fraction would also take "p/q", which the
    # flag contract does not admit
    if "/" in text:
        raise ValueError("not a decimal literal")
    return Fraction(text)


def parse_complex_flag(text: str):
    """Parse "RE" or "RE,IM" decimal literals.

    A plain real returns an exact Fraction (the evaluators then run
    their exact integer backends); with an imaginary part the value is
    a complex float.
    """
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise UsageError(f"cannot parse complex value {text!r}; use RE or RE,IM")
    try:
        re = _parse_decimal(parts[0].strip())
        im = _parse_decimal(parts[1].strip()) if len(parts) == 2 else Fraction(0)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse complex value {text!r}: {exc}") from exc
    if im == 0:
        return re
    return complex(float(re), float(im))


def output_record(command: str, parameters: dict, payload) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "payload": payload,
    }


def emit_json(record: dict, stream) -> None:
    json.dump(record, stream, indent=2)
    stream.write("\n")


def _complex_payload(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


# ------------------------------------------------------------------- tables

TABLE_FAMILIES = ("stirling1", "stirling2", "eulerian", "c", "a", "b")


def _table_rows(family: str, max_row: int) -> list[list[int]]:
    if family == "stirling1":
        return [[comb.stirling1(n, k) for k in range(n + 1)] for n in range(max_row + 1)]
    if family == "stirling2":
        return [[comb.stirling2(n, k) for k in range(n + 1)] for n in range(max_row + 1)]
    if family == "eulerian":
        return [
            [comb.eulerian(n, k) for k in range(max(n, 1))] for n in range(max_row + 1)
        ]
    if family == "c":
        return gamma_expansion.coeff_table(max_row)
    if family == "a":
        return mittag_leffler.coeff_table(max_row)
    if family == "b":
        return zeta_expansion.coeff_table(max_row)
    raise UsageError(f"unknown family {family!r}")


def cmd_tables(args, out) -> int:
    if args.max_row < 0:
        raise UsageError("--max must be nonnegative")
    if args.max_row > args.cap:
        raise UsageError(f"--max {args.max_row} exceeds the cap {args.cap}")
    rows = _table_rows(args.family, args.max_row)
    if args.format == "csv":
        out.write("row,col,value\n")
        for n, row in enumerate(rows):
            for k, value in enumerate(row):
                out.write(f"{n},{k},{value}\n")
    else:
        payload = {
            "family": args.family,
            "max_row": args.max_row,
            "rows": [[str(v) for v in row] for row in rows],
        }
        emit_json(
            output_record(
                "tables",
                {"family": args.family, "max_row": args.max_row, "format": "json"},
                payload,
            ),
            out,
        )
    return EXIT_OK


# --------------------------------------------------------------------- eval

def _evaluator(target: str):
    return gamma_expansion if target == "gamma" else zeta_expansion


def cmd_eval(args, out) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    s = parse_complex_flag(args.s)
    report = _evaluator(args.target).evaluate(s, args.terms, args.path)
    payload = {
        "s": _complex_payload(report.s),
        "terms": report.terms,
        "path": report.path,
        "partial_sum": _complex_payload(report.partial_sum),
        "reference": _complex_payload(report.reference),
        "abs_error": report.abs_error,
        "rel_error": report.rel_error,
        "term_magnitudes": report.term_magnitudes,
    }
    emit_json(
        output_record(
            "eval",
            {"target": args.target, "s": args.s, "terms": args.terms, "path": args.path},
            payload,
        ),
        out,
    )
    return EXIT_OK


# ----------------------------------------------------------------- converge

def cmd_converge(args, out) -> int:
    if not 1 <= args.stride <= args.max_terms:
        raise UsageError("requires max-terms >= stride >= 1")
    s = parse_complex_flag(args.s)
    module = _evaluator(args.target)
    sums = module.partial_sums(s, args.max_terms, args.path)
    if args.target == "gamma":
        reference = oracles.gamma_ref(complex(s) + 1)
    else:
        reference = zeta_expansion.reference_value(s)
    samples = []
    for terms in range(args.stride, args.max_terms + 1, args.stride):
        value = sums[terms - 1]
        rel = abs(value - reference) / abs(reference) if reference else float("inf")
        samples.append((terms, value, rel))
    if args.format == "csv":
        out.write("terms,partial_sum_re,partial_sum_im,rel_error\n")
        for terms, value, rel in samples:
            out.write(f"{terms},{value.real!r},{value.imag!r},{rel!r}\n")
    else:
        payload = {
            "reference": _complex_payload(reference),
            "samples": [
                {
                    "terms": terms,
                    "partial_sum": _complex_payload(value),
                    "rel_error": rel,
                }
                for terms, value, rel in samples
            ],
        }
        emit_json(
            output_record(
                "converge",
                {
                    "target": args.target,
                    "s": args.s,
                    "max_terms": args.max_terms,
                    "stride": args.stride,
                    "path": args.path,
                },
                payload,
            ),
            out,
        )
    return EXIT_OK


# ------------------------------------------------------------------- verify

def cmd_verify(args, out) -> int:
    results = verify_mod.run_suite(args.suite, args.depth, seed=args.seed)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "depth": args.depth,
            "checks": [
                {
                    "suite": r.suite,
                    "name": r.name,
                    "status": "pass" if r.passed else "fail",
                    "witness": r.witness,
                }
                for r in results
            ],
        }
        emit_json(
            output_record(
                "verify",
                {"suite": args.suite, "depth": args.depth, "seed": args.seed},
                payload,
            ),
            out,
        )
    else:
        for r in results:
            if r.passed:
                out.write(f"PASS {r.suite}:{r.name}\n")
            else:
                out.write(f"FAIL {r.suite}:{r.name}: {r.witness}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


# ----------------------------------------------------------- integral-check

def cmd_integral_check(args, out) -> int:
    s = parse_complex_flag(args.s)
    if not 0 <= args.n <= 12:
        raise UsageError("--n must lie in 0..12")
    report = oracles.integral_identity_check(
        complex(s), args.n, tol=args.tol, budget=args.budget
    )
    payload = {
        "s": _complex_payload(report.s),
        "n": report.n,
        "lhs": _complex_payload(report.lhs),
        "rhs": _complex_payload(report.rhs),
        "abs_discrepancy": report.abs_discrepancy,
        "rel_discrepancy": report.rel_discrepancy,
        "quadrature": {
            "error_estimate": report.quadrature.error_estimate,
            "evaluations": report.quadrature.evaluations,
            "converged": report.quadrature.converged,
        },
    }
    emit_json(
        output_record(
            "integral-check",
            {"s": args.s, "n": args.n, "tol": args.tol},
            payload,
        ),
        out,
    )
    return EXIT_OK


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammazeta",
        description=(
            "Exact coefficient triangles and factorial series expansions "
            "of Gamma(s+1) and eta(s)Gamma(s), with verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("tables", help="emit a coefficient triangle")
    p.add_argument("family", choices=TABLE_FAMILIES)
    p.add_argument("--max", dest="max_row", type=int, required=True,
                   help="largest row index to emit")
    p.add_argument("--cap", type=int, default=DEFAULT_TABLE_CAP,
                   help="safety cap on --max (default 64)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("eval", help="evaluate a truncated expansion")
    p.add_argument("target", choices=("gamma", "zeta"))
    p.add_argument("--s", required=True, help='argument, "RE" or "RE,IM"')
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--path", choices=("direct", "recurrence"), default="direct")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("converge", help="sample convergence of an expansion")
    p.add_argument("target", choices=("gamma", "zeta"))
    p.add_argument("--s", required=True)
    p.add_argument("--max-terms", dest="max_terms", type=int, required=True)
    p.add_argument("--stride", type=int, default=10)
    p.add_argument("--path", choices=("direct", "recurrence"), default="direct")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("all",) + tuple(verify_mod.suite_names()))
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED,
                   help="seed for the randomized property checks")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("integral-check",
                       help="check the reduced-polynomial integral identity")
    p.add_argument("--s", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=oracles.DEFAULT_QUAD_TOL)
    p.add_argument("--budget", type=int, default=oracles.DEFAULT_QUAD_BUDGET,
                   help="cap on integrand evaluations")
    p.set_defaults(func=cmd_integral_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"numeric-domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceededError as exc:
        print(f"quadrature budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
