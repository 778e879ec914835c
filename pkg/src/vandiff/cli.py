"""Command-line front end.

Commands
--------
divdiff        divided difference of f at given points (table route, or the
               integral route with --via-integral; --check compares both)
integral       the rectangle integral of V(t) * f^(n)(coordinate sum)
theorem1       verify the integral against V(x) times the divided difference
corollary      fully symbolic volume identity for n = 1..n_max
verify-lemmas  the exact lemma suite (alias: lemmas)
transform      the point transform y from x, or x from y with --inverse

Output goes to stdout, one JSON object per line by default (also csv or
text); diagnostics go to stderr.  Exit codes: 0 all checks passed, 1 a
verification failed, 2 usage, parse, or infeasible-input errors.

Defaults for order, tolerance, seed, and budget can be overridden with the
environment variables VANDIFF_ORDER, VANDIFF_TOLERANCE, VANDIFF_SEED, and
VANDIFF_BUDGET.  Worker count never influences output bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from .divdiff import divided_difference
from .funcs import Polynomial, parse_function
from .identity import (
    DEFAULT_ORDER,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    LEMMA_GROUPS,
    check_identity_exact,
    check_identity_numeric,
    check_volume_symbolic,
    divided_difference_via_integral,
    exact_integral_value,
    json_value,
    run_lemma_suite,
    suite_passed,
)
from .points import parse_points, x_from_y, y_from_x
from .quad import BudgetExceededError, DEFAULT_BUDGET, integral_side
from .symfun import vandermonde_product

_ENV_PREFIX = "VANDIFF_"


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        print(
            f"error: environment variable {_ENV_PREFIX}{name} has "
            f"invalid value {raw!r}",
            file=sys.stderr,
        )
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vandiff",
        description="Evaluate and cross-verify divided differences and "
        "their rectangle-integral representation.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="json",
        help="output format (default json, one object per line)",
    )
    common.add_argument(
        "--order",
        type=int,
        default=_env_default("ORDER", int, DEFAULT_ORDER),
        help="quadrature nodes per axis",
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=_env_default("TOLERANCE", float, DEFAULT_TOLERANCE),
        help="relative tolerance for floating checks",
    )
    common.add_argument(
        "--budget",
        type=lambda s: int(float(s)),
        default=_env_default("BUDGET", lambda s: int(float(s)), DEFAULT_BUDGET),
        help="maximum total quadrature evaluations",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=1,
        help="parallel workers for cubature (never changes output)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "divdiff",
        parents=[common],
        help="divided difference at the given points",
    )
    p.add_argument("--points", required=True, help="comma-separated points")
    p.add_argument("--function", required=True, help="e.g. poly:0,0,1 or exp:1")
    p.add_argument(
        "--via-integral",
        action="store_true",
        help="use the rectangle-integral route instead of the table",
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="run both routes and verify they agree",
    )
    p.set_defaults(func=cmd_divdiff)

    p = sub.add_parser(
        "integral",
        parents=[common],
        help="integral of V(t) * f^(n)(t_1+...+t_n) over R(x)",
    )
    p.add_argument("--x", required=True, help="comma-separated points x")
    p.add_argument("--function", required=True)
    p.add_argument(
        "--symbolic",
        action="store_true",
        help="exact iterated integration (rational x, polynomial f)",
    )
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser(
        "theorem1",
        parents=[common],
        help="verify the integral equals V(x) times the divided difference",
    )
    p.add_argument("--x", required=True)
    p.add_argument("--function", required=True)
    p.add_argument(
        "--symbolic",
        action="store_true",
        help="exact pipeline (rational x, polynomial f)",
    )
    p.set_defaults(func=cmd_theorem1)

    p = sub.add_parser(
        "corollary",
        parents=[common],
        help="symbolic volume identity for each n up to --n-max",
    )
    p.add_argument("--n-max", type=int, default=5)
    p.set_defaults(func=cmd_corollary)

    p = sub.add_parser(
        "verify-lemmas",
        aliases=["lemmas"],
        parents=[common],
        help="run the exact lemma suite",
    )
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument(
        "--only",
        default=None,
        help="comma-separated subset of groups: " + ", ".join(LEMMA_GROUPS),
    )
    p.add_argument(
        "--seed",
        type=int,
        default=_env_default("SEED", int, DEFAULT_SEED),
    )
    p.add_argument("--cases", type=int, default=10, help="samples per random case")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser(
        "transform",
        parents=[common],
        help="the sum-complement point transform and its inverse",
    )
    p.add_argument("--x", default=None)
    p.add_argument("--y", default=None)
    p.add_argument("--inverse", action="store_true", help="map y back to x")
    p.add_argument(
        "--symbolic",
        action="store_true",
        help="treat inputs as exact rationals",
    )
    p.set_defaults(func=cmd_transform)

    return parser


# -- output ---------------------------------------------------------------------


def _emit(records: list[dict], fmt: str) -> None:
    if fmt == "json":
        for rec in records:
            print(json.dumps(json_value(rec), separators=(",", ":")))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if records:
            keys = list(records[0])
            writer.writerow(keys)
            for rec in records:
                row = []
                for k in keys:
                    v = json_value(rec.get(k))
                    # JSON-encode everything but bare strings so booleans
                    # and null match the json format's spelling
                    row.append(
                        v
                        if isinstance(v, str)
                        else json.dumps(v, separators=(",", ":"))
                    )
                writer.writerow(row)
    else:
        for rec in records:
            parts = []
            for k, v in rec.items():
                v = json_value(v)
                if not isinstance(v, str):
                    v = json.dumps(v, separators=(",", ":"))
                parts.append(f"{k}={v}")
            print("  ".join(parts))


def _report_records(reports) -> list[dict]:
    return [r.to_dict() for r in reports]


# -- command handlers -------------------------------------------------------------


def cmd_divdiff(args) -> int:
    points = parse_points(args.points)
    f = parse_function(args.function)
    table_value = float(divided_difference(points, f))
    base = {
        "name": "divided-difference",
        "points": list(points.values),
        "function": f.describe(),
    }
    if args.check:
        via = divided_difference_via_integral(
            points, f, args.order, workers=args.workers, budget=args.budget
        )
        abs_err = abs(table_value - via)
        scale = abs(table_value)
        rel_err = abs_err if scale < 1e-14 else abs_err / scale
        passed = rel_err <= args.tolerance
        record = dict(
            base,
            name="divided-difference-route-check",
            table=table_value,
            integral=via,
            abs_err=abs_err,
            rel_err=rel_err,
            tolerance=args.tolerance,
            passed=passed,
        )
        _emit([record], args.format)
        return 0 if passed else 1
    if args.via_integral:
        value = divided_difference_via_integral(
            points, f, args.order, workers=args.workers, budget=args.budget
        )
        record = dict(base, route="integral", order=args.order, value=value)
    else:
        record = dict(base, route="table", value=table_value)
    _emit([record], args.format)
    return 0


def cmd_integral(args) -> int:
    x = parse_points(args.x, exact=args.symbolic)
    f = parse_function(args.function)
    if args.symbolic:
        if not isinstance(f, Polynomial):
            print(
                "error: --symbolic needs a polynomial function",
                file=sys.stderr,
            )
            return 2
        value = exact_integral_value(x, f)
        record = {
            "name": "integral-side",
            "n": x.n,
            "pipeline": "exact",
            "points": list(x.values),
            "function": f.describe(),
            "value": value,
        }
        _emit([record], args.format)
        return 0
    result = integral_side(x, f, args.order, workers=args.workers, budget=args.budget)
    record = {
        "name": "integral-side",
        "n": x.n,
        "pipeline": "floating",
        "points": list(x.as_floats()),
        "function": f.describe(),
        "order": result.nodes_per_axis,
        "evaluations": result.function_evaluations,
        "value": result.value,
    }
    _emit([record], args.format)
    return 0


def cmd_theorem1(args) -> int:
    # validate points first so their message wins over function errors
    x = parse_points(args.x, exact=args.symbolic)
    f = parse_function(args.function)
    if args.symbolic:
        if not isinstance(f, Polynomial):
            print(
                "error: --symbolic needs a polynomial function "
                "(transcendental families have no exact pipeline)",
                file=sys.stderr,
            )
            return 2
        report = check_identity_exact(x, f)
    else:
        report = check_identity_numeric(
            x,
            f,
            args.order,
            args.tolerance,
            workers=args.workers,
            budget=args.budget,
        )
    _emit(_report_records([report]), args.format)
    return 0 if report.passed else 1


def cmd_corollary(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be at least 1", file=sys.stderr)
        return 2
    reports = [check_volume_symbolic(n) for n in range(1, args.n_max + 1)]
    _emit(_report_records(reports), args.format)
    return 0 if suite_passed(reports) else 1


def cmd_verify_lemmas(args) -> int:
    groups = None
    if args.only is not None:
        groups = tuple(g.strip() for g in args.only.split(",") if g.strip())
    reports = run_lemma_suite(
        args.n_max, groups=groups, seed=args.seed, cases=args.cases
    )
    _emit(_report_records(reports), args.format)
    return 0 if suite_passed(reports) else 1


def cmd_transform(args) -> int:
    if args.inverse:
        if args.y is None:
            print("error: --inverse needs --y", file=sys.stderr)
            return 2
        source = parse_points(args.y, exact=args.symbolic)
        target = x_from_y(source)
        x_seq, y_seq = target, source
        direction = "inverse"
    else:
        if args.x is None:
            print("error: forward transform needs --x", file=sys.stderr)
            return 2
        source = parse_points(args.x, exact=args.symbolic)
        target = y_from_x(source)
        x_seq, y_seq = source, target
        direction = "forward"
    vx = vandermonde_product(x_seq.values)
    vy = vandermonde_product(y_seq.values)
    if x_seq.is_exact:
        equal = vx == vy
    else:
        equal = math.isclose(vx, vy, rel_tol=args.tolerance, abs_tol=1e-12)
    record = {
        "name": "transform",
        "direction": direction,
        "n": source.n,
        "x": list(x_seq.values),
        "y": list(y_seq.values),
        "vandermonde_x": vx,
        "vandermonde_y": vy,
        "equal": equal,
    }
    _emit([record], args.format)
    return 0 if equal else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError, BudgetExceededError) as exc:
        # covers parse errors, non-increasing points, symbolic caps, poles
        # inside the domain, and infeasible order/dimension requests
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
