"""
Command-line interface.

    qtbinomial compute binomial n=3 k=1 --q 2
    qtbinomial compute schur shape=2,2/1,0 vars=2 q=2
    qtbinomial check pascal --q 2 --q 3
    qtbinomial table binomial n=0..4 k=0..n --q 2 --eval-t1

Exit codes: 0 success, 1 an identity failed, 2 usage error, 3 degree guard.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from . import boxes, checks, ffield, macschur, permstat, qtnum
from .tpoly import DegreeGuardError, NonZeroRemainder, degree_guard

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _ints(text):
    text = str(text).strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _int(params, key, default=None):
    if key not in params:
        if default is None:
            raise UsageError(f"missing parameter {key}=")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise UsageError(f"{key} must be an integer, got {params[key]!r}") from None


def _top_power(params):
    """k for a specialization at (1, t, ..., t^k); accepts vars=k+1 or k=."""
    if "vars" in params:
        nvars = _int(params, "vars")
        if nvars < 1:
            raise UsageError("vars must be at least 1")
        return nvars - 1
    return _int(params, "k")


def _shape(params):
    if "shape" not in params:
        raise UsageError("missing parameter shape=")
    try:
        return macschur.SkewShape.parse(params["shape"])
    except ValueError as err:
        raise UsageError(str(err)) from None


def _composition(params, key="alpha"):
    if key not in params:
        raise UsageError(f"missing parameter {key}=")
    return _ints(params[key])


def _compute_factorial(p, q):
    return qtnum.qt_factorial(_int(p, "n"), q)


def _compute_binomial(p, q):
    return qtnum.qt_binomial(_int(p, "n"), _int(p, "k"), q)


def _compute_multinomial(p, q):
    alpha = _composition(p)
    return qtnum.qt_multinomial(_int(p, "n", sum(alpha)), alpha, q)


def _compute_box_sum(p, q):
    return boxes.box_sum(_int(p, "n"), _int(p, "k"), q)


def _compute_compatible_sum(p, q):
    return boxes.compatible_sum(_int(p, "n"), _int(p, "k"), q)


def _compute_subspace_sum(p, q):
    return ffield.subspace_sum(_int(p, "n"), _int(p, "k"), q)


def _compute_schur(p, q):
    shape = _shape(p)
    if not any(shape.inner):
        return macschur.bialternant_spec(shape.outer, _top_power(p), q)
    return macschur.jacobi_trudi_spec(shape, _top_power(p), q)


def _compute_hz(p, q):
    return macschur.hz(_int(p, "r"), _top_power(p), q)


def _compute_ez(p, q):
    # ez counts variables directly
    return macschur.ez(_int(p, "r"), _top_power(p) + 1, q)


def _compute_jt(p, q):
    return macschur.jacobi_trudi_spec(_shape(p), _top_power(p), q)


def _compute_dual_jt(p, q):
    return macschur.dual_jacobi_trudi_spec(_shape(p), _top_power(p), q)


def _compute_tableau_sum(p, q):
    return macschur.tableau_sum(_shape(p), _top_power(p), q)


def _compute_ribbon(p, q):
    return permstat.ribbon_qt(_composition(p), q, p.get("route", "descent_sum"))


def _compute_perm_weight(p, q):
    if "w" not in p:
        raise UsageError("missing parameter w=")
    return permstat.perm_weight_poly(permstat.parse_permutation(p["w"]), q)


OBJECTS = {
    "factorial": _compute_factorial,
    "binomial": _compute_binomial,
    "multinomial": _compute_multinomial,
    "box-sum": _compute_box_sum,
    "compatible-sum": _compute_compatible_sum,
    "subspace-sum": _compute_subspace_sum,
    "schur": _compute_schur,
    "hz": _compute_hz,
    "ez": _compute_ez,
    "jt": _compute_jt,
    "dual-jt": _compute_dual_jt,
    "tableau-sum": _compute_tableau_sum,
    "ribbon": _compute_ribbon,
    "perm-weight": _compute_perm_weight,
}


def parse_params(tokens):
    params = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key:
            raise UsageError(f"parameters must look like key=value, got {tok!r}")
        params[key.strip()] = value.strip().strip("\"'")
    return params


def _q_values(args, params):
    qs = list(args.q or [])
    if "q" in params:
        qs.append(_int(params, "q"))
    if not qs:
        qs = [2]
    for q in qs:
        if q < 2:
            raise UsageError(f"q must be at least 2, got {q}")
    return qs


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_poly(poly, fmt, out):
    if fmt == "json":
        out.write(dumps(poly.to_json()) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["exp", "coeff"])
        for term in poly.to_json()["terms"]:
            writer.writerow([term["exp"], term["coeff"]])


def cmd_compute(args, out):
    if args.object not in OBJECTS:
        raise UsageError(f"unknown object {args.object!r}; choose from {', '.join(OBJECTS)}")
    params = parse_params(args.params)
    qs = _q_values(args, params)
    if len(qs) != 1:
        raise UsageError("compute takes a single q")
    try:
        poly = OBJECTS[args.object](params, qs[0])
    except (UsageError, DegreeGuardError, NonZeroRemainder):
        raise
    except (ValueError, KeyError) as err:
        raise UsageError(str(err)) from None
    write_poly(poly, args.out, out)
    return EXIT_OK


def _check_bounds(args, params):
    bounds = {}
    if args.q or "q" in params:
        bounds["qs"] = tuple(_q_values(args, params))
    for key in ("n", "k", "m"):
        if key in params:
            bounds[key] = _int(params, key)
    if "box" in params:
        bounds["box"] = _ints(params["box"])
    if "pairs" in params:
        # "1:2,2:2,1:3"
        try:
            bounds["pairs"] = tuple(tuple(int(x) for x in item.split(":"))
                                    for item in params["pairs"].split(",") if item)
        except ValueError:
            raise UsageError("pairs must look like n:p,n:p") from None
    return bounds


def cmd_check(args, out):
    if args.suite not in checks.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(checks.SUITES)}")
    params = parse_params(args.params)
    try:
        report = checks.run_suite(args.suite, _check_bounds(args, params), jobs=args.jobs,
                                  timing=not args.no_timing)
    except (UsageError, DegreeGuardError):
        raise
    except ValueError as err:
        raise UsageError(str(err)) from None
    out.write(dumps(report) + "\n")
    if report["status"] != "pass":
        for case in report["cases"]:
            if case["status"] == "fail":
                print(f"FAIL {args.suite} {dumps(case['parameters'])}", file=sys.stderr)
                for mm in case["mismatches"]:
                    print(f"  lhs {dumps(mm['lhs'])}\n  rhs {dumps(mm['rhs'])}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


# -- tables --

_RANGE = re.compile(r"^(\w+)\.\.(\w+)$")


def _endpoint(token, env):
    if re.fullmatch(r"-?\d+", token):
        return int(token)
    if token in env:
        return env[token]
    raise UsageError(f"range endpoint {token!r} is neither an integer nor an earlier variable")


def expand_grid(params):
    """Cartesian grid from key=a..b tokens; later bounds may name earlier keys."""
    keys = list(params)

    def rec(i, env):
        if i == len(keys):
            yield dict(env)
            return
        key, rule = keys[i], params[keys[i]]
        m = _RANGE.match(rule)
        if m:
            lo, hi = _endpoint(m.group(1), env), _endpoint(m.group(2), env)
            values = range(lo, hi + 1)
        elif re.fullmatch(r"-?\d+", rule) or rule in env:
            values = [_endpoint(rule, env)]
        else:
            values = [rule]
        for v in values:
            env[key] = v
            yield from rec(i + 1, env)
        env.pop(key, None)

    yield from rec(0, {})


def _format_value(poly, eval_t1):
    if eval_t1:
        return str(poly.eval_one())
    return dumps(poly.to_json())


def cmd_table(args, out):
    params = parse_params(args.params)
    qs = _q_values(args, params)
    params.pop("q", None)
    writer = csv.writer(out, lineterminator="\n")
    if args.object == "subspaces":
        grid = list(expand_grid(params))
        writer.writerow(["n", "k", "p", *ffield.CSV_HEADER])
        for point in grid:
            n, k = _int(point, "n"), _int(point, "k")
            for p in qs:
                for U in ffield.enumerate_subspaces(n, k, p):
                    writer.writerow([n, k, p, *ffield.csv_row(U)])
        return EXIT_OK
    if args.object == "ribbon":
        if "alpha" in params:
            raise UsageError("table ribbon iterates over compositions of n; drop alpha=")
        grid = list(expand_grid(params))
        writer.writerow(["n", "alpha", "q", "value"])
        for point in grid:
            n = _int(point, "n")
            for alpha in qtnum.compositions(n):
                for q in qs:
                    poly = permstat.ribbon_qt(alpha, q, point.get("route", "descent_sum"))
                    writer.writerow([n, ",".join(map(str, alpha)), q, _format_value(poly, args.eval_t1)])
        return EXIT_OK
    if args.object not in OBJECTS:
        raise UsageError(f"unknown object {args.object!r}")
    grid = list(expand_grid(params))
    writer.writerow([*params, "q", "value"])
    for point in grid:
        for q in qs:
            try:
                poly = OBJECTS[args.object]({k: str(v) for k, v in point.items()}, q)
            except (UsageError, DegreeGuardError, NonZeroRemainder):
                raise
            except ValueError as err:
                raise UsageError(str(err)) from None
            writer.writerow([*(point[k] for k in params), q, _format_value(poly, args.eval_t1)])
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, action="append", help="integer q >= 2 (repeatable)")
    common.add_argument("--out", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for check suites")
    common.add_argument("--degree-guard", type=int, default=None, help="largest exponent allowed")

    parser = argparse.ArgumentParser(prog="qtbinomial", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute one polynomial")
    p.add_argument("object", help=", ".join(OBJECTS))
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", parents=[common], help="run a named identity suite")
    p.add_argument("suite", help=", ".join(checks.SUITES))
    p.add_argument("params", nargs="*", help="bounds such as n=6 k=3 box=3,3,3")
    p.add_argument("--no-timing", action="store_true", help="leave wall times out of the report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", parents=[common], help="tabulate over a grid as CSV")
    p.add_argument("object", help="any compute object, 'ribbon', or 'subspaces'")
    p.add_argument("params", nargs="*", help="grid such as n=0..4 k=0..n")
    p.add_argument("--eval-t1", action="store_true", help="print the value at t = 1")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.degree_guard is not None:
            if args.degree_guard < 1:
                raise UsageError("--degree-guard must be positive")
            with degree_guard(args.degree_guard):
                return args.func(args, out)
        return args.func(args, out)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except DegreeGuardError as err:
        print(f"degree guard: {err}", file=sys.stderr)
        return EXIT_GUARD
    except NonZeroRemainder as err:
        print(f"inexact division: {err}", file=sys.stderr)
        return EXIT_MATH


def entry():
    sys.exit(main())
