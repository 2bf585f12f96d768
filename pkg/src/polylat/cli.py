"""Command-line front end.

Subcommands:

    count    one exact count, selectable computation route
    table    a full table of counts (csv, json or md)
    gf       leading coefficients of one of the generating functions
    verify   run a verification suite, JSON report on stdout
    asympt   fit a width polynomial and compare with the published one

Exit codes: 0 on success (verification discrepancies with published values
do not fail a run), 1 when a verification check fails, 2 on usage errors.
All output is deterministic; counts are printed in full decimal.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics, gfseries, oracle, verify
from .counting import (
    FAMILIES,
    build_table,
    count_cc,
    count_dcc,
    r_conv,
    r_gf,
    s_closed,
    s_conv,
)
from .gfseries import gf_coeffs

# count: family -> method -> counter(k, size). The first listed method is
# the family's default (its authoritative route).
_COUNTERS = {
    "dcc": {
        "closed": count_dcc,
        "gf": lambda k, n: gfseries.gf_coeff(gfseries.gf_dcc_width(k), n),
        "oracle": oracle.enum_dcc,
    },
    "cc": {
        "gf": count_cc,
        "oracle": oracle.enum_cc,
    },
    "dplateau": {
        "closed": s_closed,
        "conv": s_conv,
        "gf": lambda k, m: gfseries.gf_coeff(gfseries.gf_S_k(k), m),
        "oracle": oracle.enum_dplateau,
    },
    "plateau": {
        "gf": r_gf,
        "conv": r_conv,
        "oracle": oracle.enum_plateau,
    },
}

_GF_BUILDERS = {
    "Sk": lambda k: gfseries.gf_S_k(k),
    "S": lambda k: gfseries.gf_S(),
    "Ck": lambda k: gfseries.gf_C(k),
    "Rk": lambda k: gfseries.gf_R(k),
}


def _usage_error(parser: argparse.ArgumentParser, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    print(parser.format_usage(), end="", file=sys.stderr)
    return 2


def cmd_count(args, parser) -> int:
    family = args.family
    size = args.n if args.n is not None else args.m
    if size is None:
        return _usage_error(parser, "a size is required (-n for areas, -m for lateral areas)")
    methods = _COUNTERS[family]
    method = args.method or next(iter(methods))
    if method not in methods:
        valid = ", ".join(methods)
        return _usage_error(parser, f"method {method!r} is not available for family {family!r} (valid: {valid})")
    if args.dump and method != "oracle":
        return _usage_error(parser, "--dump requires --method oracle")
    try:
        if method == "oracle":
            value = methods[method](args.k, size, workers=args.workers)
        else:
            value = methods[method](args.k, size)
    except ValueError as exc:
        return _usage_error(parser, str(exc))
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as stream:
            oracle.dump_objects(family, args.k, size, stream)
    if args.json:
        print(json.dumps({"family": family, "k": args.k, "size": size, "method": method, "value": value}))
    else:
        print(value)
    return 0


def _table_rows(table) -> list[list[int]]:
    return [[size] + table.row(size) for size in table.sizes()]


def cmd_table(args, parser) -> int:
    try:
        table = build_table(args.family, args.k_max, args.size_max)
    except ValueError as exc:
        return _usage_error(parser, str(exc))
    header = ["size"] + [f"k={k}" for k in range(1, args.k_max + 1)]
    rows = _table_rows(table)
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(v) for v in row))
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "family": args.family,
                    "k_max": args.k_max,
                    "size_max": args.size_max,
                    "header": header,
                    "rows": rows,
                }
            )
        )
    else:  # md
        print("| " + " | ".join(header) + " |")
        print("|" + "|".join("---" for _ in header) + "|")
        for row in rows:
            print("| " + " | ".join(str(v) for v in row) + " |")
    return 0


def cmd_gf(args, parser) -> int:
    if args.which != "S" and args.k is None:
        return _usage_error(parser, f"-k is required for --which {args.which}")
    try:
        gf = _GF_BUILDERS[args.which](args.k)
        coeffs = gf_coeffs(gf, args.terms)
    except ValueError as exc:
        return _usage_error(parser, str(exc))
    if args.json:
        print(json.dumps(coeffs))
    else:
        for c in coeffs:
            print(c)
    return 0


def cmd_verify(args, parser) -> int:
    report = verify.run_suite(args.suite, workers=args.workers)
    print(report.to_json())
    return 1 if report.failed else 0


def cmd_asympt(args, parser) -> int:
    family, offset = args.family, args.offset
    k_min = offset + 1
    needed = k_min + offset + 2 - 1
    k_max = args.k_max if args.k_max is not None else k_min + offset + 6
    if k_max < needed:
        return _usage_error(
            parser, f"--k-max {k_max} is too small: a degree-{offset} fit needs samples up to k={needed}"
        )
    try:
        fitted = asymptotics.fit_family(family, offset, k_min, k_max - k_min + 1)
    except asymptotics.FitError as exc:
        print(f"fit failed: {exc}", file=sys.stderr)
        return 1
    print(asymptotics.format_poly(fitted))
    print(f"degree: {fitted.degree}")
    expected = asymptotics.leading_coeff_expected(family, offset)
    print(f"leading coefficient: {fitted.leading} (expected {expected})")
    if offset <= 6:
        from .reference_tables import published_polynomial

        printed = asymptotics.RatPoly(published_polynomial(family, offset))
        verdict = "match" if printed.coeffs == fitted.coeffs else "MISMATCH"
        print(f"published polynomial: {asymptotics.format_poly(printed)} -> {verdict}")
        if family == "plateau" and offset >= 3:
            print("note: published subscript k+offset read as lateral area 2k+offset")
    else:
        print("published polynomial: none at this offset (fit is an extrapolation)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polylat", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="one exact count")
    p_count.add_argument("--family", required=True, choices=FAMILIES)
    p_count.add_argument("-k", type=int, required=True, help="width (number of columns/strata)")
    p_count.add_argument("-n", type=int, help="area (2D families)")
    p_count.add_argument("-m", type=int, help="lateral area (3D families)")
    p_count.add_argument("--method", choices=("closed", "conv", "gf", "oracle"))
    p_count.add_argument("--workers", type=int, default=1)
    p_count.add_argument("--dump", metavar="PATH", help="with --method oracle: write one object per line")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(fn=cmd_count)

    p_table = sub.add_parser("table", help="full table of counts")
    p_table.add_argument("--family", required=True, choices=FAMILIES)
    p_table.add_argument("--k-max", type=int, required=True)
    p_table.add_argument("--size-max", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json", "md"), default="md")
    p_table.set_defaults(fn=cmd_table)

    p_gf = sub.add_parser("gf", help="generating function coefficients")
    p_gf.add_argument("--which", required=True, choices=("Sk", "S", "Ck", "Rk"))
    p_gf.add_argument("-k", type=int)
    p_gf.add_argument("--terms", type=int, required=True)
    p_gf.add_argument("--json", action="store_true")
    p_gf.set_defaults(fn=cmd_gf)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=verify.SUITES)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.set_defaults(fn=cmd_verify)

    p_asympt = sub.add_parser("asympt", help="fit a width polynomial")
    p_asympt.add_argument("--family", required=True, choices=("cc", "plateau"))
    p_asympt.add_argument("--offset", type=int, required=True)
    p_asympt.add_argument("--k-max", type=int)
    p_asympt.set_defaults(fn=cmd_asympt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "offset", None) is not None and args.offset < 0:
        return _usage_error(parser, "--offset must be >= 0")
    return args.fn(args, parser)


if __name__ == "__main__":
    sys.exit(main())
