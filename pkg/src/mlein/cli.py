"""Command-line interface: ``mlein eval | table | curve | selftest``.

Exit codes: 0 success, 1 failed self-test, 2 usage error, 3 numeric domain
error, 4 convergence failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ConvergenceError, ExponentOverflowError, MleinError
from .harness import (
    curve_filename,
    curve_points,
    evaluate,
    evaluate_table,
    format_table,
    identity_suite,
    parse_real,
    write_curve_csv,
    write_table_csv,
)
from .series import ExpansionParams

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4


def _real(text: str) -> float:
    try:
        return parse_real(text)
    except MleinError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fmt_complex(v) -> str:
    if v is None:
        return "-"
    if v.imag == 0.0:
        return f"{v.real:.16e}"
    return f"{v.real:.16e} {'+' if v.imag >= 0 else '-'} {abs(v.imag):.16e}i"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlein",
        description="Ein/Sin/Cin Mittag-Leffler integrals: series, asymptotics and table reproduction.",
    )
    parser.add_argument("--digits", type=int, default=None,
                        help="oracle working precision in decimal digits "
                             "(overrides MLEIN_PRECISION_DIGITS; default 50)")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one point")
    ev.add_argument("function", choices=("ein", "sin", "cin"))
    ev.add_argument("--alpha", type=_real, required=True)
    ev.add_argument("--beta", type=_real, required=True)
    where = ev.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", type=_real, help="real argument")
    where.add_argument("--z", type=_real, nargs=2, metavar=("MOD", "ARG"),
                       help="complex argument as modulus and argument in radians")
    ev.add_argument("--method", choices=("series", "asym", "both"), default="both")
    ev.add_argument("--stokes", action="store_true",
                    help="include the exponentially small term past the Stokes line (Ein)")
    ev.add_argument("--json", action="store_true", help="print the report as JSON")

    tb = sub.add_parser("table", help="reproduce a table of relative errors")
    tb.add_argument("table", choices=("T1", "T2", "T3"))
    tb.add_argument("--csv", metavar="PATH", help="also write CSV (T3 writes PATH_sin / PATH_cin)")
    tb.add_argument("--stokes", action="store_true")
    tb.add_argument("--jobs", type=int, default=1, help="worker processes")

    cv = sub.add_parser("curve", help="write curve CSVs, one per alpha")
    cv.add_argument("function", choices=("ein", "sin", "cin"))
    cv.add_argument("--alpha", type=_real, nargs="+", required=True)
    cv.add_argument("--beta", type=_real, default=1.0)
    cv.add_argument("--x-min", type=_real, required=True)
    cv.add_argument("--x-max", type=_real, required=True)
    cv.add_argument("--step", type=_real, required=True)
    cv.add_argument("--source", choices=("series", "asym-leading"), default="series")
    cv.add_argument("--out-dir", default=".")

    sub.add_parser("selftest", help="run the identity suite")
    return parser


def _cmd_eval(args) -> int:
    import cmath

    if args.x is not None:
        z = complex(args.x)
    else:
        mod, arg = args.z
        z = cmath.rect(mod, arg)
        if arg == 0.0:
            z = complex(mod)
    report = evaluate(args.function, ExpansionParams(args.alpha, args.beta), z,
                      args.method, stokes=args.stokes, digits=args.digits)
    if args.json:
        print(json.dumps(report.to_json_dict()))
        return EXIT_OK
    print(f"series_value   {_fmt_complex(report.series_value)}")
    print(f"asym_value     {_fmt_complex(report.asym_value)}")
    if report.abs_rel_error is not None:
        print(f"abs_rel_error  {report.abs_rel_error:.3e}")
    if report.branch is not None:
        print(f"branch         {report.branch}")
        print(f"trunc_indices  {report.trunc_indices}")
    for w in report.warnings:
        print(f"warning        {w}")
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = evaluate_table(args.table, stokes=args.stokes, jobs=max(1, args.jobs), digits=args.digits)
    sys.stdout.write(format_table(rows))
    if args.csv:
        if args.table == "T3":
            stem, ext = os.path.splitext(args.csv)
            for fn in ("sin", "cin"):
                write_table_csv([r for r in rows if r[0].function == fn], f"{stem}_{fn}{ext or '.csv'}")
        else:
            write_table_csv(rows, args.csv)
    return EXIT_OK


def _cmd_curve(args) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    for a in args.alpha:
        pts = curve_points(args.function, a, args.beta, args.x_min, args.x_max, args.step,
                           args.source, args.digits)
        path = os.path.join(args.out_dir, curve_filename(args.function, a, args.source))
        write_curve_csv(pts, path)
        print(path)
    return EXIT_OK


def _cmd_selftest(args) -> int:
    ok = True
    for name, passed, detail in identity_suite(args.digits):
        print(f"{'PASS' if passed else 'FAIL'}  {name}  ({detail})")
        ok &= passed
    return EXIT_OK if ok else EXIT_SELFTEST


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"eval": _cmd_eval, "table": _cmd_table, "curve": _cmd_curve, "selftest": _cmd_selftest}
    try:
        return handlers[args.command](args)
    except ConvergenceError as exc:
        print(f"mlein: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (MleinError, ExponentOverflowError) as exc:
        print(f"mlein: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
