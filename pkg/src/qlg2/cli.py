"""Command-line front end: `qlg2 verify` runs named checks, `qlg2 spectrum`
prints the exact eigenvalue table.

Exit codes: 0 all selected checks pass, 1 verification failure, 2 usage
error, 3 internal engine error.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from fractions import Fraction

from .checks import CHECKS, Context, run_suite
from .parthasarathy import spectrum_growth

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _render_md(results, timings):
    lines = ["| check | status | statement |", "|---|---|---|"]
    for r in results:
        lines.append(f"| {r.check_id} | {r.status} | {r.statement} |")
    n_pass = sum(1 for r in results if r.status == "pass")
    lines.append("")
    lines.append(f"{n_pass}/{len(results)} checks pass")
    for r in results:
        if r.status != "pass":
            lines.append(f"FAIL {r.check_id}: {r.residual}")
    if timings:
        lines.append("")
        for r in results:
            lines.append(f"{r.check_id}: {r.elapsed_ms:.0f} ms")
    return "\n".join(lines) + "\n"


def _render_json(results, ctx, timings):
    payload = {
        "schema": "qlg2-check-report/1",
        "seed": ctx.seed,
        "degree_cap": ctx.degree_cap,
        "results": [r.as_dict(timings=timings) for r in results],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_verify(args):
    if args.check != "all" and args.check not in CHECKS:
        known = ", ".join(sorted(CHECKS))
        print(f"unknown check id {args.check!r}; known ids: all, {known}",
              file=sys.stderr)
        return EXIT_USAGE
    ctx = Context(seed=args.seed, degree_cap=args.degree_cap)
    ids = sorted(CHECKS) if args.check == "all" else [args.check]
    results = run_suite(ids, ctx)
    text = (_render_json(results, ctx, args.timings) if args.report == "json"
            else _render_md(results, args.timings))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if all(r.status == "pass" for r in results) else EXIT_FAIL


def _cmd_spectrum(args):
    if args.v_den <= 0 or args.v_num <= 0 or args.v_num >= args.v_den:
        print("require 0 < v_num/v_den < 1", file=sys.stderr)
        return EXIT_USAGE
    if args.shell_max < 1:
        print("require shell_max >= 1", file=sys.stderr)
        return EXIT_USAGE
    sp = spectrum_growth(Fraction(args.v_num, args.v_den), args.shell_max)
    header = "n1,n2,c_lambda_exact_num,c_lambda_exact_den,c_lambda_float"
    lines = [header]
    for n1, n2, val in sp.rows:
        lines.append(f"{n1},{n2},{val.numerator},{val.denominator},{float(val)!r}")
    csv_text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    mins = ", ".join(f"s={s}: {float(v):.6g}"
                     for s, v in sorted(sp.shell_minima.items()))
    print(f"# shell minima: {mins}")
    print(f"# strictly increasing: {sp.monotone}; all positive: {sp.positive}")
    return EXIT_PASS if (sp.monotone and sp.positive) else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(
        prog="qlg2",
        description="exact verification suite for the Dolbeault-Dirac "
                    "operator on the rank-two quantum Lagrangian Grassmannian")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run named checks or the whole suite")
    v.add_argument("--check", default="all", metavar="ID",
                   help="check id or 'all' (default)")
    v.add_argument("--report", choices=("json", "md"), default="md")
    v.add_argument("--out", metavar="PATH", help="write the report to a file")
    v.add_argument("--seed", type=int, default=20240801,
                   help="seed for the randomized probes")
    v.add_argument("--degree-cap", type=int, default=3,
                   help="radical degree cap for the quotient reduction")
    v.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in the report")
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("spectrum", help="exact Casimir eigenvalue table")
    s.add_argument("--v-num", type=int, required=True)
    s.add_argument("--v-den", type=int, required=True)
    s.add_argument("--shell-max", type=int, required=True)
    s.add_argument("--csv", metavar="PATH", help="write the table as CSV")
    s.set_defaults(fn=_cmd_spectrum)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        return EXIT_INTERNAL
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
