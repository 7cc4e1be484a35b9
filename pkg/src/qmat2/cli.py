"""Command line interface: ``qmat2 {power,fpoly,verify,vzw}``.

Exit codes: 0 success, 1 an identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closedform
from .chebpoly import f_rec, f_sum
from .identities import check_vzw, run_suite, vzw_family_verdicts
from .qmat import GENERIC, mat_pow

METHODS = ("brute", "ch1", "ch2")
FORMATS = ("text", "json", "latex")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def compute_power(n: int, method: str):
    if method == "brute":
        return mat_pow(GENERIC, n)
    if method == "ch1":
        return closedform.power_ch1(GENERIC, n)
    return closedform.power_ch2(GENERIC, n)


def render_power(M, n: int, fmt: str) -> str:
    if fmt == "json":
        return _dump(M.to_json())
    lines = []
    for sym, entry in zip("abcd", M.entries):
        if fmt == "latex":
            lines.append(f"{sym}_{{{n}}} = {entry.latex()}")
        else:
            lines.append(f"{sym}_{n} = {entry}")
    return "\n".join(lines)


def cmd_power(args, parser) -> int:
    n = args.n
    if n < 0:
        parser.error("--n must be non-negative")
    if args.method in ("ch1", "ch2") and n < 1:
        parser.error(f"method {args.method} needs --n >= 1")
    M = compute_power(n, args.method)
    print(render_power(M, n, args.format))
    if args.compare:
        methods = ["ch1", "ch2", "brute"] if n >= 1 else ["brute"]
        results = {m: compute_power(n, m) for m in methods}
        ok = all(results[m] == results["brute"] for m in methods)
        label = " == ".join(methods)
        print(f"{label}: {'OK' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    return 0


def cmd_fpoly(args, parser) -> int:
    n = args.n
    if n < -1:
        parser.error("--n must be >= -1")
    p = f_sum(n)
    if args.format == "json":
        payload = {"n": n, "terms": [[a, b, str(c)] for (a, b), c in p.items()]}
        print(_dump(payload))
    elif args.format == "latex":
        print(p.latex())
    else:
        print(p)
    if args.check:
        ok = f_rec(n) == p and p.is_weighted_homogeneous(n)
        print(f"f_sum == f_rec: {'OK' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    return 0


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return _dump([r.to_json() for r in reports])
    lines = [r.line() for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports)} checks, {failed} failed")
    return "\n".join(lines)


def cmd_verify(args, parser) -> int:
    if args.max < 1:
        parser.error("--max must be at least 1")
    reports = run_suite(args.max)
    print(_render_reports(reports, args.format))
    return 0 if all(r.passed for r in reports) else 1


def cmd_vzw(args, parser) -> int:
    if args.m < 0 or args.n < 0:
        parser.error("--m and --n must be non-negative")
    report = check_vzw(args.m, args.n)
    verdicts = vzw_family_verdicts(args.m, args.n)
    branch = "m<n" if args.m < args.n else "m>=n"
    if args.format == "json":
        payload = report.to_json()
        payload["branch"] = branch
        payload["families"] = {k: (w.to_json() if w else None) for k, w in verdicts.items()}
        print(_dump(payload))
    else:
        for family, w in verdicts.items():
            print(f"{family}: {'PASS' if w is None else 'FAIL [' + str(w) + ']'}")
        print(f"{report.line()} branch {branch}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmat2", description="Powers of the 2x2 quantum matrix and checks of their identities."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="entries of A^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="brute")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--compare", action="store_true", help="compare every method against brute force")
    p.set_defaults(func=cmd_power, parser=p)

    p = sub.add_parser("fpoly", help="the polynomial f_n(x, y)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--check", action="store_true", help="cross-check binomial sum against recurrence")
    p.set_defaults(func=cmd_fpoly, parser=p)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--max", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify, parser=p)

    p = sub.add_parser("vzw", help="mixed-power relations for one (m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_vzw, parser=p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, args.parser)


if __name__ == "__main__":
    sys.exit(main())
