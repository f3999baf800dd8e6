"""Command-line entry point.

    coha verify <subcheck> --n N [--format text|json] [--jobs J] [--no-timing]
    coha apply --op OP --state STATE --n N [--format text|json]
    coha cartan --n N [--format text|json]
    coha report-all --n N [--format text|json] [--jobs J] [--no-timing]

Exit status: 0 if every executed check passed, 1 on a failed check, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .exterior import ElementParseError, element_to_json, format_element, parse_element
from .operators import operator_by_name
from .relations import cartan_D, extract_cartan
from .suites import SUITES, cap_for, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jobs(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    try:
        jobs = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--jobs expects an integer or 'auto', got {value!r}")
    if jobs < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return jobs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coha", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank of V(n)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    runs = argparse.ArgumentParser(add_help=False)
    runs.add_argument("--jobs", type=_jobs, default=1, help="worker count or 'auto'")
    runs.add_argument("--no-timing", action="store_true",
                      help="report elapsed_ms as 0 so output is byte-reproducible")

    p = sub.add_parser("verify", parents=[common, runs], help="run one verification suite")
    p.add_argument("subcheck", help=", ".join(SUITES))

    p = sub.add_parser("apply", parents=[common], help="apply an operator to an element")
    p.add_argument("--op", required=True, help="raise:i lower:i tlower:i H T:i S:i E:i F:i Hi:i")
    p.add_argument("--state", required=True, help="e.g. '0,1' or '+1 * [0,1] -1/2 * [2]'")

    sub.add_parser("cartan", parents=[common], help="extracted vs expected Cartan matrix")
    sub.add_parser("report-all", parents=[common, runs], help="run every suite")
    return parser


def _check_n(check: str, n: int):
    if n < 1:
        raise UsageError(f"--n must be at least 1, got {n}")
    cap = cap_for(check)
    if n > cap:
        raise UsageError(f"{check} is capped at n <= {cap} (set COHA_MAX_N to override)")


def _emit_reports(reports, fmt: str, timing: bool, single: bool):
    if fmt == "json":
        data = [r.to_json(timing) for r in reports]
        print(json.dumps(data[0] if single else data, indent=2, sort_keys=False))
    else:
        for r in reports:
            print(r.to_text(timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.subcheck not in SUITES:
        raise UsageError(f"unknown subcheck {args.subcheck!r}; choose from {', '.join(SUITES)}")
    _check_n(args.subcheck, args.n)
    report = run_suite(args.subcheck, args.n)
    return _emit_reports([report], args.format, not args.no_timing, single=True)


def cmd_report_all(args) -> int:
    checks = [c for c in SUITES if args.n <= cap_for(c)]
    if args.n < 1:
        raise UsageError(f"--n must be at least 1, got {args.n}")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run_suite, checks, [args.n] * len(checks)))
    else:
        reports = [run_suite(c, args.n) for c in checks]
    return _emit_reports(reports, args.format, not args.no_timing, single=False)


def cmd_apply(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be at least 1, got {args.n}")
    try:
        op = operator_by_name(args.op, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        state = parse_element(args.state, args.n)
    except ElementParseError as exc:
        caret = " " * exc.position + "^"
        raise UsageError(f"cannot parse --state: {exc}\n  {args.state}\n  {caret}")
    except ValueError as exc:
        raise UsageError(f"cannot parse --state: {exc}")
    result = op(state)
    if args.format == "json":
        print(json.dumps({"op": args.op, "n": args.n, "result": element_to_json(result)}, indent=2))
    else:
        print(format_element(result))
    return EXIT_OK


def cmd_cartan(args) -> int:
    if args.n < 2:
        raise UsageError(f"cartan needs --n >= 2, got {args.n}")
    got = extract_cartan(args.n)
    want = cartan_D(args.n + 1)
    equal = got == want
    verdict = "EQUAL" if equal else "DIFFERENT"
    if args.format == "json":
        print(json.dumps({
            "n": args.n,
            "extracted": [list(r) for r in got.entries],
            "expected": [list(r) for r in want.entries],
            "verdict": verdict,
        }, indent=2))
    else:
        left, right = got.format().splitlines(), want.format().splitlines()
        width = max(len(s) for s in left)
        print(f"{'extracted':<{width}}   D_{args.n + 1}")
        for a, b in zip(left, right):
            print(f"{a:<{width}}   {b}")
        print(f"verdict: {verdict}")
    return EXIT_OK if equal else EXIT_FAIL


COMMANDS = {
    "verify": cmd_verify,
    "apply": cmd_apply,
    "cartan": cmd_cartan,
    "report-all": cmd_report_all,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"coha {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
