"""Command line: one-shot evaluation, verification suites, and a REPL.

Exit codes: 0 on success (all checks passed), 1 on a verification failure,
2 on a usage, parse, or evaluation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EvalError, ParseError, UnsupportedFragmentError
from .parser import evaluate, parse
from .printing import render, render_text
from .suites import SUITE_NAMES, SuiteReport, run_suite

_USER_ERRORS = (ParseError, EvalError, UnsupportedFragmentError)


def _format_report_text(report: SuiteReport) -> str:
    lines = [f"suite {report.suite}"]
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"  {check.name:55s} {status} ({check.cases} cases)")
        for failure in check.failures:
            lines.append(f"    input:      {failure.input}")
            lines.append(f"    difference: {render_text(failure.difference)}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def cmd_eval(expr: str, fmt: str) -> int:
    try:
        result = evaluate(parse(expr))
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(result, fmt))
    return 0


def cmd_verify(suite: str, max_degree: int, cases: int, seed: int, fmt: str) -> int:
    try:
        report = run_suite(suite, max_degree=max_degree, cases=cases, seed=seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if fmt == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(_format_report_text(report))
    return 0 if report.passed else 1


_REPL_HELP = """\
Enter an expression to evaluate it, or a directive:
  :help            show this message
  :format FORMAT   set the output format (text, latex, json)
  :quit            leave the session"""


def cmd_repl(stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    fmt = "text"
    interactive = stdin is sys.stdin and sys.stdin.isatty()
    while True:
        if interactive:
            stdout.write("opalg> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            return 0
        line = line.strip()
        if not line:
            continue
        if line.startswith(":"):
            parts = line.split()
            if parts[0] == ":quit":
                return 0
            if parts[0] == ":help":
                print(_REPL_HELP, file=stdout)
            elif parts[0] == ":format":
                if len(parts) == 2 and parts[1] in ("text", "latex", "json"):
                    fmt = parts[1]
                else:
                    print("usage: :format text|latex|json", file=stdout)
            else:
                print(f"unknown directive {parts[0]!r} (try :help)", file=stdout)
            continue
        try:
            print(render(evaluate(parse(line)), fmt), file=stdout)
        except _USER_ERRORS as exc:
            print(f"error: {exc}", file=stdout)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opalg",
        description="Exact symbolic operator algebra for the canonical pair (q, p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one expression and print it")
    p_eval.add_argument("expr", help="expression in the surface grammar")
    p_eval.add_argument(
        "--format", choices=("text", "latex", "json"), default="text", dest="fmt"
    )

    p_verify = sub.add_parser("verify", help="run identity verification suites")
    p_verify.add_argument(
        "--suite", choices=SUITE_NAMES + ("all",), default="all"
    )
    p_verify.add_argument("--max-degree", type=int, default=6)
    p_verify.add_argument("--cases", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    sub.add_parser("repl", help="interactive read-eval-print session")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "eval":
        return cmd_eval(args.expr, args.fmt)
    if args.command == "verify":
        return cmd_verify(args.suite, args.max_degree, args.cases, args.seed, args.fmt)
    return cmd_repl()


if __name__ == "__main__":
    sys.exit(main())
