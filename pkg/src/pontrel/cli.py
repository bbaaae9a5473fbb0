"""Command line: ``pontrel analyze|eval|verify <file>``.

Exit codes: 0 all certificates pass, 1 a certificate or expected value
failed, 2 input error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import InputError, PreconditionError
from .problem import load_problem
from .report import EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION, run_analyze, run_eval, run_verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pontrel",
        description="Exact analysis of operator representations of matrix Nevanlinna functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run every stage and print the certificate table")
    p.add_argument("file")
    p.add_argument("--output", choices=("json", "text"), default="text")

    p = sub.add_parser("eval", help="evaluate Q, the gamma field and resolvents at one point")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="Z", help="exact complex point, e.g. 1+i")

    p = sub.add_parser("verify", help="compare against the file's expected block")
    p.add_argument("file")
    return parser


def _print_matrix(name, rows, out):
    print(f"{name}:", file=out)
    for r in rows:
        print("  " + "  ".join(f"{x:>8}" for x in r), file=out)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        pf = load_problem(args.file)
        if args.command == "analyze":
            report = run_analyze(pf)
            out.write(report.to_json() if args.output == "json" else report.to_text())
            return report.exit_code
        if args.command == "eval":
            values = run_eval(pf, args.at)
            print(f"z = {values.pop('z')}", file=out)
            for name, rows in values.items():
                _print_matrix(name, rows, out)
            return EXIT_OK
        result = run_verify(pf)
        for line in result.diffs:
            print(f"MISMATCH {line}", file=out)
        for c in result.report.certificates:
            if c["status"] == "fail":
                print(f"FAILED {c['name']}", file=out)
        if result.report.error:
            e = result.report.error
            print(f"stopped at stage {e['stage']}: {e['type']}: {e['message']}", file=out)
        n_exp = len((pf.expected or {}))
        print(
            f"{n_exp} expected entries, {len(result.diffs)} mismatches, "
            f"{len(result.report.certificates)} certificates, exit {result.exit_code}",
            file=out,
        )
        return result.exit_code
    except InputError as exc:
        print(f"input error: {exc}", file=err)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
