"""``rotor`` command line: run rotation programs, audit matrices, self-test.

Exit codes: 0 success, 2 lex/parse error, 3 evaluation error,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .dsl.evaluator import EvalError, InvariantViolation, evaluate, render
from .dsl.lexer import LexError
from .dsl.parser import ParseError, parse_source
from .rotation import RotationConvention, audit_convention
from .selftest import run_selftest
from .su2 import NotSpecialUnitary

EXIT_OK, EXIT_PARSE, EXIT_EVAL, EXIT_INTERNAL = 0, 2, 3, 4


def parse_complex(text: str) -> complex:
    """``re+imi`` style literal (``i`` or ``j`` as the imaginary unit)."""
    t = text.strip().replace(" ", "")
    if t.endswith("i"):
        t = t[:-1] + "j"
    return complex(t)


def parse_matrix(text: str) -> np.ndarray:
    parts = [p for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("expected four comma-separated entries a11,a12,a21,a22")
    return np.array([parse_complex(p) for p in parts]).reshape(2, 2)


def _run_program(source: str, args) -> int:
    try:
        program = parse_source(source)
    except (LexError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        trace = evaluate(program, RotationConvention(args.convention))
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except EvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    sys.stdout.write(render(trace, args.format))
    return EXIT_OK


def cmd_run(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        return _run_program(fh.read(), args)


def cmd_eval(args) -> int:
    return _run_program(args.program, args)


def cmd_audit(args) -> int:
    try:
        w = parse_matrix(args.matrix)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        report = audit_convention(w)
    except NotSpecialUnitary as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    if args.format == "json":
        print(json.dumps({"schema": 1, "audit": report.as_dict()}, indent=2))
    else:
        axis = ", ".join(f"{v:.12g}" for v in report.axis)
        print(f"handedness: {report.handedness.value}")
        print(f"axis:       ({axis})")
        print(f"angle:      {report.angle:.12g} rad")
        if report.note:
            print(f"note:       {report.note}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    return EXIT_OK if run_selftest() else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rotor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def output_opts(sp):
        sp.add_argument("--convention", choices=["right", "left"], default="right")
        sp.add_argument("--format", choices=["text", "json"], default="text")

    run = sub.add_parser("run", help="run a .rot program file")
    run.add_argument("file")
    output_opts(run)
    run.set_defaults(func=cmd_run)

    ev = sub.add_parser("eval", help="run program text given on the command line")
    ev.add_argument("program")
    output_opts(ev)
    ev.set_defaults(func=cmd_eval)

    au = sub.add_parser("audit", help="classify the screw sense of a 2x2 special unitary")
    au.add_argument("--matrix", required=True, help='"a11,a12,a21,a22", entries like 0.5+0.5i')
    au.add_argument("--format", choices=["text", "json"], default="text")
    au.set_defaults(func=cmd_audit)

    st = sub.add_parser("selftest", help="run the bundled example programs")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
