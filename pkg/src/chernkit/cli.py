"""Command-line front end.

    chernkit eval FILE [--json]
    chernkit expr -e EXPR [--json]
    chernkit --seed-docs [DIR]

Exit codes: 0 ok, 1 runtime error, 2 parse/static error, 3 failed assertion.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .script.evaluator import AssertionFailure, EvalError, Evaluator
from .script.parser import ParseError, Script, parse, parse_expression
from .script.parser import Print

EXIT_OK, EXIT_RUNTIME, EXIT_PARSE, EXIT_ASSERT = 0, 1, 2, 3


def demo_scripts() -> dict:
    """Built-in example scripts, name -> source."""
    root = resources.files("chernkit") / "demos"
    return {p.name: p.read_text(encoding="utf-8")
            for p in sorted(root.iterdir(), key=lambda p: p.name) if p.name.endswith(".chk")}


def run_source(source: str, origin: str, fmt: str, out, err, *, expression: bool = False) -> int:
    try:
        if expression:
            node = parse_expression(source)
            script = Script((Print(node, line=node.line, column=node.column),))
        else:
            script = parse(source)
    except ParseError as exc:
        print(f"{origin}:{exc.line}:{exc.column}: parse error: {exc.message}", file=err)
        return EXIT_PARSE
    emit = lambda line: print(line, file=out)
    try:
        Evaluator(fmt).run(script, emit=emit)
    except ParseError as exc:
        print(f"{origin}:{exc.line}:{exc.column}: error: {exc.message}", file=err)
        return EXIT_PARSE
    except AssertionFailure as exc:
        print(f"{origin}:{exc.line}:{exc.column}: {exc.message}", file=err)
        return EXIT_ASSERT
    except EvalError as exc:
        print(f"{origin}:{exc.line}:{exc.column}: error: {exc.message}", file=err)
        return EXIT_RUNTIME
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chernkit", description="Chern-class calculator")
    parser.add_argument("--seed-docs", nargs="?", const="-", metavar="DIR",
                        help="emit the built-in example scripts (to DIR, or stdout)")
    sub = parser.add_subparsers(dest="command")
    p_eval = sub.add_parser("eval", help="run a script file")
    p_eval.add_argument("file")
    p_eval.add_argument("--json", action="store_true")
    p_expr = sub.add_parser("expr", help="evaluate one expression")
    p_expr.add_argument("-e", dest="expression", required=True)
    p_expr.add_argument("--json", action="store_true")
    return parser


def seed_docs(target: str, out) -> int:
    scripts = demo_scripts()
    if target == "-":
        for name, source in scripts.items():
            print(f"# ---- {name} ----", file=out)
            out.write(source)
        return EXIT_OK
    directory = Path(target)
    directory.mkdir(parents=True, exist_ok=True)
    for name, source in scripts.items():
        (directory / name).write_text(source, encoding="utf-8")
        print(directory / name, file=out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.seed_docs is not None:
        return seed_docs(args.seed_docs, out)
    if args.command is None:
        build_parser().print_usage(err)
        return EXIT_PARSE
    fmt = "json" if args.json else "text"
    if args.command == "eval":
        try:
            source = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"chernkit: cannot read {args.file}: {exc.strerror}", file=err)
            return EXIT_RUNTIME
        return run_source(source, args.file, fmt, out, err)
    return run_source(args.expression, "<expr>", fmt, out, err, expression=True)


def entry() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(main())
