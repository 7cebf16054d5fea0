"""The jssec command line: run programs, lint files, execute the corpus.

Exit codes are shared by all subcommands: 0 success / no findings, 1 runtime
error / findings / failed expectations, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LexError, ParseError
from .evaluator import Interpreter
from .linter import STATIC_RULES, Diagnostic, build_scope_model, lint_program
from .object_model import number_to_string, tag_of
from .realm import create_realm
from .syntax import expectation_statement, extract_expectations, parse_program


# ---------------------------------------------------------------------------
# Display
# ---------------------------------------------------------------------------

def display(value, _active=None) -> str:
    """Canonical one-line rendering of a value.

    Strings are single-quoted, functions show as the bare word `function`,
    window as `[object Window]`, arrays and plain objects recurse with
    `[cycle]` standing in for any ancestor reached again.  Accessor-backed
    properties render as `[accessor]` (display never runs user code).
    """
    tag = tag_of(value)
    if tag == "undefined":
        return "undefined"
    if tag == "null":
        return "null"
    if tag == "boolean":
        return "true" if value else "false"
    if tag == "number":
        return number_to_string(value)
    if tag == "string":
        escaped = value.replace("\\", "\\\\").replace("'", "\\'")
        return f"'{escaped}'"

    if value.class_name == "Window":
        return "[object Window]"
    if value.callable is not None:
        return "function"
    if _active is None:
        _active = frozenset()
    if id(value) in _active:
        return "[cycle]"
    _active = _active | {id(value)}

    if value.class_name == "Array":
        length_desc = value.get_own("length")
        length = 0
        if length_desc is not None and length_desc.is_data \
                and isinstance(length_desc.value, float):
            length = int(length_desc.value)
        parts = []
        for i in range(length):
            desc = value.get_own(str(i))
            if desc is None:
                parts.append("undefined")
            elif desc.is_data:
                parts.append(display(desc.value, _active))
            else:
                parts.append("[accessor]")
        return "[" + ", ".join(parts) + "]"

    parts = []
    for key, desc in value.properties.items():
        if not desc.enumerable:
            continue
        rendered = display(desc.value, _active) if desc.is_data else "[accessor]"
        parts.append(f"{key}: {rendered}")
    return "{" + ", ".join(parts) + "}"


# ---------------------------------------------------------------------------
# run
# ---------------------------------------------------------------------------

def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _parse_or_report(path: str, source: str, err=None):
    err = err if err is not None else sys.stderr
    try:
        return parse_program(source)
    except (LexError, ParseError) as exc:
        span = exc.span
        where = f"{span.line}:{span.column}" if span else "?"
        print(f"{path}:{where}: parse error: {exc.message}", file=err)
        return None


def cmd_run(path: str, trace: bool = False, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    source = _read(path)
    program = _parse_or_report(path, source, err)
    if program is None:
        return 2
    on_trace = None
    if trace:
        # render at execution time: later mutation must not repaint the past
        on_trace = lambda stmt, value: print(display(value), file=out)
    interp = Interpreter(create_realm(), on_trace=on_trace)
    completion = interp.run_program(program)
    if completion.kind == "error":
        span = completion.error_span
        where = f"{span.line}:{span.column}" if span else "?"
        print(f"{path}:{where}: runtime error: {completion.error_message}",
              file=err)
        return 1
    return 0


# ---------------------------------------------------------------------------
# lint
# ---------------------------------------------------------------------------

def cmd_lint(paths, fmt: str = "text", rules=None, out=None,
             err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    config = None if rules is None else frozenset(rules)
    diagnostics: list[Diagnostic] = []
    for path in paths:
        source = _read(path)
        program = _parse_or_report(path, source, err)
        if program is None:
            return 2
        scope = build_scope_model(program)
        diagnostics.extend(lint_program(program, scope, config, file=path))
    diagnostics.sort(key=Diagnostic.sort_key)
    if fmt == "json":
        payload = [{
            "file": d.file,
            "rule": d.rule,
            "severity": d.severity,
            "line": d.span.line,
            "col": d.span.column,
            "endLine": d.span.end_line,
            "endCol": d.span.end_column,
            "message": d.message,
        } for d in diagnostics]
        print(json.dumps(payload, indent=2), file=out)
    else:
        for d in diagnostics:
            print(f"{d.file}:{d.span.line}:{d.span.column}: {d.rule} "
                  f"{d.message}", file=out)
    return 1 if diagnostics else 0


# ---------------------------------------------------------------------------
# test (corpus runner)
# ---------------------------------------------------------------------------

@dataclass
class CorpusResult:
    file: str
    total: int = 0
    passed: int = 0
    failed: list = field(default_factory=list)  # (span, expected, actual)

    @property
    def ok(self) -> bool:
        return not self.failed


def run_corpus_file(path) -> CorpusResult:
    """Evaluate one corpus file against its expectation comments."""
    path = Path(path)
    result = CorpusResult(path.name)
    source = path.read_text(encoding="utf-8")
    try:
        expectations = extract_expectations(source)
        program = parse_program(source)
    except (LexError, ParseError) as exc:
        result.total = 1
        result.failed.append((exc.span, "<parse>", exc.message))
        return result

    rendered: dict[int, str] = {}
    interp = Interpreter(
        create_realm(),
        # snapshot display at execution time (last run wins for loops)
        on_trace=lambda stmt, value: rendered.__setitem__(id(stmt),
                                                          display(value)))
    completion = interp.run_program(program)
    failing_stmt = interp.current_statement if completion.kind == "error" else None

    result.total = len(expectations)
    for expectation in expectations:
        stmt = expectation_statement(program, expectation)
        expected = (expectation.expected if expectation.kind == "answers"
                    else "raises an error")
        if stmt is None:
            result.failed.append((expectation.span, expected, "<no statement>"))
            continue
        if expectation.kind == "answers":
            if id(stmt) in rendered:
                actual = rendered[id(stmt)]
                if actual == expected:
                    result.passed += 1
                else:
                    result.failed.append((stmt.span, expected, actual))
            elif completion.kind == "error":
                result.failed.append(
                    (stmt.span, expected,
                     f"<error: {completion.error_message}>"))
            else:
                result.failed.append((stmt.span, expected, "<not executed>"))
        else:  # raises
            if completion.kind == "error" and (
                    stmt is failing_stmt
                    or _span_contains(stmt.span, completion.error_span)):
                result.passed += 1
            elif id(stmt) in rendered:
                result.failed.append(
                    (stmt.span, expected, rendered[id(stmt)]))
            else:
                result.failed.append((stmt.span, expected, "<no error>"))
    return result


def _span_contains(outer, inner) -> bool:
    if outer is None or inner is None:
        return False
    return ((outer.line, outer.column) <= (inner.line, inner.column)
            and (inner.end_line, inner.end_column)
            <= (outer.end_line, outer.end_column))


def cmd_test(corpus_dir, pattern: str | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    files = sorted(Path(corpus_dir).glob("*.js"))
    if pattern:
        files = [f for f in files if pattern in f.name]
    total = passed = 0
    all_ok = True
    for path in files:
        result = run_corpus_file(path)
        total += result.total
        passed += result.passed
        print(f"{result.file}: {result.passed}/{result.total} passed", file=out)
        for span, expected, actual in result.failed:
            where = f"{span.line}:{span.column}" if span else "?"
            print(f"  {result.file}:{where}: expected {expected}, got {actual}",
                  file=out)
        all_ok = all_ok and result.ok
    print(f"TOTAL: {passed}/{total} expectations passed in {len(files)} files",
          file=out)
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jssec",
        description="Interpreter and security linter for a JavaScript subset")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="parse and evaluate a program")
    run_p.add_argument("file")
    run_p.add_argument("--trace", action="store_true",
                       help="print each expression statement's value")

    lint_p = sub.add_parser("lint", help="run the static security rules")
    lint_p.add_argument("files", nargs="+")
    lint_p.add_argument("--format", choices=("text", "json"), default="text")
    lint_p.add_argument("--rules",
                        help="comma-separated rule ids to enable "
                             f"(default: all of {','.join(sorted(STATIC_RULES))})")

    test_p = sub.add_parser("test", help="run a directory of expectation files")
    test_p.add_argument("corpus")
    test_p.add_argument("--filter", dest="pattern",
                        help="only files whose name contains this substring")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return cmd_run(args.file, trace=args.trace)
    if args.command == "lint":
        rules = None if args.rules is None else args.rules.split(",")
        return cmd_lint(args.files, fmt=args.format, rules=rules)
    if args.command == "test":
        return cmd_test(args.corpus, pattern=args.pattern)
    return 2


if __name__ == "__main__":
    sys.exit(main())
