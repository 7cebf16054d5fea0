"""Shared test plumbing: run a program in a fresh realm, locate the corpus."""

from pathlib import Path

from jssec.evaluator import Interpreter
from jssec.realm import create_realm
from jssec.syntax import parse_program

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"
DATA_DIR = Path(__file__).resolve().parent / "data"


def run_source(source, hooks=None):
    """Parse and evaluate in a fresh realm; answers (completion, interpreter)."""
    interp = Interpreter(create_realm(), hooks)
    completion = interp.run_program(parse_program(source))
    return completion, interp


def last_value(source):
    """Value of the last expression statement; asserts normal completion."""
    completion, interp = run_source(source)
    assert completion.kind == "normal", completion.error_message
    assert interp.trace, "program has no expression statements"
    return interp.trace_values()[-1]


def corpus_files():
    files = sorted(CORPUS_DIR.glob("*.js"))
    assert files, f"corpus not found at {CORPUS_DIR}"
    return files
