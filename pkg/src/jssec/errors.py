"""Error types shared across the lexer, parser, object model and evaluator."""

from __future__ import annotations


class JssecError(Exception):
    """Base class for all errors raised by this package.

    ``span`` is a SourceSpan (or None when no source location applies).
    """

    def __init__(self, message, span=None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self):
        if self.span is not None:
            return f"{self.span.line}:{self.span.column}: {self.message}"
        return self.message


class LexError(JssecError):
    """Unterminated string or illegal character in the input."""


class ParseError(JssecError):
    """Token stream does not match the subset grammar."""


class JSRuntimeError(JssecError):
    """Any error raised while evaluating a program.

    Evaluation has no try/catch, so these unwind to the program driver,
    which turns them into an error completion.
    """


class NotCallableError(JSRuntimeError):
    pass


class UndeclaredNameError(JSRuntimeError):
    """Read of a name not bound in any scope frame."""


class PropertyAccessError(JSRuntimeError):
    """Property access on undefined or null."""


class WithOperandError(JSRuntimeError):
    """`with` applied to null or undefined."""


class CoercionError(JSRuntimeError):
    """Object could not be converted to a primitive."""


class DefineError(JSRuntimeError):
    """Rejected property (re)definition."""


class ApplyArgsError(JSRuntimeError):
    """apply() received a second argument that is not an array."""


class UnknownRuleError(JssecError):
    """Lint rule id not in the rule table."""
