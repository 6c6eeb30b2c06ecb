"""
Exception hierarchy for monomial ideal computations.

Every error raised on purpose by the package derives from
:class:`MonomialIdealError`, itself a :class:`ValueError`, so callers can
catch bad input broadly or one failure mode at a time.

See Also
--------
monideal.cli : maps these exceptions onto process exit codes
"""

from typing import Optional


class MonomialIdealError(ValueError):
    """Base class for all errors raised by monideal."""


class RingMismatchError(MonomialIdealError):
    """Operands live in different polynomial rings."""


class ExponentOverflowError(MonomialIdealError):
    """An exponent would leave the supported range."""


class NotDivisibleError(MonomialIdealError):
    """A monomial division was requested for a non-divisible pair."""


class ZeroIdealError(MonomialIdealError):
    """A colon by the zero ideal was requested."""


class DegenerateIdealError(MonomialIdealError):
    """The zero or unit ideal was passed where a nonzero proper ideal is needed."""


class ParseError(MonomialIdealError):
    """Syntax error in an ideal expression, annotated with its position.

    Parameters
    ----------
    message : str
        What went wrong.
    text : str
        The full source text being parsed.
    position : int
        Zero-based character offset of the offending token.

    Attributes
    ----------
    line : int
        One-based line number of ``position``.
    column : int
        One-based column number of ``position``.

    Examples
    --------
    >>> err = ParseError("unexpected '+'", "x+y", 1)
    >>> str(err)
    "unexpected '+' at line 1, column 2"
    """

    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        before = text[:position]
        self.line = before.count("\n") + 1
        self.column = position - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class SchemaError(MonomialIdealError):
    """Malformed JSON, or JSON that does not match a monideal document."""

    def __init__(self, message: str, cause: Optional[Exception] = None):
        super().__init__(message)
        self.cause = cause
