"""
Text grammar and canonical printing for rings, monomials, ideals and primes.

The grammar, with whitespace insignificant everywhere::

    ring    := ident ("," ident)*
    monom   := "1" | factor ("*" factor)*
    factor  := ident ("^" uint)?
    ideal   := "0" | monom ("," monom)*        (optionally in parentheses)
    prime   := "(" ident ("," ident)* ")"

Identifiers are a letter followed by letters, digits or underscores.
Multiplication must be written out: ``x*y``, never ``xy``, since ``x1`` is a
perfectly good variable name. Repeated factors multiply (``x*x = x^2``).

Input is split into tokens by one compiled pattern and then read by a small
recursive descent parser. Every failure is a :class:`~monideal.errors.ParseError`
carrying the line and column of the offending token.

Examples
--------
>>> from monideal.parser import parse_ring, parse_ideal, print_canonical
>>> ring = parse_ring("x, y")
>>> I = parse_ideal("x^6, y^6, x*y^5, x^5*y, x^4*y^4", ring)
>>> print_canonical(I)
'y^6, x*y^5, x^5*y, x^6, x^4*y^4'
>>> print_canonical(parse_ideal("x^2*x^3", ring))
'x^5'
"""

from functools import singledispatch
from typing import List, NamedTuple, Tuple

import regex as re

from .base import (
    IDENTIFIER_PATTERN,
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
)
from .decomposition import Decomposition, IrreducibleComponent
from .errors import ParseError

TOKEN_PATTERN = rf"""(?P<ws>\s+)|(?P<ident>{IDENTIFIER_PATTERN})|(?P<uint>\d+)|(?P<op>[(),*^])"""
_TOKEN = re.compile(TOKEN_PATTERN)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split ``text`` into tokens, dropping whitespace and appending an ``end`` token.

    Raises
    ------
    ParseError
        On a character that starts no token.

    Examples
    --------
    >>> [t.text for t in tokenize("x1^2 * y")]
    ['x1', '^', '2', '*', 'y', '']
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError(f"unexpected character {text[position]!r}", text, position)
        if match.lastgroup != "ws":
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over a token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def take(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def fail(self, message: str, token: Token) -> ParseError:
        found = "end of input" if token.kind == "end" else repr(token.text)
        return ParseError(f"{message}, found {found}", self.text, token.position)

    def accept(self, text: str) -> bool:
        if self.peek().kind == "op" and self.peek().text == text:
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        token = self.peek()
        if not self.accept(text):
            raise self.fail(f"expected {text!r}", token)
        return token

    def expect_ident(self) -> Token:
        token = self.take()
        if token.kind != "ident":
            raise self.fail("expected a variable name", token)
        return token

    def expect_end(self) -> None:
        token = self.peek()
        if token.kind != "end":
            raise self.fail("expected end of input", token)

    def uint(self) -> int:
        token = self.take()
        if token.kind != "uint":
            raise self.fail("expected a non-negative integer", token)
        value = int(token.text)
        if value > MAX_EXPONENT:
            raise ParseError(f"exponent {value} exceeds {MAX_EXPONENT}", self.text, token.position)
        return value

    def names(self) -> List[Token]:
        names = [self.expect_ident()]
        while self.accept(","):
            names.append(self.expect_ident())
        return names

    def monomial(self, ring: Ring) -> Monomial:
        token = self.peek()
        if token.kind == "uint":
            if token.text != "1":
                raise self.fail("expected a monomial", token)
            self.take()
            return ring.one()
        exponents = [0] * ring.n
        while True:
            name = self.expect_ident()
            if name.text not in ring.variables:
                raise ParseError(f"unknown variable {name.text!r}", self.text, name.position)
            exponent = self.uint() if self.accept("^") else 1
            i = ring.variables.index(name.text)
            exponents[i] += exponent
            if exponents[i] > MAX_EXPONENT:
                raise ParseError(f"exponent of {name.text} exceeds {MAX_EXPONENT}",
                                 self.text, name.position)
            if not self.accept("*"):
                return Monomial(ring, tuple(exponents))

    def ideal(self, ring: Ring) -> MonomialIdeal:
        wrapped = self.accept("(")
        token = self.peek()
        if token.kind == "uint" and token.text == "0":
            self.take()
            generators: Tuple[Monomial, ...] = ()
        else:
            generators = (self.monomial(ring),)
            while self.accept(","):
                generators += (self.monomial(ring),)
        if wrapped:
            self.expect(")")
        return MonomialIdeal(ring, generators)


def parse_ring(text: str) -> Ring:
    """Parse a comma-separated list of distinct variable names.

    Examples
    --------
    >>> parse_ring("x1, x2, x3").n
    3
    """
    parser = _Parser(text)
    names = parser.names()
    parser.expect_end()
    seen = set()
    for token in names:
        if token.text in seen:
            raise ParseError(f"duplicate variable {token.text!r}", text, token.position)
        seen.add(token.text)
    return Ring(tuple(t.text for t in names))


def parse_monomial(text: str, ring: Ring) -> Monomial:
    """Parse a single monomial over ``ring``."""
    parser = _Parser(text)
    m = parser.monomial(ring)
    parser.expect_end()
    return m


def parse_ideal(text: str, ring: Ring) -> MonomialIdeal:
    """Parse an ideal over ``ring``; the result is minimalized.

    Raises
    ------
    ParseError
        On a syntax error, an unknown variable or an oversized exponent.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> parse_ideal("1", ring).is_unit, parse_ideal("(0)", ring).is_zero
    (True, True)
    """
    parser = _Parser(text)
    ideal = parser.ideal(ring)
    parser.expect_end()
    return ideal


def parse_prime(text: str, ring: Ring) -> MonomialPrime:
    """Parse a parenthesized list of variables as a monomial prime."""
    parser = _Parser(text)
    parser.expect("(")
    names = parser.names()
    parser.expect(")")
    parser.expect_end()
    for token in names:
        if token.text not in ring.variables:
            raise ParseError(f"unknown variable {token.text!r}", text, token.position)
    return MonomialPrime.from_names(ring, (t.text for t in names))


def parse_uint_list(text: str) -> Tuple[int, ...]:
    """Parse ``"3, 1, 2"`` into ``(3, 1, 2)``."""
    parser = _Parser(text)
    values = [parser.uint()]
    while parser.accept(","):
        values.append(parser.uint())
    parser.expect_end()
    return tuple(values)


# -----------------------------------------------------------------------------
# canonical printing

@singledispatch
def print_canonical(obj) -> str:
    """Render ``obj`` in the canonical, re-parseable text form.

    Output is deterministic byte for byte: ideals print their generators in
    canonical order, ``"0"`` for the zero ideal and ``"1"`` for the unit ideal.
    """
    raise TypeError(f"cannot print {type(obj).__name__}")


@print_canonical.register
def _(ring: Ring) -> str:
    return ", ".join(ring.variables)


@print_canonical.register
def _(m: Monomial) -> str:
    factors = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(m.ring.variables, m.exponents) if e
    ]
    return "*".join(factors) or "1"


@print_canonical.register
def _(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(print_canonical(g) for g in ideal.generators)


@print_canonical.register
def _(p: MonomialPrime) -> str:
    return "(" + ", ".join(p.names) + ")"


@print_canonical.register
def _(c: IrreducibleComponent) -> str:
    return "(" + print_canonical(c.to_ideal()) + ")"


@print_canonical.register
def _(d: Decomposition) -> str:
    return " ∩ ".join(print_canonical(c) for c in d.components)
