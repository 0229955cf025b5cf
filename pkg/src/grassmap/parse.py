"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant, multiplication always explicit)::

    expr     := sign? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' int)?
    base     := rational | identifier | '(' expr ')'
    rational := int ('/' posint)?

A single leading sign is accepted so that printed polynomials such as
``-x*y + z^2`` read back in.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(ValueError):
    code = "SYNTAX_ERROR"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownIdentifier(ParseError):
    code = "UNKNOWN_IDENTIFIER"

    def __init__(self, name: str, position: int, text: str = ""):
        super().__init__(f"unknown identifier {name!r}", position, text)
        self.name = name


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}", pos, self.text)

    def is_op(self, ch) -> bool:
        kind, val, _ = self.peek()
        return kind == "op" and val == ch

    def expr(self) -> Poly:
        negate = False
        if self.is_op("-") or self.is_op("+"):
            negate = self.take()[1] == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.is_op("+") or self.is_op("-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.is_op("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        b = self.base()
        if self.is_op("^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos, self.text)
            b = b ** val
        return b

    def base(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "int":
            if self.is_op("/"):
                self.take()
                k2, den, p2 = self.take()
                if k2 != "int" or den == 0:
                    raise ParseError("denominator must be a positive integer", p2, self.text)
                return self.ring.const(Fraction(val, den))
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.names:
                raise UnknownIdentifier(val, pos, self.text)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse ``text`` into a polynomial of ``ring``."""
    p = _Parser(text, ring)
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos, text)
    return result
