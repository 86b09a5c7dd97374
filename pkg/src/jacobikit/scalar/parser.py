"""Recursive-descent parser for scalar expressions.

Grammar (whitespace is insignificant)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := atom ('^' UINT)?
    atom    := INT | IDENT | '(' expr ')' | 'exp' '(' linform ')'
    linform := a Q-linear combination of coordinates, e.g. ``-t`` or ``x/2 - y``

``INT '/' UINT`` needs no rule of its own: it parses as a division and
denotes the same rational.  The leading sign of ``expr`` is what lets the
printer's output (``-x^2 + 1/2``) parse back.
"""

from __future__ import annotations

import re

from ..errors import (
    ExpressionSyntaxError,
    NonLinearExponent,
    NonNaturalExponent,
    UnknownIdentifier,
)
from .field import Chart, Q, ScalarField

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, chart: Chart):
        self.text = text
        self.chart = chart
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None, cls=ExpressionSyntaxError):
        tok = tok or self.tok
        return cls(message, self.text, tok[2])

    def expect_op(self, op):
        kind, value, _ = self.tok
        if kind != "op" or value != op:
            found = "end of input" if kind == "eof" else repr(value)
            raise self.error(f"expected {op!r}, found {found}")
        return self.advance()

    def parse(self) -> ScalarField:
        value = self.expr()
        if self.tok[0] != "eof":
            raise self.error(f"unexpected {self.tok[1]!r}")
        return value

    def expr(self) -> ScalarField:
        negate = False
        if self.tok[0] == "op" and self.tok[1] in "+-":
            negate = self.advance()[1] == "-"
        value = self.term()
        if negate:
            value = -value
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> ScalarField:
        value = self.factor()
        while self.tok[0] == "op" and self.tok[1] in "*/":
            op = self.advance()[1]
            tok = self.tok
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise self.error("division by zero", tok)
                value = value / rhs
        return value

    def factor(self) -> ScalarField:
        value = self.atom()
        if self.tok[0] == "op" and self.tok[1] == "^":
            self.advance()
            kind, text, _ = self.tok
            if kind != "int":
                raise self.error("exponent must be a nonnegative integer", cls=NonNaturalExponent)
            self.advance()
            value = value ** int(text)
        return value

    def atom(self) -> ScalarField:
        kind, text, _ = tok = self.tok
        if kind == "int":
            self.advance()
            return self.chart.constant(int(text))
        if kind == "ident":
            self.advance()
            if text == "exp":
                return self.exponential(tok)
            try:
                return self.chart.coordinate(self.chart.index(text))
            except KeyError:
                raise self.error(f"unknown identifier {text!r}", tok, UnknownIdentifier) from None
        if kind == "op" and text == "(":
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        found = "end of input" if kind == "eof" else repr(text)
        raise self.error(f"expected a number, identifier or '(', found {found}")

    def exponential(self, exp_tok) -> ScalarField:
        self.expect_op("(")
        arg_tok = self.tok
        arg = self.expr()
        self.expect_op(")")
        freqs = linear_coefficients(arg)
        if freqs is None:
            raise self.error(
                "argument of exp must be a rational linear combination of coordinates",
                arg_tok,
                NonLinearExponent,
            )
        return self.chart.exp(freqs)


def linear_coefficients(s: ScalarField):
    """Frequency vector of ``s`` if it is a Q-linear form without constant term."""
    if s._den is not None:
        return None
    n = s.chart.dimension
    freqs = [Q(0)] * n
    for (a, c), q in s._num.items():
        if c is not None or sum(a) != 1:
            return None
        freqs[a.index(1)] = q
    return freqs


def parse_scalar(text: str, chart: Chart) -> ScalarField:
    """Parse ``text`` into an exact scalar field on ``chart``."""
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(text, chart).parse()
