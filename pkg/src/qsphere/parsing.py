"""Expression parser for elements of A(SL_q(2)).

Grammar (whitespace ignored, ``*`` mandatory between factors)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' intexp)?
    base   := 'a' | 'b' | 'c' | 'd' | 'q' | 'zeta' | rational | '(' expr ')'
    intexp := ['-'] digits            # negative only when base is 'q'

A leading unary minus is accepted on a term.  ``zeta`` is ``-q^-1*b*c``.
The scalar ``q`` may be raised to a negative power; so may a parenthesised
expression that turns out to be a pure scalar.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .exactq import Q, RatQ
from .ncalg import NCPoly, normalize_letters


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[a-z]+)|(?P<op>[-+*^()]))")


def tokenize(text: str) -> List[Token]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        toks.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(Token("end", "", len(text)))
    return toks


ZETA = normalize_letters("bc", RatQ.q_power(-1, -1))


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def eat(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.eat(text):
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)

    def parse(self) -> NCPoly:
        out = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return out

    def expr(self) -> NCPoly:
        neg = self.eat("-")
        out = self.term()
        if neg:
            out = -out
        while True:
            if self.eat("+"):
                out = out + self.term()
            elif self.eat("-"):
                out = out - self.term()
            else:
                return out

    def term(self) -> NCPoly:
        out = self.factor()
        while self.eat("*"):
            out = out * self.factor()
        return out

    def factor(self) -> NCPoly:
        start = self.tok
        base, kind = self.base()
        if not self.eat("^"):
            return base
        neg = self.eat("-")
        t = self.tok
        if t.kind != "num" or "/" in t.text:
            raise ParseError("expected integer exponent", t.pos)
        self.i += 1
        e = int(t.text)
        if not neg:
            return base ** e
        scalar = base.terms.get((0, 0, 0, 0)) if set(base.terms) <= {(0, 0, 0, 0)} else None
        if kind == "letter" or scalar is None:
            raise ParseError(f"negative exponent on non-invertible {start.text!r}", t.pos)
        return NCPoly.scalar(scalar ** (-e))

    def base(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return NCPoly.scalar(RatQ(Fraction(t.text))), "scalar"
        if t.kind == "name":
            self.i += 1
            if t.text in ("a", "b", "c", "d"):
                return NCPoly.gen(t.text), "letter"
            if t.text == "q":
                return NCPoly.scalar(Q), "scalar"
            if t.text == "zeta":
                return ZETA, "letter"
            raise ParseError(f"unknown symbol {t.text!r}", t.pos)
        if self.eat("("):
            inner = self.expr()
            self.expect(")")
            return inner, "group"
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)


def parse_expr(text: str) -> NCPoly:
    """Parse and normalize an expression, e.g. ``"a*d - q^-1*b*c"`` -> 1."""
    return _Parser(text).parse()
