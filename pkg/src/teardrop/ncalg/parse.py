"""Plain-text expressions such as ``q^-2 * alphaS*alpha + 3/2 * beta^2``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := ['-'] factor (('*' | '/') factor)*
    factor := atom ['^' ['-'] INT]
    atom   := GENERATOR | 'q' | INT | '(' expr ')'

Products are noncommutative and taken left to right; ``q`` and integers are
central scalars.  Division is allowed only by scalars.  A trailing ``S``
on a generator name denotes its star (``bS`` is b*).
"""
from __future__ import annotations

import re
from typing import List, Tuple

from ..qlaurent import as_ratq, q
from .core import NcElement, Presentation

__all__ = ["parse_element", "ExpressionError"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+-*/^()":
                raise ExpressionError(f"unexpected character {sym!r}")
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, pres: Presentation, text: str):
        self.pres = pres
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ExpressionError(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> NcElement:
        if not self.toks:
            raise ExpressionError("empty expression")
        out = self.expr()
        if self.i != len(self.toks):
            raise ExpressionError(f"trailing input at {self.peek()[1]!r}")
        return _as_element(self.pres, out)

    def expr(self):
        out = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            out = _add(self.pres, out, rhs if op == "+" else _neg(rhs))
        return out

    def term(self):
        negate = False
        if self.peek() == ("sym", "-"):
            self.take()
            negate = True
        out = self.factor()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                out = _mul(self.pres, out, rhs)
            else:
                if isinstance(rhs, NcElement):
                    raise ExpressionError("division is only allowed by scalars")
                out = _mul(self.pres, out, as_ratq(1) / as_ratq(rhs))
        return _neg(out) if negate else out

    def factor(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            sign = 1
            if self.peek() == ("sym", "-"):
                self.take()
                sign = -1
            n = sign * int(self.take("int")[1])
            if isinstance(base, NcElement):
                if n < 0:
                    raise ExpressionError("negative powers of algebra elements are not defined")
                return base ** n
            if n < 0:
                return as_ratq(1) / as_ratq(base) ** (-n)
            return as_ratq(base) ** n
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return as_ratq(int(val))
        if kind == "name":
            self.take()
            if val == "q":
                return as_ratq(q)
            if val not in self.pres.star:
                raise ExpressionError(f"unknown generator {val!r} for {self.pres.name}")
            return self.pres.gen(val)
        if (kind, val) == ("sym", "("):
            self.take()
            inner = self.expr()
            self.take("sym", ")")
            return inner
        raise ExpressionError(f"unexpected token {val!r}")


def _as_element(pres, x) -> NcElement:
    return x if isinstance(x, NcElement) else pres.scalar(x)


def _add(pres, x, y):
    if isinstance(x, NcElement) or isinstance(y, NcElement):
        return _as_element(pres, x) + _as_element(pres, y)
    return x + y


def _neg(x):
    return -x


def _mul(pres, x, y):
    if isinstance(x, NcElement) and isinstance(y, NcElement):
        return x * y
    if isinstance(x, NcElement):
        return x.scale(y)
    if isinstance(y, NcElement):
        return y.scale(x)
    return x * y


def parse_element(pres: Presentation, text: str) -> NcElement:
    """Parse ``text`` into a normal-formed element of ``pres``."""
    return _Parser(pres, text).parse()
