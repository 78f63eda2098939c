"""Coefficient expression grammar: parsing and deterministic printing.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" signed-int)?
    atom   := unsigned-int | ident | "(" expr ")" | "-" atom

A leading minus binds looser than ``^``, so ``-x^2`` reads as -(x^2).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, ParseError, UnknownGenerator
from .ring import LaurentPoly, RatFn, RingCtx

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN.match(src, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, src)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ctx: RingCtx):
        self.src = src
        self.ctx = ctx
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            want = "an integer exponent" if kind == "int" else repr(kind)
            raise ParseError(f"expected {want}, found {what}", tok[2], self.src)
        self.i += 1
        return tok

    def parse(self) -> RatFn:
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2], self.src)
        return val

    def expr(self) -> RatFn:
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> RatFn:
        val = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZero(f"division by zero at position {pos}")
                val = val / rhs
        return val

    def factor(self) -> RatFn:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            _, k, pos = self.take("int")
            k *= sign
            if k < 0 and base.is_zero():
                raise DivisionByZero(f"negative power of zero at position {pos}")
            base = base**k
        return base

    def atom(self) -> RatFn:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return RatFn.const(self.ctx, val)
        if kind == "ident":
            self.take()
            if val not in self.ctx.index:
                raise UnknownGenerator(f"unknown generator {val!r} at position {pos}")
            return RatFn.gen(self.ctx, val)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "-":
            self.take()
            return -self.atom()
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"expected a number, generator or '(' but found {what}", pos, self.src)


def parse_coeff(src: str, ctx: RingCtx) -> RatFn:
    """Parse a coefficient expression into a rational function over ``ctx``."""
    return _Parser(src, ctx).parse()


def _format_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(ctx: RingCtx, e) -> str:
    parts = []
    for g, k in zip(ctx.generators, e):
        if k == 1:
            parts.append(g)
        elif k:
            parts.append(f"{g}^{k}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        mono = _format_monomial(p.ctx, e)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_ratfn(f: RatFn) -> str:
    if f.den.is_one():
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


format_coeff = format_ratfn
