"""Recursive-descent parser for field-element and polynomial literals.

One grammar serves both: sums/products/quotients of rational literals,
``t`` (rational exponents allowed), generic units ``s1, s2, ...`` and,
when a variable count is supplied, projective coordinates ``X0, X1, ...``.
Parsing evaluates directly into a sparse map {X-exponent tuple: FieldElem};
an X-free expression is a plain field element.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | atom ('^' exponent)?
    atom   := NUMBER | 't' | 's<k>' | 'X<k>' | '(' expr ')'
    exponent := ['-'] NUMBER | '(' expr ')'    -- must be a rational constant

Division requires an X-free divisor; fractional exponents are only allowed
on monomials c * t^e with c = 1 and no s-part.
"""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]\w*|\*|\+|-|/|\^|\(|\))")


class ExprError(ValueError):
    """Malformed expression text."""


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExprError("cannot tokenize %r at position %d" % (text, pos))
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _XPoly:
    """Polynomial in the X-variables with FieldElem coefficients."""

    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx, nvars, terms):
        self.ctx = ctx
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    @staticmethod
    def const(ctx, nvars, elem):
        e = (0,) * nvars
        return _XPoly(ctx, nvars, {e: elem})

    def add(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return _XPoly(self.ctx, self.nvars, terms)

    def neg(self):
        return _XPoly(self.ctx, self.nvars, {e: -c for e, c in self.terms.items()})

    def mul(self, other):
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return _XPoly(self.ctx, self.nvars, terms)

    def is_const(self):
        return not self.terms or self.terms.keys() == {(0,) * self.nvars}

    def const_value(self):
        if not self.terms:
            return self.ctx.zero()
        if not self.is_const():
            raise ExprError("expected an X-free subexpression")
        return self.terms[(0,) * self.nvars]

    def div(self, other):
        d = other.const_value()
        if d.is_zero():
            raise ZeroDivisionError("division by zero in expression")
        inv = d.inverse()
        return _XPoly(self.ctx, self.nvars, {e: c * inv for e, c in self.terms.items()})

    def pow_int(self, k):
        if k < 0:
            one = _XPoly.const(self.ctx, self.nvars, self.ctx.one())
            return one.div(self.pow_int(-k))
        out = _XPoly.const(self.ctx, self.nvars, self.ctx.one())
        for _ in range(k):
            out = out.mul(self)
        return out

    def pow_frac(self, q: Fraction):
        elem = self.const_value()
        # only c * t^e with c = 1 and no s-part admits a fractional power
        if len(elem.num) != 1 or len(elem.den) != 1:
            raise ExprError("fractional exponent on a non-monomial")
        (tn, sn), cn = next(iter(elem.num.items()))
        (td, sd), cd = next(iter(elem.den.items()))
        if sn or sd or cn != cd:
            raise ExprError("fractional exponent is only allowed on powers of t")
        return _XPoly.const(self.ctx, self.nvars, self.ctx.t_power((tn - td) * q))


class _Parser:
    def __init__(self, ctx, nvars, tokens):
        self.ctx = ctx
        self.nvars = nvars
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, tok):
        t = self.take()
        if t != tok:
            raise ExprError("expected %r, got %r" % (tok, t))

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise ExprError("trailing tokens from %r" % self.peek())
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = v.add(w.neg() if op == "-" else w)
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            w = self.factor()
            v = v.mul(w) if op == "*" else v.div(w)
        return v

    def factor(self):
        if self.peek() == "-":
            self.take()
            return self.factor().neg()
        v = self.atom()
        if self.peek() == "^":
            self.take()
            q = self.exponent()
            v = v.pow_int(q.numerator) if q.denominator == 1 else v.pow_frac(q)
        return v

    def exponent(self) -> Fraction:
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        t = self.peek()
        if t == "(":
            self.take()
            v = self.expr()
            self.expect(")")
            q = v.const_value().as_fraction()
        elif t is not None and t.isdigit():
            q = Fraction(int(self.take()))
        else:
            raise ExprError("malformed exponent near %r" % t)
        return -q if neg else q

    def atom(self):
        t = self.take()
        if t is None:
            raise ExprError("unexpected end of expression")
        if t.isdigit():
            return _XPoly.const(self.ctx, self.nvars, self.ctx.rational(int(t)))
        if t == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t == "t":
            return _XPoly.const(self.ctx, self.nvars, self.ctx.t_power(1))
        m = re.fullmatch(r"s(\d+)", t)
        if m:
            return _XPoly.const(self.ctx, self.nvars, self.ctx.s_var(int(m.group(1))))
        m = re.fullmatch(r"X(\d+)", t)
        if m:
            k = int(m.group(1))
            if self.nvars == 0:
                raise ExprError("X-variables not allowed in a field element")
            if k >= self.nvars:
                raise ExprError("variable X%d out of range (%d variables)" % (k, self.nvars))
            e = tuple(1 if j == k else 0 for j in range(self.nvars))
            return _XPoly(self.ctx, self.nvars, {e: self.ctx.one()})
        raise ExprError("unknown name %r" % t)


def parse_xpoly(ctx, nvars: int, text: str) -> dict:
    """Parse into a sparse map {X-exponent tuple: FieldElem}."""
    p = _Parser(ctx, nvars, _tokenize(text))
    return p.parse().terms


def parse_field_element(ctx, text: str):
    p = _Parser(ctx, 0, _tokenize(text))
    return p.parse().const_value()
