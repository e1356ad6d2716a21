"""The valued coefficient field K = Frac(Q[t^Q][s1, s2, ...]).

Elements are fractions of finite formal sums of terms ``q * t^e * s^beta``
with q a nonzero rational, e a rational t-exponent and beta a multi-index
over auxiliary generic variables ``s1, s2, ...``.  The Gauss valuation

    val(x) = (least t-exponent of the numerator)
           - (least t-exponent of the denominator)

is exactly multiplicative; the s-variables are valuation-zero generic units,
which is how v-generic tuples of any prescribed value are realised
(:meth:`FieldCtx.fresh_generic`).

A p-adic instance of Q sits behind the same interface: elements are then
plain rationals (t-free, s-free) and ``val`` is the p-adic valuation.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .values import INF, Value

# A monomial is (t_exp, s_part) with s_part a sorted tuple of (index, exp>0)
# pairs; a polynomial maps monomials to nonzero rational coefficients.

_ONE_MONO = (Fraction(0), ())


def _mono_mul(m1, m2):
    t1, s1 = m1
    t2, s2 = m2
    if not s1:
        s = s2
    elif not s2:
        s = s1
    else:
        d = dict(s1)
        for i, e in s2:
            d[i] = d.get(i, 0) + e
        s = tuple(sorted(d.items()))
    return (t1 + t2, s)


def _mono_div(m1, m2):
    """m1 / m2; s-exponents must not go negative (t-exponents may)."""
    t1, s1 = m1
    t2, s2 = m2
    d = dict(s1)
    for i, e in s2:
        r = d.get(i, 0) - e
        if r < 0:
            return None
        if r == 0:
            d.pop(i, None)
        else:
            d[i] = r
    return (t1 - t2, tuple(sorted(d.items())))


def _poly_add(p, q):
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    for m, c in q.items():
        c2 = out.get(m)
        if c2 is None:
            out[m] = c
        else:
            c2 = c2 + c
            if c2:
                out[m] = c2
            else:
                del out[m]
    return out


def _poly_neg(p):
    return {m: -c for m, c in p.items()}


def _poly_mul(p, q):
    if not p or not q:
        return {}
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mono_mul(m1, m2)
            c = out.get(m)
            if c is None:
                out[m] = c1 * c2
            else:
                c = c + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
    return out


def _poly_scale(p, c):
    if not c:
        return {}
    return {m: q * c for m, q in p.items()}


def _poly_min_texp(p) -> Fraction:
    return min(m[0] for m in p)


def _poly_content_mono(p):
    """Largest monomial t^e * s^beta dividing every term of p."""
    texp = min(m[0] for m in p)
    s_common = None
    for _, s in p:
        d = dict(s)
        if s_common is None:
            s_common = d
        else:
            s_common = {i: min(e, d[i]) for i, e in s_common.items() if i in d}
        if not s_common:
            s_common = {}
    return (texp, tuple(sorted(s_common.items())))


class FieldElem:
    """An element of K, kept as a canonical fraction num/den.

    Canonical form: a common monomial content is divided out of both parts,
    single-monomial denominators are cleared entirely when the s-exponents
    allow, and the denominator's least term has coefficient 1.
    """

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den=None, _canonical=False):
        self.ctx = ctx
        if den is None:
            den = {_ONE_MONO: Fraction(1)}
        if _canonical:
            self.num = num
            self.den = den
            return
        if not den:
            raise ZeroDivisionError("zero denominator in K")
        if not num:
            self.num = {}
            self.den = {_ONE_MONO: Fraction(1)}
            return
        # divide out common monomial content
        cn = _poly_content_mono(num)
        cd = _poly_content_mono(den)
        common = None
        if len(den) == 1:
            # clear a monomial denominator outright when s-exponents allow
            dmono = next(iter(den))
            if all(_mono_div(m, dmono) is not None for m in num):
                common = dmono
        if common is None:
            tmin = cn[0] if cn[0] < cd[0] else cd[0]
            sn, sd = dict(cn[1]), dict(cd[1])
            s = tuple(sorted((i, min(e, sd[i])) for i, e in sn.items() if i in sd))
            common = (tmin, s)
        if common != _ONE_MONO:
            num = {_mono_div(m, common): c for m, c in num.items()}
            den = {_mono_div(m, common): c for m, c in den.items()}
        lead = den[min(den)]
        if lead != 1:
            inv = 1 / lead
            num = _poly_scale(num, inv)
            den = _poly_scale(den, inv)
        self.num = num
        self.den = den

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        """True when the element lies in Q (t-free and s-free)."""
        return (not self.num or self.num.keys() == {_ONE_MONO}) and self.den.keys() == {_ONE_MONO}

    def as_fraction(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("element is not a plain rational: %s" % self)
        return self.num[_ONE_MONO] / self.den[_ONE_MONO]

    # valuation ---------------------------------------------------------

    def val(self) -> Value:
        """Gauss valuation (or p-adic valuation in a p-adic context)."""
        if not self.num:
            return INF
        if self.ctx.kind == "padic":
            q = self.as_fraction()
            return Value(_padic_val(q, self.ctx.p))
        return Value(_poly_min_texp(self.num) - _poly_min_texp(self.den))

    # arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.ctx is not other.ctx:
            raise ValueError("field elements from different contexts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        self._check(other)
        if self.den == other.den:
            return FieldElem(self.ctx, _poly_add(self.num, other.num), dict(self.den))
        num = _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den))
        return FieldElem(self.ctx, num, _poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, _poly_neg(self.num), dict(self.den), _canonical=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.ctx, _poly_scale(self.num, Fraction(other)), dict(self.den))
        if not isinstance(other, FieldElem):
            return NotImplemented
        self._check(other)
        return FieldElem(self.ctx, _poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self.num:
            raise ZeroDivisionError("inverse of 0 in K")
        return FieldElem(self.ctx, dict(self.den), dict(self.num))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other):
        inv = self.inverse()
        return inv.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("field exponents must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if (not self.num) != (not other.num):
            return False
        return _poly_mul(self.num, other.den) == _poly_mul(other.num, self.den)

    def __hash__(self):
        raise TypeError("FieldElem is not hashable (non-unique representation)")

    # text ----------------------------------------------------------------

    def __str__(self):
        if not self.num:
            return "0"
        num = _poly_str(self.num)
        if self.den.keys() == {_ONE_MONO} and self.den[_ONE_MONO] == 1:
            return num
        return "(%s)/(%s)" % (num, _poly_str(self.den))

    def __repr__(self):
        return "K<%s>" % self


def _mono_str(m, coeff):
    t, s = m
    parts = []
    if coeff != 1 or (t == 0 and not s):
        parts.append(str(coeff) if coeff.denominator == 1 else "%d/%d" % (coeff.numerator, coeff.denominator))
    if t != 0:
        if t == 1:
            parts.append("t")
        elif t.denominator == 1 and t >= 0:
            parts.append("t^%d" % t)
        else:
            parts.append("t^(%s)" % t)
    for i, e in s:
        parts.append("s%d" % i if e == 1 else "s%d^%d" % (i, e))
    return "*".join(parts)


def _poly_str(p):
    terms = []
    for m in sorted(p):
        c = p[m]
        txt = _mono_str(m, abs(c))
        if not terms:
            terms.append(txt if c > 0 else "-" + txt)
        else:
            terms.append(("+ " if c > 0 else "- ") + txt)
    return " ".join(terms)


def _padic_val(q: Fraction, p: int) -> Fraction:
    if q == 0:
        raise ValueError("p-adic valuation of zero")
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return Fraction(v)


class FieldCtx:
    """Shared context for one instance of the coefficient field.

    ``kind`` is "gauss" (the function-field model with t and generic s_i)
    or "padic" (plain Q with the p-adic valuation).  All elements taking
    part in one computation must share a context.  The context hands out
    fresh s-variable indices so that successive :meth:`fresh_generic` calls
    behave v-generically; element construction is deterministic given
    (seed, call index).
    """

    def __init__(self, kind="gauss", p=None, seed=0, reserved_s=0):
        if kind not in ("gauss", "padic"):
            raise ValueError("unknown field kind %r" % kind)
        if kind == "padic":
            if p is None or p < 2:
                raise ValueError("p-adic context needs a prime p")
        self.kind = kind
        self.p = p
        self.seed = seed
        self._next_s = reserved_s + 1
        self._calls = 0

    @staticmethod
    def gauss(seed=0, reserved_s=0) -> "FieldCtx":
        return FieldCtx("gauss", seed=seed, reserved_s=reserved_s)

    @staticmethod
    def padic(p: int, seed=0) -> "FieldCtx":
        return FieldCtx("padic", p=p, seed=seed)

    # constants ------------------------------------------------------------

    def zero(self) -> FieldElem:
        return FieldElem(self, {}, None, _canonical=False)

    def one(self) -> FieldElem:
        return FieldElem(self, {_ONE_MONO: Fraction(1)})

    def rational(self, q) -> FieldElem:
        q = Fraction(q)
        if not q:
            return self.zero()
        return FieldElem(self, {_ONE_MONO: q})

    def t_power(self, e) -> FieldElem:
        """t^e for rational e (gauss); p^e for integer e (p-adic)."""
        e = Fraction(e)
        if self.kind == "padic":
            if e.denominator != 1:
                raise ValueError("p-adic value group is Z: t_power needs an integer")
            n = e.numerator
            return self.rational(Fraction(self.p) ** n)
        return FieldElem(self, {(e, ()): Fraction(1)})

    def s_var(self, i: int) -> FieldElem:
        if self.kind == "padic":
            raise ValueError("no generic s-variables in a p-adic context")
        if i < 1:
            raise ValueError("s-variable indices start at 1")
        if i >= self._next_s:
            self._next_s = i + 1
        return FieldElem(self, {(Fraction(0), ((i, 1),)): Fraction(1)})

    # generic elements ----------------------------------------------------

    def fresh_generic(self, c, extra_terms=2) -> FieldElem:
        """A unit-perturbed element of value exactly c.

        Gauss: t^c * (1 + q1*s_j + q2*s_j^2) with a fresh index j and
        nonzero rationals q_k drawn deterministically from (seed, call).
        p-adic: p^c * u with u a rational unit; c must be an integer.
        """
        c = Value.of(c)
        if c.is_inf:
            raise ValueError("fresh_generic requires a finite value")
        rng = random.Random((self.seed, self._calls, "fresh-generic"))
        self._calls += 1
        if self.kind == "padic":
            if c.frac.denominator != 1:
                raise ValueError("p-adic value group is Z: got value %s" % c)
            a = rng.randrange(1, self.p)
            b = rng.randrange(1, self.p)
            unit = Fraction(a, b) + self.p * rng.randrange(0, self.p)
            return self.rational(unit * Fraction(self.p) ** c.frac.numerator)
        j = self._next_s
        self._next_s += 1
        poly = {_ONE_MONO: Fraction(1)}
        for k in range(1, extra_terms + 1):
            q = Fraction(rng.randrange(1, 100), rng.randrange(1, 100))
            poly[(Fraction(0), ((j, k),))] = q
        return self.t_power(c.frac) * FieldElem(self, poly)

    # parsing ---------------------------------------------------------------

    def element(self, text: str) -> FieldElem:
        """Parse an ASCII expression like ``3/2*t^(1/3)*s1 + 1``."""
        from ._expr import parse_field_element

        return parse_field_element(self, text)
