"""Exact min-plus arithmetic on the extended value group Q ∪ {+inf}.

Every valuation in this package takes values here.  Rationals are exact
(`fractions.Fraction`); ``inf`` is absorbing for addition and maximal for
the order.  ``-inf`` is not representable: operations that would need it
raise :class:`MinusInfinityError`.
"""

from __future__ import annotations

from fractions import Fraction


class MinusInfinityError(ArithmeticError):
    """An operation fell out of Q ∪ {+inf} at the bottom (e.g. ``-inf``)."""


def _as_frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %r" % type(x).__name__)


class Value:
    """An element of Q ∪ {+inf}.

    Immutable.  ``Value(q)`` wraps an exact rational, ``Value(None)`` is the
    distinguished infinity (also available as the module constant ``INF``).
    """

    __slots__ = ("_q",)

    def __init__(self, q=0):
        self._q = None if q is None else _as_frac(q)

    @staticmethod
    def of(x) -> "Value":
        if isinstance(x, Value):
            return x
        if isinstance(x, str):
            return parse_value(x)
        return Value(x)

    @property
    def is_inf(self) -> bool:
        return self._q is None

    @property
    def frac(self) -> Fraction:
        if self._q is None:
            raise MinusInfinityError("no rational part: value is inf")
        return self._q

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = Value.of(other)
        if self._q is None or other._q is None:
            return INF
        return Value(self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other):
        other = Value.of(other)
        if other._q is None:
            raise MinusInfinityError("cannot subtract inf")
        if self._q is None:
            return INF
        return Value(self._q - other._q)

    def __rsub__(self, other):
        return Value.of(other).__sub__(self)

    def __neg__(self):
        if self._q is None:
            raise MinusInfinityError("-inf is not representable")
        return Value(-self._q)

    def __mul__(self, scalar):
        """Scale by an exact rational.  0 * inf = 0 (the usual convention)."""
        scalar = _as_frac(scalar)
        if self._q is not None:
            return Value(self._q * scalar)
        if scalar > 0:
            return INF
        if scalar == 0:
            return Value(0)
        raise MinusInfinityError("negative multiple of inf")

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = _as_frac(scalar)
        if scalar <= 0:
            raise ValueError("can only divide a value by a positive rational")
        return self.__mul__(Fraction(scalar.denominator, scalar.numerator))

    # order ----------------------------------------------------------------

    def _key(self):
        return (1, Fraction(0)) if self._q is None else (0, self._q)

    def __lt__(self, other):
        return self._key() < Value.of(other)._key()

    def __le__(self, other):
        return self._key() <= Value.of(other)._key()

    def __gt__(self, other):
        return self._key() > Value.of(other)._key()

    def __ge__(self, other):
        return self._key() >= Value.of(other)._key()

    def __eq__(self, other):
        if isinstance(other, (Value, int, Fraction)):
            return self._key() == Value.of(other)._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    # text -------------------------------------------------------------

    def __str__(self):
        return "inf" if self._q is None else str(self._q)

    def __repr__(self):
        return "Value(%s)" % self

    def __bool__(self):
        return self._q is None or self._q != 0


INF = Value(None)
ZERO = Value(0)


def parse_value(text: str) -> Value:
    text = text.strip()
    if text in ("inf", "+inf", "Inf", "INF"):
        return INF
    return Value(Fraction(text))


def vmin(*vals) -> Value:
    """Minimum under the total order with inf maximal."""
    vals = [Value.of(v) for v in vals]
    if not vals:
        return INF
    out = vals[0]
    for v in vals[1:]:
        if v < out:
            out = v
    return out


def vmax(*vals) -> Value:
    vals = [Value.of(v) for v in vals]
    if not vals:
        raise ValueError("vmax of no values")
    out = vals[0]
    for v in vals[1:]:
        if v > out:
            out = v
    return out


def vdist(a, b) -> Value:
    """|a - b| with the convention |inf - inf| = 0."""
    a, b = Value.of(a), Value.of(b)
    if a.is_inf and b.is_inf:
        return ZERO
    if a.is_inf or b.is_inf:
        return INF
    return Value(abs(a.frac - b.frac))
