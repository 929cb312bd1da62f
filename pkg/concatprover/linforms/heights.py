"""Descriptors of elements of ``Q(sqrt5)`` and the logarithmic height calculus.

Leaves with a known height (rationals, ``alpha``, ``sqrt5`` and sequence values) get their exact height. A
compound descriptor is bounded by the three rules::

    h(x +- y) <= h(x) + h(y) + log 2
    h(x * y^(+-1)) <= h(x) + h(y)
    h(x^s) = |s| h(x)
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import numbers

from concatprover.bigseq import SeqKind, table
from concatprover.exceptions import UnsupportedElement
from concatprover.linforms.quadratic import QuadraticNumber, GOLDEN, ROOT5, exact_height
from concatprover.realexpr import Integer, LOG_ALPHA, SQRT5 as SQRT5_EXPR, log

_LOG2 = log(2)


class AlgebraicExpr:
    """Base class of element descriptors. Operators build compound descriptors."""

    __slots__ = ()

    def value(self):
        """The exact element as a :class:`QuadraticNumber`."""
        raise NotImplementedError

    def __add__(self, other):
        return Sum(self, as_algebraic(other))

    def __radd__(self, other):
        return Sum(as_algebraic(other), self)

    def __sub__(self, other):
        return Difference(self, as_algebraic(other))

    def __rsub__(self, other):
        return Difference(as_algebraic(other), self)

    def __mul__(self, other):
        return Product(self, as_algebraic(other))

    def __rmul__(self, other):
        return Product(as_algebraic(other), self)

    def __truediv__(self, other):
        return Quotient(self, as_algebraic(other))

    def __rtruediv__(self, other):
        return Quotient(as_algebraic(other), self)

    def __pow__(self, exponent):
        return Power(self, int(exponent))


def as_algebraic(value):
    if isinstance(value, AlgebraicExpr):
        return value
    if isinstance(value, numbers.Integral):
        return Rat(int(value))
    if isinstance(value, Fraction):
        return Rat(value.numerator, value.denominator)
    raise UnsupportedElement("No height calculus for %r." % (value,))


@dataclass(frozen=True)
class Rat(AlgebraicExpr):
    p: int
    q: int = 1

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("Rat with zero denominator.")

    def value(self):
        return QuadraticNumber(Fraction(self.p, self.q))

    def __str__(self):
        return str(self.p) if self.q == 1 else "%d/%d" % (self.p, self.q)


@dataclass(frozen=True)
class AlphaElement(AlgebraicExpr):
    def value(self):
        return GOLDEN

    def __str__(self):
        return "alpha"


@dataclass(frozen=True)
class Sqrt5Element(AlgebraicExpr):
    def value(self):
        return ROOT5

    def __str__(self):
        return "sqrt5"


@dataclass(frozen=True)
class SeqTerm(AlgebraicExpr):
    """The sequence value ``F_m`` or ``L_m``."""
    kind: SeqKind
    index: int

    def value(self):
        return QuadraticNumber(table(self.kind)[self.index])

    def __str__(self):
        return "%s_%d" % (SeqKind(self.kind).value, self.index)


@dataclass(frozen=True)
class _Pair(AlgebraicExpr):
    left: AlgebraicExpr
    right: AlgebraicExpr

    def __str__(self):
        return "(%s %s %s)" % (self.left, self.symbol, self.right)


@dataclass(frozen=True)
class Sum(_Pair):
    symbol = "+"

    def value(self):
        return self.left.value() + self.right.value()


@dataclass(frozen=True)
class Difference(_Pair):
    symbol = "-"

    def value(self):
        return self.left.value() - self.right.value()


@dataclass(frozen=True)
class Product(_Pair):
    symbol = "*"

    def value(self):
        return self.left.value() * self.right.value()


@dataclass(frozen=True)
class Quotient(_Pair):
    symbol = "/"

    def value(self):
        return self.left.value() / self.right.value()


@dataclass(frozen=True)
class Power(AlgebraicExpr):
    base: AlgebraicExpr
    exponent: int

    def value(self):
        return self.base.value() ** self.exponent

    def __str__(self):
        return "%s^%d" % (self.base, self.exponent)


ALPHA = AlphaElement()
SQRT5 = Sqrt5Element()


@dataclass(frozen=True)
class HeightBound:
    """Certified upper bound on a logarithmic height and the rules that produced it."""
    value: object
    provenance: tuple

    def __str__(self):
        return str(self.value)


def _rule_height(e):
    if isinstance(e, Rat):
        g = gcd(e.p, e.q)
        p, q = e.p // g, e.q // g
        if q < 0:
            p, q = -p, -q
        return log(max(abs(p), q)), ("h(%s) = log max(|p|, q)" % e,)
    if isinstance(e, AlphaElement):
        return LOG_ALPHA / 2, ("h(alpha) = log(alpha)/2",)
    if isinstance(e, Sqrt5Element):
        return log(SQRT5_EXPR), ("h(sqrt5) = log sqrt5",)
    if isinstance(e, SeqTerm):
        v = table(e.kind)[e.index]
        return log(max(v, 1)), ("h(%s) = log %d" % (e, max(v, 1)),)
    if isinstance(e, Power):
        h, trace = _rule_height(e.base)
        s = abs(e.exponent)
        if s == 0:
            return Integer(0), trace + ("h(%s) = 0" % e,)
        return (h if s == 1 else s * h), trace + ("h(%s) = %d h(%s)" % (e, s, e.base),)
    if isinstance(e, (Product, Quotient)):
        hl, tl = _rule_height(e.left)
        hr, tr = _rule_height(e.right)
        return hl + hr, tl + tr + ("h(%s) <= h(x) + h(y)" % e,)
    if isinstance(e, (Sum, Difference)):
        hl, tl = _rule_height(e.left)
        hr, tr = _rule_height(e.right)
        return hl + hr + _LOG2, tl + tr + ("h(%s) <= h(x) + h(y) + log 2" % e,)
    raise UnsupportedElement("No height rule for %r." % (e,))


def height(e, exact=False):
    """Upper bound on the logarithmic height of the descriptor ``e``.

    With ``exact=True`` the height is computed from the minimal polynomial of the exact element instead.

    Raises:
        UnsupportedElement: ``e`` is not built from the supported descriptors.
    """
    e = as_algebraic(e)
    if exact:
        return HeightBound(exact_height(e.value()), ("h(%s) from its minimal polynomial" % e,))
    value, provenance = _rule_height(e)
    return HeightBound(value, provenance)
