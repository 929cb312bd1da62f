"""Immutable expression trees over the integers, alpha = (1+sqrt5)/2 and square roots.

Trees are built with the Python operators::

    mu = log(55 * SQRT5 / (1 - ALPHA ** -12 * SQRT5)) / LOG_ALPHA

``str(tree)`` gives the prefix syntax understood by :func:`parse <concatprover.realexpr.parse>`.
"""
from dataclasses import dataclass
from fractions import Fraction
import numbers


class RealExpr:
    """Base class of every expression node."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, as_expr(other))

    def __radd__(self, other):
        return Add(as_expr(other), self)

    def __sub__(self, other):
        return Sub(self, as_expr(other))

    def __rsub__(self, other):
        return Sub(as_expr(other), self)

    def __mul__(self, other):
        return Mul(self, as_expr(other))

    def __rmul__(self, other):
        return Mul(as_expr(other), self)

    def __truediv__(self, other):
        return Div(self, as_expr(other))

    def __rtruediv__(self, other):
        return Div(as_expr(other), self)

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            raise TypeError("Only integer powers are supported, got %r." % (exponent,))
        return Pow(self, int(exponent))

    def __neg__(self):
        return Neg(self)

    def __abs__(self):
        return Abs(self)

    def children(self):
        return ()

    def depth(self):
        return 1 + max((c.depth() for c in self.children()), default=0)


def as_expr(value):
    """Coerce integers and rationals to expression nodes."""
    if isinstance(value, RealExpr):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not expressions.")
    if isinstance(value, numbers.Integral):
        return Integer(int(value))
    if isinstance(value, Fraction):
        return rational(value.numerator, value.denominator)
    raise TypeError("Cannot convert %r to an expression." % (value,))


@dataclass(frozen=True)
class Integer(RealExpr):
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Alpha(RealExpr):
    """The golden ratio, the root of ``x^2 - x - 1`` greater than 1."""

    def __str__(self):
        return "alpha"


@dataclass(frozen=True)
class _Unary(RealExpr):
    arg: RealExpr

    def children(self):
        return (self.arg,)

    def __str__(self):
        return "(%s %s)" % (self.op, self.arg)


@dataclass(frozen=True)
class _Binary(RealExpr):
    left: RealExpr
    right: RealExpr

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return "(%s %s %s)" % (self.op, self.left, self.right)


@dataclass(frozen=True)
class Sqrt(_Unary):
    op = "sqrt"

    def __str__(self):
        if self.arg == Integer(5):
            return "sqrt5"
        return super().__str__()


@dataclass(frozen=True)
class Log(_Unary):
    """Natural logarithm."""
    op = "log"


@dataclass(frozen=True)
class Log10(_Unary):
    """Base-10 logarithm."""
    op = "log10"


@dataclass(frozen=True)
class Abs(_Unary):
    op = "abs"


@dataclass(frozen=True)
class Neg(_Unary):
    op = "neg"


@dataclass(frozen=True)
class Add(_Binary):
    op = "add"


@dataclass(frozen=True)
class Sub(_Binary):
    op = "sub"


@dataclass(frozen=True)
class Mul(_Binary):
    op = "mul"


@dataclass(frozen=True)
class Div(_Binary):
    op = "div"


@dataclass(frozen=True)
class Pow(RealExpr):
    base: RealExpr
    exponent: int

    def children(self):
        return (self.base,)

    def __str__(self):
        return "(pow %s %d)" % (self.base, self.exponent)


def rational(p, q=1):
    if q == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if q == 1:
        return Integer(p)
    return Div(Integer(p), Integer(q))


def log(e):
    return Log(as_expr(e))


def log10(e):
    return Log10(as_expr(e))


def sqrt(e):
    return Sqrt(as_expr(e))


ALPHA = Alpha()
SQRT5 = Sqrt(Integer(5))
BETA = Sub(Integer(1), ALPHA)
LOG_ALPHA = Log(ALPHA)
LN10 = Log(Integer(10))
