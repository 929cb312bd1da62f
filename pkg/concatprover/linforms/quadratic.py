from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
import numbers

from concatprover.realexpr import SQRT5, log, rational


def _fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    raise TypeError("Expected a rational number, got %r." % (x,))


@dataclass(frozen=True)
class QuadraticNumber:
    """Exact element ``r + s*sqrt5`` of ``Q(sqrt5)`` in its real embedding with ``sqrt5 > 0``."""
    r: Fraction
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", _fraction(self.r))
        object.__setattr__(self, "s", _fraction(self.s))

    @classmethod
    def of(cls, value):
        if isinstance(value, QuadraticNumber):
            return value
        return cls(_fraction(value))

    @property
    def is_rational(self):
        return self.s == 0

    def conjugate(self):
        return QuadraticNumber(self.r, -self.s)

    def norm(self):
        return self.r * self.r - 5 * self.s * self.s

    def trace(self):
        return 2 * self.r

    def __add__(self, other):
        other = QuadraticNumber.of(other)
        return QuadraticNumber(self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.r, -self.s)

    def __sub__(self, other):
        return self + (-QuadraticNumber.of(other))

    def __rsub__(self, other):
        return QuadraticNumber.of(other) - self

    def __mul__(self, other):
        other = QuadraticNumber.of(other)
        return QuadraticNumber(self.r * other.r + 5 * self.s * other.s, self.r * other.s + self.s * other.r)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadraticNumber division by zero")
        return QuadraticNumber(self.r / n, -self.s / n)

    def __truediv__(self, other):
        return self * QuadraticNumber.of(other).inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.of(other) * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            raise TypeError("Only integer powers are supported.")
        base = self if exponent >= 0 else self.inverse()
        e = abs(int(exponent))
        result = ONE
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sign(self):
        """Exact sign of the real embedding."""
        r, s = self.r, self.s
        if s == 0:
            return (r > 0) - (r < 0)
        if r == 0:
            return (s > 0) - (s < 0)
        if (r > 0) == (s > 0):
            return 1 if r > 0 else -1
        # Opposite signs: the larger of r^2 and 5 s^2 decides.
        dominant = r if r * r > 5 * s * s else s
        return 1 if dominant > 0 else -1

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def minimal_polynomial(self):
        """Coefficients ``(a0, ..., a_deg)`` of the primitive minimal polynomial over ``Z`` with ``a0 > 0``."""
        if self.is_rational:
            coefficients = [self.r.denominator, -self.r.numerator]
        else:
            c1, c0 = -self.trace(), self.norm()
            scale = lcm(c1.denominator, c0.denominator)
            coefficients = [scale, int(c1 * scale), int(c0 * scale)]
        g = 0
        for c in coefficients:
            g = gcd(g, c)
        return tuple(c // g for c in coefficients)

    def degree(self):
        return 1 if self.is_rational else 2

    def conjugates(self):
        return (self,) if self.is_rational else (self, self.conjugate())

    def to_expr(self):
        """The element as a :class:`RealExpr <concatprover.realexpr.RealExpr>`."""
        r = rational(self.r.numerator, self.r.denominator)
        if self.s == 0:
            return r
        s = SQRT5 if self.s == 1 else rational(self.s.numerator, self.s.denominator) * SQRT5
        return s if self.r == 0 else r + s

    def __str__(self):
        if self.s == 0:
            return str(self.r)
        return "%s + %s*sqrt5" % (self.r, self.s)


ONE = QuadraticNumber(1)
GOLDEN = QuadraticNumber(Fraction(1, 2), Fraction(1, 2))
ROOT5 = QuadraticNumber(0, 1)


def mahler_measure(x):
    """``a0 * prod max(|x_i|, 1)`` over the conjugates, as an exact element.

    ``h(x) = log(mahler_measure(x)) / deg(x)``.
    """
    x = QuadraticNumber.of(x)
    if x.is_rational:
        return QuadraticNumber(max(abs(x.r.numerator), x.r.denominator))
    measure = QuadraticNumber(x.minimal_polynomial()[0])
    for conjugate in x.conjugates():
        if abs(conjugate) > ONE:
            measure = measure * abs(conjugate)
    return measure


def exact_height(x):
    """Logarithmic height ``(log a0 + sum log max(|x_i|, 1)) / deg`` as an expression.

    Each ``max`` is decided exactly, so only one logarithm is left to interval evaluation.
    """
    x = QuadraticNumber.of(x)
    h = log(mahler_measure(x).to_expr())
    return h if x.is_rational else h / 2


def log_abs(x):
    """``|log x|`` for a positive element as an expression."""
    x = QuadraticNumber.of(x)
    if x.sign() <= 0:
        raise ValueError("log_abs needs a positive element, got %s." % x)
    return abs(log(x.to_expr()))


