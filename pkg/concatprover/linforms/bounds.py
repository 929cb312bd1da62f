"""Fixpoint bounds of the shape ``X < offset + c_1 (1 + log Y) + c_2 (1 + log Y)^2`` with ``Y = a X + b``.

Every inequality produced by combining Matveev's bound with an exponential upper bound has this shape once
the inner bound is substituted. The solver locates the crossing in floating point, rounds it outward to a
few significant digits and certifies the rounded value with interval arithmetic.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from concatprover.config import resolve
from concatprover.exceptions import NoFiniteBound, PrecisionExhausted
from concatprover.realexpr import (Integer, LOG_ALPHA, Ordering, RealExpr, as_expr, certified_eval, compare,
                                   log, rational)
from concatprover.util import decimal_ceil, round_up_significant

logger = logging.getLogger(__name__)


def _expr(value):
    if isinstance(value, float):
        raise TypeError("Floats are not accepted as bound constants, use Fraction or RealExpr.")
    if isinstance(value, RealExpr):
        return value
    return as_expr(Fraction(value))


@dataclass(frozen=True)
class BoundInequality:
    """``X < offset + sum_i coefficients[i-1] * (1 + log Y)^i`` with ``Y = y_scale * X + y_offset``."""
    offset: object
    coefficients: tuple
    y_scale: Fraction = Fraction(1)
    y_offset: Fraction = Fraction(0)
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "offset", _expr(self.offset))
        object.__setattr__(self, "coefficients", tuple(_expr(c) for c in self.coefficients))
        object.__setattr__(self, "y_scale", Fraction(self.y_scale))
        object.__setattr__(self, "y_offset", Fraction(self.y_offset))
        if not 1 <= len(self.coefficients) <= 2:
            raise NoFiniteBound("Only polynomials of degree 1 or 2 in (1 + log Y) are supported.")

    @classmethod
    def single(cls, coefficient, offset, y_scale=1, y_offset=0, label=""):
        """``X - offset < coefficient * (1 + log Y)``."""
        return cls(offset, (coefficient,), y_scale, y_offset, label)

    @classmethod
    def chained(cls, outer, inner_coefficient, inner_offset, intercept, window, label=""):
        """Substitute ``n - k < inner_offset + inner_coefficient * (1 + log n)`` into the three-term bound.

        The three-term bound reads ``k < outer * (1 + log n) * ((3(n-k) + 2) log alpha + intercept)`` and
        ``n < 2k + window``. Expanding gives::

            n < window + 2 outer (intercept + (3 inner_offset + 2) log alpha) L + 6 outer inner log alpha L^2
        """
        outer, inner = _expr(outer), _expr(inner_coefficient)
        linear = 2 * outer * (_expr(intercept) + (3 * inner_offset + 2) * LOG_ALPHA)
        quadratic = 6 * outer * inner * LOG_ALPHA
        return cls(window, (linear, quadratic), 1, 0, label)

    @classmethod
    def refined(cls, coefficient, a3_at_max_shift, window, label=""):
        """``n < window + 2 * coefficient * A_3 * (1 + log n)`` once ``n - k`` is bounded."""
        return cls(window, (2 * _expr(coefficient) * _expr(a3_at_max_shift),), 1, 0, label)

    def y_expr(self, x):
        return rational(self.y_scale.numerator, self.y_scale.denominator) * x + \
            rational(self.y_offset.numerator, self.y_offset.denominator)

    def rhs(self, x):
        """The right-hand side at ``X = x`` as an expression."""
        x = as_expr(x)
        L = 1 + log(self.y_expr(x))
        result = self.offset
        for power, c in enumerate(self.coefficients, start=1):
            result = result + c * L ** power
        return result

    def slope_bound(self, x):
        """``y_scale * (c_1 + 2 c_2 L)``. The derivative of ``X - rhs`` is positive where ``Y`` exceeds it."""
        x = as_expr(x)
        L = 1 + log(self.y_expr(x))
        result = self.coefficients[0]
        if len(self.coefficients) == 2:
            result = result + 2 * self.coefficients[1] * L
        return rational(self.y_scale.numerator, self.y_scale.denominator) * result

    def __str__(self):
        terms = " + ".join("(%s) L^%d" % (c, i) for i, c in enumerate(self.coefficients, start=1))
        return "X < %s + %s, L = 1 + log(%s X + %s)" % (self.offset, terms, self.y_scale, self.y_offset)


@dataclass(frozen=True)
class SolvedBound:
    """``value`` bounds every solution of ``inequality`` strictly. ``tight`` is the located crossing."""
    value: int
    tight: float
    inequality: object = field(default=None, compare=False)

    def __int__(self):
        return self.value

    def __str__(self):
        return "%.2e" % self.value


def _floats(b):
    consts = [b.offset] + list(b.coefficients)
    return [float(certified_eval(c).lower) for c in consts]


def _check_well_posed(b, config):
    for c in b.coefficients:
        iv = certified_eval(c, config=config)
        if iv.upper < 0:
            raise NoFiniteBound("Negative coefficient %s." % c)
        if not iv.lower >= 0:
            raise NoFiniteBound("Coefficient %s is not certified non-negative." % c)
    if b.y_scale <= 0:
        raise NoFiniteBound("y_scale must be positive.")


def satisfies(b, x, config=None):
    """True iff ``X = x`` satisfies the inequality (certified)."""
    return compare(Integer(x), b.rhs(x), config=config) is Ordering.LESS


def certifies(b, n, config=None):
    """True iff every solution of ``b`` is certified to lie below ``n``."""
    if b.y_scale * n + b.y_offset < 1:
        return False
    try:
        if compare(Integer(n), b.rhs(n), config=config) is not Ordering.GREATER:
            return False
        y = b.y_expr(Integer(n))
        return compare(y, b.slope_bound(n), config=config) is Ordering.GREATER
    except PrecisionExhausted:
        return False


def solve_bound(b, digits=2, config=None):
    """Smallest value with ``digits`` significant digits above the crossing of ``X`` and the right-hand side.

    The result is certified: ``X - rhs(X) > 0`` at the value, its derivative is positive there, and the
    derivative only grows beyond it (``Y >= 1`` and non-negative coefficients), so every solution of the
    inequality is smaller.

    Raises:
        NoFiniteBound: the inequality is ill-posed.
    """
    config = resolve(config)
    _check_well_posed(b, config)
    off, *cs = _floats(b)
    ys, yo = float(b.y_scale), float(b.y_offset)

    def g(x):
        y = ys * x + yo
        if y <= 0:
            return -math.inf
        L = 1 + math.log(y)
        return x - off - sum(c * L ** i for i, c in enumerate(cs, start=1))

    lo = max(1.0, (1 - yo) / ys)
    hi = 2 * lo
    while g(hi) <= 0:
        hi *= 2
        if hi > 1e300:
            raise NoFiniteBound("No crossing below 1e300 for %s." % b)
    for _ in range(200):
        mid = (lo + hi) / 2
        if g(mid) <= 0:
            lo = mid
        else:
            hi = mid

    value = round_up_significant(Fraction(hi), digits)
    for _ in range(10):
        if certifies(b, value, config):
            logger.debug("solve_bound: %s -> %d (tight %.6e)", b.label or b, value, hi)
            return SolvedBound(value, hi, b)
        unit = 10 ** (len(str(value)) - digits)
        value = int(decimal_ceil(value + unit, digits))
    raise NoFiniteBound("Could not certify a bound near %.6e for %s." % (hi, b))


def propagate_bound(x_bound, scale, offset, digits=2):
    """Bound ``scale * X + offset`` for ``X < x_bound``, rounded outward like :func:`solve_bound`."""
    x = int(x_bound)
    tight = Fraction(scale) * x + Fraction(offset)
    return SolvedBound(round_up_significant(tight, digits), float(tight))
