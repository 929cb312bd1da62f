from dataclasses import dataclass
from fractions import Fraction

from mpmath.libmp import (from_int, from_man_exp, from_rational, to_rational, to_int, mpf_lt, mpf_le,
                          round_floor, round_ceiling, finf, fninf, fzero)

from concatprover.exceptions import DomainError
from concatprover.util.numeric import decimal_floor, decimal_ceil, fraction_to_str


def mpf_to_fraction(x):
    if x in (finf, fninf):
        raise DomainError("Unbounded interval endpoint.")
    p, q = to_rational(x)
    return Fraction(int(p), int(q))


def fraction_to_mpf(x, prec=0, rnd=round_floor):
    """Exact conversion for dyadic rationals when ``prec == 0``, directed rounding otherwise."""
    x = Fraction(x)
    q = x.denominator
    if prec == 0:
        if q & (q - 1):
            raise ValueError("%s is not a dyadic rational." % x)
        return from_man_exp(x.numerator, -(q.bit_length() - 1))
    return from_rational(x.numerator, q, prec, rnd)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with dyadic endpoints (raw ``mpmath.libmp`` values).

    ``precision_bits`` is the precision the interval was computed at. The represented real lies in
    ``[lo, hi]``.
    """
    lo: tuple
    hi: tuple
    precision_bits: int

    def __post_init__(self):
        if mpf_lt(self.hi, self.lo):
            raise ValueError("Interval endpoints out of order.")

    @classmethod
    def point(cls, value, precision_bits):
        """Interval enclosing an integer or rational ``value``, exact when it is dyadic."""
        value = Fraction(value)
        if value.denominator == 1:
            v = from_int(value.numerator)
            return cls(v, v, precision_bits)
        lo = from_rational(value.numerator, value.denominator, precision_bits, round_floor)
        hi = from_rational(value.numerator, value.denominator, precision_bits, round_ceiling)
        return cls(lo, hi, precision_bits)

    @property
    def lower(self):
        return mpf_to_fraction(self.lo)

    @property
    def upper(self):
        return mpf_to_fraction(self.hi)

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def is_point(self):
        return self.lo == self.hi

    def is_positive(self):
        return mpf_lt(fzero, self.lo)

    def is_negative(self):
        return mpf_lt(self.hi, fzero)

    def contains_zero(self):
        return mpf_le(self.lo, fzero) and mpf_le(fzero, self.hi)

    def contains(self, x):
        x = Fraction(x)
        return self.lower <= x <= self.upper

    def overlaps(self, other):
        return mpf_le(self.lo, other.hi) and mpf_le(other.lo, self.hi)

    def floor_bounds(self):
        """``(floor(lo), floor(hi))`` as Python integers."""
        return int(to_int(self.lo, round_floor)), int(to_int(self.hi, round_floor))

    def decimal_strings(self, digits=20):
        """Outward-rounded decimal renderings of the endpoints."""
        return (fraction_to_str(decimal_floor(self.lower, digits), digits),
                fraction_to_str(decimal_ceil(self.upper, digits), digits))

    def __str__(self):
        lo, hi = self.decimal_strings()
        return "[%s, %s]" % (lo, hi)


def distance_enclosure(interval):
    """Enclosure of ``||x||`` (distance to the nearest integer) for ``x`` in ``interval``.

    Returns ``(enclosure, certified)``. ``certified`` is False when ``interval`` straddles an integer, in
    which case the lower end of the enclosure is 0. The enclosure itself is always valid.
    """
    lo, hi = interval.lower, interval.upper
    f, g = interval.floor_bounds()
    bits = interval.precision_bits

    def dist(x, base):
        return min(x - base, base + 1 - x)

    half_integers = [h for h in (Fraction(2 * f + 1, 2), Fraction(2 * g + 1, 2)) if lo <= h <= hi]
    if f == g:
        dl, dh = dist(lo, f), dist(hi, f)
        lower = min(dl, dh)
        upper = Fraction(1, 2) if half_integers else max(dl, dh)
        certified = lower > 0 or interval.is_point
    else:
        lower = Fraction(0)
        upper = Fraction(1, 2) if half_integers or g - f >= 2 else max(dist(lo, f), dist(hi, g))
        certified = False
    return Interval(fraction_to_mpf(lower), fraction_to_mpf(upper), bits), certified
