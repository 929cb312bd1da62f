"""Exact decimal renderings of rationals with directed rounding."""
from fractions import Fraction


def _as_fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _decimal_exponent(x):
    # Largest e with 10**e <= x, for x > 0.
    e = len(str(x.numerator)) - len(str(x.denominator))
    if Fraction(10) ** e > x:
        e -= 1
    elif Fraction(10) ** (e + 1) <= x:
        e += 1
    return e


def _round_significant(x, digits, upward):
    x = _as_fraction(x)
    if x == 0:
        return Fraction(0)
    if x < 0:
        return -_round_significant(-x, digits, not upward)
    unit = Fraction(10) ** (_decimal_exponent(x) - digits + 1)
    q, r = divmod(x, unit)
    if upward and r != 0:
        q += 1
    return q * unit


def decimal_floor(x, digits):
    """Largest rational with ``digits`` significant decimal digits that is ``<= x``."""
    return _round_significant(x, digits, upward=False)


def decimal_ceil(x, digits):
    """Smallest rational with ``digits`` significant decimal digits that is ``>= x``."""
    return _round_significant(x, digits, upward=True)


def round_up_significant(x, digits=2):
    """Integer obtained by rounding ``x`` outward to ``digits`` significant digits."""
    value = decimal_ceil(x, digits)
    if value.denominator != 1:
        value = Fraction(-((-value.numerator) // value.denominator))
    return int(value)


def fraction_to_str(x, digits=None):
    """Render a rational as ``p/q`` (``digits is None``) or as a truncated scientific decimal."""
    x = _as_fraction(x)
    if digits is None:
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    e = _decimal_exponent(x)
    mantissa = int(x / Fraction(10) ** (e - digits + 1))
    text = str(mantissa)
    body = text[0] + ("." + text[1:] if len(text) > 1 else "")
    return "%s%se%d" % (sign, body, e)


def parse_fraction(text):
    """Inverse of :func:`fraction_to_str` without ``digits``. Decimal and scientific strings are accepted too."""
    return Fraction(text.strip())
