import enum
import functools
import logging

from mpmath.libmp import (from_int, fone, mpf_add, mpf_shift, round_floor, round_ceiling, mpf_lt, mpf_le, fzero,
                          finf, fninf, mpi_add, mpi_sub, mpi_mul, mpi_div, mpi_pow_int, mpi_log, mpi_sqrt,
                          mpi_abs, mpi_neg)

from concatprover.config import resolve
from concatprover.exceptions import DomainError, PrecisionExhausted
from concatprover.realexpr.interval import Interval, distance_enclosure
from concatprover.realexpr.nodes import (Integer, Alpha, Sqrt, Log, Log10, Abs, Neg, Add, Sub, Mul, Div, Pow,
                                         as_expr)

logger = logging.getLogger(__name__)

# Extra working bits on top of the requested precision.
GUARD_BITS = 16


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"


class IndeterminateAtPrecision(DomainError):
    """A sign needed by the evaluation (divisor, log argument) is not decided at this precision."""


def _check_finite(iv):
    if iv[0] in (finf, fninf) or iv[1] in (finf, fninf):
        raise IndeterminateAtPrecision("Unbounded intermediate interval.")
    return iv


def _alpha(wp):
    s5 = mpi_sqrt((from_int(5), from_int(5)), wp)
    lo = mpf_shift(mpf_add(fone, s5[0], wp, round_floor), -1)
    hi = mpf_shift(mpf_add(fone, s5[1], wp, round_ceiling), -1)
    return lo, hi


def _positive(iv, what):
    lo, hi = iv
    if mpf_lt(fzero, lo):
        return iv
    if mpf_le(hi, fzero):
        raise DomainError("%s of a non-positive value." % what)
    raise IndeterminateAtPrecision("%s of an interval touching zero." % what)


def _nonzero(iv):
    lo, hi = iv
    if mpf_lt(fzero, lo) or mpf_lt(hi, fzero):
        return iv
    if lo == hi == fzero:
        raise DomainError("Division by zero.")
    raise IndeterminateAtPrecision("Divisor interval contains zero.")


@functools.lru_cache(maxsize=1 << 16)
def _interval(node, wp):
    if isinstance(node, Integer):
        v = from_int(node.value)
        return v, v
    if isinstance(node, Alpha):
        return _alpha(wp)
    if isinstance(node, Add):
        return _check_finite(mpi_add(_interval(node.left, wp), _interval(node.right, wp), wp))
    if isinstance(node, Sub):
        return _check_finite(mpi_sub(_interval(node.left, wp), _interval(node.right, wp), wp))
    if isinstance(node, Mul):
        return _check_finite(mpi_mul(_interval(node.left, wp), _interval(node.right, wp), wp))
    if isinstance(node, Div):
        num = _interval(node.left, wp)
        den = _nonzero(_interval(node.right, wp))
        return _check_finite(mpi_div(num, den, wp))
    if isinstance(node, Pow):
        base = _interval(node.base, wp)
        if node.exponent < 0:
            _nonzero(base)
        return _check_finite(mpi_pow_int(base, node.exponent, wp))
    if isinstance(node, Log):
        return mpi_log(_positive(_interval(node.arg, wp), "Logarithm"), wp)
    if isinstance(node, Log10):
        num = mpi_log(_positive(_interval(node.arg, wp), "Logarithm"), wp)
        ten = from_int(10)
        return mpi_div(num, mpi_log((ten, ten), wp), wp)
    if isinstance(node, Sqrt):
        arg = _interval(node.arg, wp)
        if mpf_lt(arg[0], fzero):
            if mpf_lt(arg[1], fzero):
                raise DomainError("Square root of a negative value.")
            raise IndeterminateAtPrecision("Square root of an interval touching zero.")
        return mpi_sqrt(arg, wp)
    if isinstance(node, Abs):
        return mpi_abs(_interval(node.arg, wp), wp)
    if isinstance(node, Neg):
        return mpi_neg(_interval(node.arg, wp), wp)
    raise TypeError("Unknown expression node %r." % (node,))


def eval(e, precision_bits):
    """Certified enclosure of the value of ``e``.

    Every node is evaluated with outward rounding at ``precision_bits + GUARD_BITS``. Each node adds at most a
    few ulps of relative error, so for trees without catastrophic cancellation the width is bounded by
    ``2^(4*depth - precision_bits) * max(1, |value|)``. Integer leaves are exact. ``alpha`` and ``sqrt`` leaves
    are correctly rounded outward. ``log`` keeps the relative error of its argument as an absolute error.

    Raises:
        DomainError: a logarithm of a value certainly ``<= 0`` or a division by exactly zero. Its subclass
            ``IndeterminateAtPrecision`` is raised when such a sign is not decided at this precision.
    """
    if precision_bits < 16:
        raise ValueError("precision_bits must be at least 16.")
    lo, hi = _interval(as_expr(e), precision_bits + GUARD_BITS)
    return Interval(lo, hi, precision_bits)


def _ladder(max_bits, config, start=None):
    config = resolve(config)
    first = min(config.start_bits if start is None else start, max_bits)
    return config.ladder(start=first, cap=max_bits)


def compare(e1, e2, max_bits=None, config=None, start_bits=None):
    """Certified ordering of two distinct reals.

    The precision starts at ``min(start_bits, max_bits)`` and doubles until the enclosures are disjoint.

    Raises:
        PrecisionExhausted: the enclosures still overlap at ``max_bits``.
    """
    max_bits = resolve(config).precision_cap if max_bits is None else max_bits
    e1, e2 = as_expr(e1), as_expr(e2)
    for bits in _ladder(max_bits, config, start_bits):
        try:
            a, b = eval(e1, bits), eval(e2, bits)
        except IndeterminateAtPrecision:
            continue
        if mpf_lt(a.hi, b.lo):
            return Ordering.LESS
        if mpf_lt(b.hi, a.lo):
            return Ordering.GREATER
        logger.debug("compare: overlap at %d bits, refining", bits)
    raise PrecisionExhausted("Could not separate %s and %s at %d bits." % (e1, e2, max_bits), bits=max_bits)


def certify_le(e1, e2, max_bits=None, config=None):
    """Certified ``e1 <= e2``. Equal exact values (identical point enclosures) count as ``<=``."""
    max_bits = resolve(config).precision_cap if max_bits is None else max_bits
    e1, e2 = as_expr(e1), as_expr(e2)
    if e1 == e2:
        return True
    for bits in _ladder(max_bits, config):
        try:
            a, b = eval(e1, bits), eval(e2, bits)
        except IndeterminateAtPrecision:
            continue
        if mpf_le(a.hi, b.lo):
            return True
        if mpf_lt(b.hi, a.lo):
            return False
    raise PrecisionExhausted("Could not decide %s <= %s at %d bits." % (e1, e2, max_bits), bits=max_bits)


def certified_eval(e, max_bits=None, config=None, start_bits=None, accept=None):
    """Evaluate on the precision ladder until ``accept(interval)`` holds."""
    max_bits = resolve(config).precision_cap if max_bits is None else max_bits
    e = as_expr(e)
    for bits in _ladder(max_bits, config, start_bits):
        try:
            iv = eval(e, bits)
        except IndeterminateAtPrecision:
            continue
        if accept is None or accept(iv):
            return iv
    raise PrecisionExhausted("Could not evaluate %s to the requested accuracy at %d bits." % (e, max_bits),
                             bits=max_bits)


def nearest_integer_distance(e, max_bits=None, config=None, start_bits=None):
    """Certified enclosure of ``||e||``, the distance from ``e`` to the nearest integer.

    Raises:
        PrecisionExhausted: ``e`` is closer to an integer than ``max_bits`` can resolve.
    """
    max_bits = resolve(config).precision_cap if max_bits is None else max_bits
    e = as_expr(e)
    for bits in _ladder(max_bits, config, start_bits):
        try:
            iv = eval(e, bits)
        except IndeterminateAtPrecision:
            continue
        enclosure, certified = distance_enclosure(iv)
        if certified:
            return enclosure
        logger.debug("nearest_integer_distance: %s straddles an integer at %d bits", e, bits)
    raise PrecisionExhausted("%s is too close to an integer to resolve at %d bits." % (e, max_bits), bits=max_bits)
