import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from concatprover.contfrac.expansion import expand, extend
from concatprover.realexpr import Ordering, as_expr, compare, rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsConvergent:
    index: int


@dataclass(frozen=True)
class NotClose:
    pass


def _extend_until(cf, predicate, config):
    # Doubles the expansion until some computed denominator satisfies ``predicate``.
    while not any(predicate(q) for _, q in cf.convergents):
        cf = extend(cf, 2 * len(cf), config)
    return cf


def first_denominator_exceeding(cf, bound, config=None):
    """``(index, q_index)`` with ``q_index > bound >= q_(index-1)``. The expansion is extended on demand."""
    cf = _extend_until(cf, lambda q: q > bound, config)
    for index in cf.indices():
        q = cf.q(index)
        if q > bound:
            return index, q


def max_partial_quotient(cf, max_denominator, config=None):
    """``(index, value, last_index)``: the largest ``a_i`` over the indices with ``q_i <= max_denominator``.

    ``last_index`` is the final index of that range. Ties keep the first index. Returns ``None`` when no
    denominator is within the bound.
    """
    cf = _extend_until(cf, lambda q: q > max_denominator, config)
    best, last = None, None
    for index in cf.indices():
        if cf.q(index) > max_denominator:
            break
        last = index
        a = cf.quotient(index)
        if best is None or a > best[1]:
            best = (index, a)
    if best is None:
        return None
    return best[0], best[1], last


def approximation_floor(cf, q, max_denominator, config=None):
    """Certified lower bound ``1/((a_max+2) q^2)`` on ``|target - p/q|`` for every ``p``.

    ``a_max`` runs over the indices up to one past the last convergent with denominator
    ``<= max_denominator``, since ``|x - p_i/q_i| > 1/((a_(i+1)+2) q_i^2)`` involves the next quotient.
    """
    if not 1 <= q <= max_denominator:
        raise ValueError("q must satisfy 1 <= q <= max_denominator.")
    _, _, last = max_partial_quotient(cf, max_denominator, config)
    cf = extend(cf, last - cf.index_base + 2, config)
    a_max = max(cf.quotient(i) for i in range(cf.first_index, last + 2))
    return Fraction(1, (a_max + 2) * q * q)


def legendre_locate(target, p, q, cf=None, index_base=1, config=None):
    """Locate ``p/q`` among the convergents of ``target`` when Legendre's criterion applies.

    Returns ``IsConvergent(index)`` when ``|target - p/q| < 1/(2q^2)`` is certified and the reduced fraction is
    a convergent, ``NotClose()`` otherwise.

    Raises:
        PrecisionExhausted: the criterion could not be decided.
    """
    if q < 1:
        raise ValueError("q must be positive, got %d." % q)
    g = gcd(p, q)
    p, q = p // g, q // g
    target = as_expr(target)

    gap = abs(target - rational(p, q))
    if compare(gap, rational(1, 2 * q * q), config=config) is not Ordering.LESS:
        return NotClose()

    if cf is None:
        cf = expand(target, 8, index_base, config)
    cf = _extend_until(cf, lambda d: d > q, config)
    for index in cf.indices():
        pi, qi = cf.convergent(index)
        if qi > q:
            break
        if (pi, qi) == (p, q):
            return IsConvergent(index)
    logger.debug("legendre_locate: %d/%d is close but not a convergent", p, q)
    return NotClose()
