"""Bounding ``m`` through the two-term linear form.

Assume ``m > threshold``. The window gives a decay exponent ``e = threshold - lemma_gap`` with
``|Lambda| < c / alpha^e < 1/2``, so the logarithm ``Gamma`` of ``1 + Lambda`` satisfies
``|Gamma| < 2c / alpha^e``. Two arguments turn this into a contradiction with ``n < n_upper``:

* Legendre (homogeneous form): ``d/(n-m)`` is within ``1/(2(n-m)^2)`` of ``log alpha / log 10`` unless
  ``n > alpha^e log 10 / (4c)``. A convergent with ``q <= n_upper`` is at least ``1/((a_max+2) q^2)`` away,
  which forces ``n > alpha^e log 10 / (2c (a_max+2))``.
* Reduction (inhomogeneous form): one reduction with ``M = n_upper`` bounds the decay exponent by ``w_bound``.
"""
import logging
from dataclasses import dataclass, field

from concatprover.config import resolve
from concatprover.contfrac import TAU, TAU_INVERSE, expand, extend, max_partial_quotient
from concatprover.exceptions import PrecisionExhausted
from concatprover.realexpr import ALPHA, Integer, LN10, LOG_ALPHA, Ordering, compare, rational
from concatprover.reduction import Reduced, ReductionProblem, reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contradiction:
    """``m > threshold`` is impossible below ``n_upper``."""
    threshold: int
    details: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class NoContradiction:
    details: dict = field(default_factory=dict, compare=False)


def _exceeds(lower, n_upper, config):
    try:
        return compare(lower, Integer(n_upper), config=config) is Ordering.GREATER
    except PrecisionExhausted:
        return False


def small_form_condition(plan, threshold):
    """``(lhs, rhs)`` with ``c / alpha^e < 1/2``, which lets ``|e^u - 1| < v`` imply ``|u| < 2v``."""
    exponent = threshold - plan.lemma_gap
    return Integer(plan.two_term_form.numerator) / ALPHA ** exponent, rational(1, 2)


def _legendre(n_upper, plan, threshold, config):
    exponent = threshold - plan.lemma_gap
    c2 = 2 * plan.two_term_form.numerator
    trigger = ALPHA ** exponent * LN10 / (2 * c2)
    cf = expand(TAU_INVERSE, 64, index_base=1, config=config)
    found = max_partial_quotient(cf, n_upper, config)
    if found is None:
        return NoContradiction({"reason": "no convergent with q <= n_upper"})
    index, a_max, last = found
    # |x - p_i/q_i| > 1/((a_(i+1)+2) q_i^2) involves the quotient after the last index in range.
    cf = extend(cf, last + 1, config)
    following = cf.quotient(last + 1)
    if following > a_max:
        index, a_max = last + 1, following
    floor_bound = ALPHA ** exponent * LN10 / (c2 * (a_max + 2))
    details = {
        "exponent": exponent,
        "legendre_lower": trigger,
        "amax_index": index,
        "amax": a_max,
        "last_index": last,
        "amax_lower": floor_bound,
        "legendre_closes": _exceeds(trigger, n_upper, config),
        "amax_closes": _exceeds(floor_bound, n_upper, config),
    }
    if details["legendre_closes"] and details["amax_closes"]:
        return Contradiction(threshold, details)
    return NoContradiction(details)


def _reduction(n_upper, plan, threshold, config):
    exponent = threshold - plan.lemma_gap
    problem = ReductionProblem(M=n_upper, tau=TAU, mu=plan.lemma_mu,
                               A=Integer(2 * plan.two_term_form.numerator) / LOG_ALPHA, B=ALPHA,
                               label="m-bound")
    cf = expand(TAU, 128, index_base=0, config=config)
    q_index = plan.lemma_q_index
    if q_index is not None and cf.q(q_index) <= 6 * n_upper:
        logger.info("m-bound: q_%d does not exceed 6M, using the first convergent that does", q_index)
        q_index = None
    outcome = reduce(problem, cf, q_index=q_index, config=config)
    details = {"exponent": exponent, "problem": problem, "status": outcome.status}
    # The decay exponent exceeds ``exponent``, the reduction bounds it strictly by w_bound.
    if isinstance(outcome.status, Reduced) and outcome.status.w_bound <= exponent + 1:
        return Contradiction(threshold, details)
    return NoContradiction(details)


def m_bound_argument(n_upper, plan, hypothesis_m=None, config=None):
    """Show that ``m > threshold`` contradicts ``n < n_upper``.

    ``threshold`` defaults to ``plan.m_threshold``; ``hypothesis_m`` replaces it. Returns
    :class:`Contradiction` or :class:`NoContradiction`, with the certified intermediate values in ``details``.
    """
    config = resolve(config)
    threshold = plan.m_threshold if hypothesis_m is None else hypothesis_m
    lhs, rhs = small_form_condition(plan, threshold)
    if compare(lhs, rhs, config=config) is not Ordering.LESS:
        return NoContradiction({"reason": "c / alpha^e is not below 1/2"})
    if plan.lemma_kind == "legendre":
        result = _legendre(int(n_upper), plan, threshold, config)
    elif plan.lemma_kind == "reduction":
        result = _reduction(int(n_upper), plan, threshold, config)
    else:
        raise ValueError("Unknown m-bound argument %r." % plan.lemma_kind)
    logger.info("m-bound argument at threshold %d with n < %.2e: %s", threshold, n_upper,
                type(result).__name__)
    return result
