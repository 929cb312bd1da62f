"""The Baker-Davenport reduction in the form of Dujella and Petho.

Let ``M`` be a positive integer, ``p/q`` a convergent of the irrational ``tau`` with ``q > 6M`` and
``A > 0``, ``B > 1``. If ``eps = ||mu q|| - M ||tau q|| > 0`` then

    0 < |u tau - v + mu| < A B^(-w)

has no solution in integers ``u, v, w`` with ``0 <= u <= M`` and ``w >= log(A q / eps) / log B``.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from concatprover.bigseq import pisano_period, residue_class_excludes
from concatprover.config import resolve
from concatprover.contfrac import extend, first_denominator_exceeding
from concatprover.exceptions import NotExcludable, PrecisionExhausted
from concatprover.realexpr import (Integer, IndeterminateAtPrecision, Ordering, as_expr, certified_eval, compare,
                                   distance_enclosure, eval, log, rational)
from concatprover.util import decimal_floor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionProblem:
    """Inputs of one reduction.

    ``shift`` and ``modulus`` are only used for the congruence fallback when no convergent gives a positive
    epsilon.
    """
    M: int
    tau: object
    mu: object
    A: object
    B: object
    label: str = ""
    shift: int = None
    modulus: int = 5

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be a positive integer, got %r." % (self.M,))
        for name in ("tau", "mu", "A", "B"):
            object.__setattr__(self, name, as_expr(getattr(self, name)))

    def with_mu(self, mu, label="", shift=None):
        return ReductionProblem(self.M, self.tau, mu, self.A, self.B, label, shift, self.modulus)


@dataclass(frozen=True)
class Reduced:
    q_index: int
    q: int
    epsilon_lower: Fraction
    w_bound: int


@dataclass(frozen=True)
class EpsilonNonpositive:
    q_index: int


@dataclass(frozen=True)
class Excluded:
    reason: str


@dataclass(frozen=True)
class ReductionOutcome:
    problem: ReductionProblem
    status: object

    @property
    def reduced(self):
        return isinstance(self.status, Reduced)


def epsilon_enclosure(mu, tau, q, M, config=None, start_bits=None):
    """Certified enclosure ``(lo, hi)`` of ``||mu q|| - M ||tau q||`` that decides its sign.

    Returns ``(lo, hi, bits)`` with ``lo > 0`` or ``hi <= 0``. ``||mu q||`` may sit on an integer: the
    distance enclosure is valid regardless, which certifies ``eps <= 0`` for integral ``mu q``.

    Raises:
        PrecisionExhausted: the sign was not decided at the precision cap.
    """
    config = resolve(config)
    mu_q, tau_q = as_expr(mu) * Integer(q), as_expr(tau) * Integer(q)
    if start_bits is None:
        start_bits = q.bit_length() + M.bit_length() + config.sweep_start_margin
    start_bits = min(max(start_bits, config.start_bits), config.precision_cap)
    for bits in config.ladder(start=start_bits):
        try:
            d_mu, _ = distance_enclosure(eval(mu_q, bits))
            d_tau, _ = distance_enclosure(eval(tau_q, bits))
        except IndeterminateAtPrecision:
            continue
        lo = d_mu.lower - M * d_tau.upper
        hi = d_mu.upper - M * d_tau.lower
        if lo > 0 or hi <= 0:
            return lo, hi, bits
        logger.debug("epsilon_enclosure: sign undecided at %d bits", bits)
    raise PrecisionExhausted("Sign of ||mu q|| - M ||tau q|| undecided for %s." % mu, bits=config.precision_cap)


def publish_epsilon(lo, digits):
    """Truncate a positive certified lower bound to ``digits`` significant digits, rounding down."""
    return decimal_floor(lo, digits)


def w_bound(A, B, q, epsilon, config=None):
    """``ceil(upper(log(A q / eps) / log B))``. Every solution has ``w`` strictly below it."""
    bound = log(as_expr(A) * Integer(q) / rational(epsilon.numerator, epsilon.denominator)) / log(B)
    return math.ceil(certified_eval(bound, config=config).upper)


def exclude_by_congruence(shift, modulus=5):
    """Exclude ``n - k = shift`` because ``F_t = F_(t+shift) (mod modulus)`` has no solution.

    Raises:
        NotExcludable: the congruence has a solution.
    """
    if not residue_class_excludes(shift, modulus):
        raise NotExcludable("F_t = F_(t+%d) (mod %d) has a solution." % (shift, modulus))
    period = pisano_period(modulus)
    return Excluded("F_t != F_(t+%d) mod %d over full period %d" % (shift, modulus, period))


def validate_problem(p, config):
    if compare(p.A, 0, config=config) is not Ordering.GREATER:
        raise ValueError("A must be positive in %s." % (p.label or "reduction problem"))
    if compare(p.B, 1, config=config) is not Ordering.GREATER:
        raise ValueError("B must exceed 1 in %s." % (p.label or "reduction problem"))


def reduce(p, cf, q_index=None, config=None):
    """Run the reduction for ``p`` with convergents of ``cf`` (an expansion of ``p.tau``).

    The first convergent tried is ``q_index`` or the first one with ``q > 6M``. When epsilon is not
    positive, up to ``config.retry_convergents`` further convergents are tried, then the congruence
    exclusion if ``p.shift`` is set.

    Raises:
        PrecisionExhausted: epsilon could not be decided for some convergent.
    """
    config = resolve(config)
    validate_problem(p, config)
    if q_index is None:
        q_index, _ = first_denominator_exceeding(cf, 6 * p.M, config)

    first_failure = None
    for index in range(q_index, q_index + config.retry_convergents + 1):
        cf = extend(cf, index - cf.index_base + 1, config)
        q = cf.q(index)
        if q <= 6 * p.M:
            raise ValueError("Convergent %d has q = %d, which does not exceed 6M." % (index, q))
        lo, _, _ = epsilon_enclosure(p.mu, p.tau, q, p.M, config)
        if lo > 0:
            eps = publish_epsilon(lo, config.epsilon_digits)
            return ReductionOutcome(p, Reduced(index, q, eps, w_bound(p.A, p.B, q, eps, config)))
        if first_failure is None:
            first_failure = index
        logger.debug("reduce: %s has epsilon <= 0 at convergent %d", p.label, index)

    if p.shift is not None:
        try:
            return ReductionOutcome(p, exclude_by_congruence(p.shift, p.modulus))
        except NotExcludable:
            pass
    return ReductionOutcome(p, EpsilonNonpositive(first_failure))
