"""Matveev's lower bound and the four linear forms of the concatenation equations.

For positive real ``eta_1..eta_t`` in a real field of degree ``d_K`` and integers ``b_i`` with
``Lambda = eta_1^b_1 ... eta_t^b_t - 1 != 0``::

    log |Lambda| > -1.4 * 30^(t+3) * t^4.5 * d_K^2 * (1 + log d_K) * (1 + log B) * A_1 ... A_t

whenever ``B >= max |b_i|`` and ``A_i >= max(d_K h(eta_i), |log eta_i|, 0.16)``.
"""
import enum
import logging
from dataclasses import dataclass, field

from concatprover.bigseq import SeqKind, digit_count, fib, lucas
from concatprover.exceptions import SideConditionViolated
from concatprover.linforms.heights import ALPHA as ALPHA_ELEMENT, SQRT5 as SQRT5_ELEMENT, Rat, SeqTerm
from concatprover.linforms.quadratic import QuadraticNumber, GOLDEN, ROOT5, mahler_measure
from concatprover.realexpr import (Integer, Alpha, Sqrt, Pow, Add, Sub, Mul, Div, Log, LN10, LOG_ALPHA, as_expr,
                                   certify_le, certified_eval, log, rational, sqrt)

logger = logging.getLogger(__name__)


class Equation(enum.Enum):
    """The two concatenation equations."""
    #: ``F_n = 10^d F_m + L_k`` with ``d`` the number of digits of ``L_k``.
    FIB_LUCAS = 1
    #: ``F_n = 10^d L_m + F_k`` with ``d`` the number of digits of ``F_k``.
    LUCAS_FIB = 2

    @property
    def left_kind(self):
        return SeqKind.FIBONACCI if self is Equation.FIB_LUCAS else SeqKind.LUCAS

    @property
    def right_kind(self):
        return SeqKind.LUCAS if self is Equation.FIB_LUCAS else SeqKind.FIBONACCI


def _eta3_fib_lucas(m, shift):
    # F_m sqrt5 / (1 - alpha^(-shift) sqrt5)
    return SeqTerm(SeqKind.FIBONACCI, m) * SQRT5_ELEMENT / (1 - ALPHA_ELEMENT ** (-shift) * SQRT5_ELEMENT)


def _eta3_lucas_fib(m, shift):
    # L_m sqrt5 / (1 - alpha^(-shift))
    return SeqTerm(SeqKind.LUCAS, m) * SQRT5_ELEMENT / (1 - ALPHA_ELEMENT ** (-shift))


def _eta3_sqrt5(m, shift):
    return SQRT5_ELEMENT


@dataclass(frozen=True)
class LinearForm:
    """One row of the linear-form table.

    The form is ``Lambda = 10^d * alpha^(-B) * eta_3 - 1`` (``eta_3`` absent when ``t == 2``) and satisfies
    ``|Lambda| < numerator / alpha^(decay)``. The decay is ``n - k - decay_offset`` for the ``n - k`` forms
    (``scale == 1``) and ``2k`` for the three-term forms (``scale == 2``).

    Attributes:
        b_from_m: ``B = n - m`` when true, ``B = n`` otherwise.
        a3_intercept: for a parametric ``A_3 = (3(n-k) + 2) log alpha + a3_intercept``.
        min_shift: the smallest ``n - k`` the upper bound is valid for.
    """
    name: str
    alias: int
    equation: Equation
    t: int
    constant_heights: tuple
    numerator: int
    scale: int
    decay_offset: int
    b_from_m: bool
    witness: str
    printed_coefficient: object
    eta3: object = None
    a3_intercept: object = None
    min_shift: int = 1
    d_k: int = 2

    @property
    def parametric(self):
        return self.a3_intercept is not None

    def a3(self, shift):
        """Parametric ``A_3`` at ``n - k = shift``."""
        if not self.parametric:
            raise ValueError("%s has no parametric height." % self.name)
        return (3 * shift + 2) * LOG_ALPHA + self.a3_intercept

    def heights(self, shift=None):
        if not self.parametric:
            return self.constant_heights
        return self.constant_heights + (self.a3(shift),)

    def __str__(self):
        return self.name


FIB_LUCAS_TWO_TERM = LinearForm(
    name="FIB_LUCAS_TWO_TERM", alias=1, equation=Equation.FIB_LUCAS, t=2,
    constant_heights=(2 * LN10, LOG_ALPHA), numerator=3, scale=1, decay_offset=7, b_from_m=True,
    witness="n-neq-m", printed_coefficient=rational(241, 10) * Integer(10) ** 9)

FIB_LUCAS_THREE_TERM = LinearForm(
    name="FIB_LUCAS_THREE_TERM", alias=2, equation=Equation.FIB_LUCAS, t=3,
    constant_heights=(2 * LN10, LOG_ALPHA), numerator=7, scale=2, decay_offset=0, b_from_m=False,
    witness="conjugate-size", printed_coefficient=rational(224, 100) * Integer(10) ** 12,
    eta3=_eta3_fib_lucas, a3_intercept=Integer(2), min_shift=4)

LUCAS_FIB_TWO_TERM = LinearForm(
    name="LUCAS_FIB_TWO_TERM", alias=3, equation=Equation.LUCAS_FIB, t=3,
    constant_heights=(2 * LN10, LOG_ALPHA, log(5)), numerator=3, scale=1, decay_offset=6, b_from_m=True,
    witness="n-neq-m", printed_coefficient=rational(719, 100) * Integer(10) ** 12, eta3=_eta3_sqrt5)

LUCAS_FIB_THREE_TERM = LinearForm(
    name="LUCAS_FIB_THREE_TERM", alias=4, equation=Equation.LUCAS_FIB, t=3,
    constant_heights=(2 * LN10, LOG_ALPHA), numerator=4, scale=2, decay_offset=0, b_from_m=False,
    witness="lucas-difference", printed_coefficient=rational(224, 100) * Integer(10) ** 12,
    eta3=_eta3_lucas_fib, a3_intercept=log(80), min_shift=2)

LINEAR_FORMS = (FIB_LUCAS_TWO_TERM, FIB_LUCAS_THREE_TERM, LUCAS_FIB_TWO_TERM, LUCAS_FIB_THREE_TERM)
_BY_NAME = {f.name: f for f in LINEAR_FORMS}
_BY_ALIAS = {f.alias: f for f in LINEAR_FORMS}


def linear_form(which):
    """Look a form up by object, name or alias 1-4."""
    if isinstance(which, LinearForm):
        return which
    if isinstance(which, str) and which.isdigit():
        which = int(which)
    if isinstance(which, int):
        if which not in _BY_ALIAS:
            raise ValueError("Unknown linear form alias %d. Expected 1-4." % which)
        return _BY_ALIAS[which]
    try:
        return _BY_NAME[str(which).upper()]
    except KeyError:
        raise ValueError("Unknown linear form %r." % (which,)) from None


@dataclass(frozen=True)
class LinearFormInstance:
    """The data ``(t, d_K, eta_i, b_i, A_i, B)`` of one linear form at concrete indices."""
    form: LinearForm
    n: int
    m: int
    k: int
    d: int
    etas: tuple
    exponents: tuple
    A: tuple
    B: int
    witness: str
    d_k: int = 2

    @property
    def t(self):
        return len(self.etas)


def lambda_instance(which, n, m, k):
    """Instantiate a linear form at ``(n, m, k)``.

    Raises:
        SideConditionViolated: the indices violate the conditions the form's upper bound relies on.
    """
    form = linear_form(which)
    if min(n, m, k) < 0:
        raise SideConditionViolated("Indices must be non-negative, got (%d, %d, %d)." % (n, m, k))
    right = lucas(k) if form.equation is Equation.FIB_LUCAS else fib(k)
    if right < 1:
        raise SideConditionViolated("%s needs a right part >= 1, k = %d." % (form.name, k))
    d = int(digit_count(right))
    shift = n - k
    if shift < form.min_shift:
        raise SideConditionViolated("%s needs n - k >= %d, got %d." % (form.name, form.min_shift, shift))
    if form is FIB_LUCAS_THREE_TERM and m < 1:
        raise SideConditionViolated("FIB_LUCAS_THREE_TERM needs m >= 1 (F_0 = 0 makes eta_3 vanish).")

    b2 = n - m if form.b_from_m else n
    if b2 < 1:
        raise SideConditionViolated("%s needs a positive alpha exponent, got %d." % (form.name, b2))
    if b2 < d:
        raise SideConditionViolated("%s takes B = %d, which is smaller than d = %d." % (form.name, b2, d))

    etas = (Rat(10), ALPHA_ELEMENT)
    exponents = (d, -b2)
    if form.t == 3:
        etas += (form.eta3(m, shift),)
        exponents += (1,)
    return LinearFormInstance(form=form, n=n, m=m, k=k, d=d, etas=etas, exponents=exponents,
                              A=form.heights(shift), B=b2, witness=form.witness, d_k=form.d_k)


def replay_witness(inst):
    """Replay the nonvanishing argument named by ``inst.witness`` at the instance's indices."""
    if inst.witness == "n-neq-m":
        # alpha^(n-m) (or alpha^(2(n-m))) is irrational unless n = m.
        return inst.n != inst.m
    if inst.witness == "conjugate-size":
        # Conjugating would force 10 <= 10^d F_m <= 2.
        return inst.d >= 1 and fib(inst.m) >= 1
    if inst.witness == "lucas-difference":
        # Conjugating and adding would force L_n = L_k.
        return lucas(inst.n) != lucas(inst.k)
    raise ValueError("Unknown nonvanishing witness %r." % inst.witness)


# Above this exponent size the exact product is not formed.
_EXACT_PRODUCT_LIMIT = 4096


def _as_quadratic(e):
    # Exact value of an expression built from integers, alpha and sqrt5 with field operations, else None.
    if isinstance(e, Integer):
        return QuadraticNumber(e.value)
    if isinstance(e, Alpha):
        return GOLDEN
    if isinstance(e, Sqrt) and e.arg == Integer(5):
        return ROOT5
    if isinstance(e, Pow):
        base = _as_quadratic(e.base)
        return None if base is None else base ** e.exponent
    if isinstance(e, (Add, Sub, Mul, Div)):
        left, right = _as_quadratic(e.left), _as_quadratic(e.right)
        if left is None or right is None:
            return None
        if isinstance(e, Add):
            return left + right
        if isinstance(e, Sub):
            return left - right
        if isinstance(e, Mul):
            return left * right
        return left / right
    return None


def exp_exact(e):
    """``exp(e)`` as an exact element when ``e`` is a sum of integer multiples of logarithms, else None."""
    if isinstance(e, Log):
        return _as_quadratic(e.arg)
    if isinstance(e, Mul):
        for c, rest in ((e.left, e.right), (e.right, e.left)):
            if isinstance(c, Integer) and c.value >= 0:
                inner = exp_exact(rest)
                return None if inner is None else inner ** c.value
        return None
    if isinstance(e, Add):
        left, right = exp_exact(e.left), exp_exact(e.right)
        return None if left is None or right is None else left * right
    return None


def _log_le(measure, a, config):
    # log(measure) <= a, exactly when exp(a) is an element of Q(sqrt5).
    bound = exp_exact(as_expr(a))
    if bound is not None:
        return measure <= bound
    return certify_le(log(measure.to_expr()), a, config=config)


def verify_instance(inst, config=None):
    """Check the hypotheses of Matveev's bound for ``inst``.

    Returns a dict from check name to outcome. ``A_i`` is compared against exact heights through
    ``d_K h(eta) = log M(eta)^(d_K/deg eta)`` with ``M`` the Mahler measure, exactly whenever ``exp(A_i)``
    lies in ``Q(sqrt5)``.
    """
    checks = {}
    values = [eta.value() for eta in inst.etas]
    checks["positive"] = all(v.sign() > 0 for v in values)
    for i, (v, a) in enumerate(zip(values, inst.A), start=1):
        measure = mahler_measure(v) ** (inst.d_k // v.degree())
        checks["A%d>=dK*h" % i] = _log_le(measure, a, config)
        if checks["positive"]:
            checks["A%d>=|log eta|" % i] = _log_le(max(v, v.inverse()), a, config)
        checks["A%d>=0.16" % i] = certify_le(rational(4, 25), a, config=config)
    checks["B>=max|b|"] = inst.B >= max(abs(b) for b in inst.exponents)
    checks["witness"] = replay_witness(inst)
    if max(abs(b) for b in inst.exponents) <= _EXACT_PRODUCT_LIMIT:
        product = values[0] ** inst.exponents[0]
        for v, b in zip(values[1:], inst.exponents[1:]):
            product = product * v ** b
        checks["nonzero"] = product != values[0] ** 0
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning("%s at (n, m, k) = (%d, %d, %d) fails %s", inst.form.name, inst.n, inst.m, inst.k,
                       ", ".join(failed))
    return checks


def matveev_constant(t, d_k=2):
    """``1.4 * 30^(t+3) * t^4.5 * d_K^2 * (1 + log d_K)``."""
    return rational(7, 5) * Integer(30) ** (t + 3) * Integer(t) ** 4 * sqrt(t) * d_k * d_k * (1 + log(d_k))


def matveev_exponent(inst):
    """The magnitude ``1.4 * 30^(t+3) * t^4.5 * d_K^2 * (1 + log d_K) * (1 + log B) * A_1...A_t``."""
    result = matveev_constant(inst.t, inst.d_k) * (1 + log(inst.B))
    for a in inst.A:
        result = result * as_expr(a)
    return result


def matveev_coefficient(which):
    """Coefficient of ``(1 + log B)`` (times the parametric ``A_3``, if any) in the bound on the decay.

    It is the Matveev exponent with ``(1 + log B)`` and the parametric height removed, divided by
    ``scale * log alpha``.
    """
    form = linear_form(which)
    result = matveev_constant(form.t, form.d_k)
    for a in form.constant_heights:
        result = result * a
    return result / (form.scale * LOG_ALPHA)


def additive_term(which):
    """``log(numerator) / (scale * log alpha)``, the part of the decay bound independent of ``B``."""
    form = linear_form(which)
    return log(form.numerator) / (form.scale * LOG_ALPHA)


@dataclass(frozen=True)
class CoefficientCheck:
    form: LinearForm
    recomputed: object = field(repr=False)
    printed: object = field(repr=False)
    within_printed: bool
    absorbs_additive: bool
    within_tolerance: bool

    @property
    def ok(self):
        return self.within_printed and self.absorbs_additive


def check_coefficient(which, printed=None, config=None):
    """Compare the recomputed coefficient with the printed one.

    The printed coefficient must dominate the recomputed one, and the gap must absorb the additive term
    (``1 + log B >= 1`` and the parametric ``A_3 >= 1``). ``within_tolerance`` reports whether the
    recomputed value is within 0.5% below the printed one.
    """
    form = linear_form(which)
    printed = form.printed_coefficient if printed is None else as_expr(printed)
    recomputed = matveev_coefficient(form)
    within = certify_le(recomputed, printed, config=config)
    absorbs = within and certify_le(additive_term(form), printed - recomputed, config=config)
    close = certify_le(rational(995, 1000) * printed, recomputed, config=config)
    interval = certified_eval(recomputed, config=config)
    return CoefficientCheck(form, interval, printed, within, absorbs, close)
