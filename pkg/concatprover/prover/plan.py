"""Per-theorem constants of the proof replay.

Every figure a proof step compares against (printed coefficients, printed bounds, thresholds, convergent
choices and the expected epsilon) lives here, so that a run can be repeated with altered constants and the
alteration is recorded in :attr:`ProofPlan.notes`.
"""
import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from concatprover.bigseq import SeqKind, digit_bounds_fib, digit_bounds_lucas, table
from concatprover.linforms import (Equation, FIB_LUCAS_THREE_TERM, FIB_LUCAS_TWO_TERM, LUCAS_FIB_THREE_TERM,
                                   LUCAS_FIB_TWO_TERM)
from concatprover.realexpr import ALPHA, Integer, LOG_ALPHA, SQRT5, as_expr, log


def fib_lucas_mu(m, shift):
    """``log(F_m sqrt5 / (1 - alpha^(-shift) sqrt5)) / log alpha``."""
    return log(Integer(table(SeqKind.FIBONACCI)[m]) * SQRT5 / (1 - ALPHA ** (-shift) * SQRT5)) / LOG_ALPHA


def lucas_fib_mu(m, shift):
    """``log(L_m sqrt5 / (1 - alpha^(-shift))) / log alpha``."""
    return log(Integer(table(SeqKind.LUCAS)[m]) * SQRT5 / (1 - ALPHA ** (-shift))) / LOG_ALPHA


#: ``log sqrt5 / log alpha``, the inhomogeneous term of the two-term Lucas-Fibonacci form.
SQRT5_MU = log(SQRT5) / LOG_ALPHA

#: Inhomogeneous term of the sweep grid, by family name.
MU_FAMILIES = {"fib-lucas": fib_lucas_mu, "lucas-fib": lucas_fib_mu}


@dataclass(frozen=True)
class ProofPlan:
    """Constants of one theorem.

    Bounds are integers: ``n - k < shift_bound`` and so on. ``window`` holds the exclusive offsets of
    ``n - (m + k)``. ``lemma_gap`` turns the ``m`` threshold into the exponent of the small linear form:
    ``m > m_threshold`` implies a decay exponent above ``m_threshold - lemma_gap``.
    """
    theorem: int
    equation: Equation
    solutions: frozenset
    window: tuple = (-2, 8)
    printed_window: tuple = (-2, 8)
    search_size: int = 200
    check_limit: int = 1000
    min_shift: int = 4
    micro_case_k: int = 4
    two_term_form: object = FIB_LUCAS_TWO_TERM
    three_term_form: object = FIB_LUCAS_THREE_TERM
    two_term_coefficient: object = None
    three_term_coefficient: object = None
    shift_bound: int = 8 * 10 ** 11
    small_branch_bound: int = 17 * 10 ** 11
    chain_bound: int = 7 * 10 ** 26
    refined_bound: int = 45 * 10 ** 15
    m_threshold: int = 150
    lemma_gap: int = 9
    lemma_kind: str = "legendre"
    lemma_q_index: int = None
    lemma_mu: object = None
    lemma_epsilon: Fraction = None
    lemma_w: int = None
    refined_shift: int = 158
    sweep_family: str = "fib-lucas"
    sweep_m_range: tuple = (1, 150)
    sweep_shift_start: int = 4
    sweep_q_index: int = 60
    sweep_numerator: int = 14
    sweep_epsilon: Fraction = Fraction(34, 100000)
    sweep_argmin: tuple = (50, 20)
    sweep_w: int = 170
    excluded_shifts: tuple = ()
    notes: tuple = ()

    def __post_init__(self):
        for name, form in (("two_term_coefficient", self.two_term_form),
                           ("three_term_coefficient", self.three_term_form)):
            value = getattr(self, name)
            object.__setattr__(self, name, form.printed_coefficient if value is None else as_expr(value))
        if self.sweep_family not in MU_FAMILIES:
            raise ValueError("Unknown sweep family %r." % self.sweep_family)

    @classmethod
    def for_theorem(cls, theorem):
        try:
            return _PLANS[int(theorem)]
        except (KeyError, ValueError):
            raise ValueError("theorem must be 1 or 2, got %r." % (theorem,)) from None

    def with_override(self, note, **changes):
        """Copy with ``changes`` applied and ``note`` appended to :attr:`notes`."""
        names = {f.name for f in dataclasses.fields(self)}
        unknown = set(changes) - names
        if unknown:
            raise ValueError("Unknown plan fields: " + ", ".join(sorted(unknown)))
        return dataclasses.replace(self, notes=self.notes + (note,), **changes)

    @property
    def left_kind(self):
        return self.equation.left_kind

    @property
    def right_kind(self):
        return self.equation.right_kind

    def digit_bounds(self, k):
        return digit_bounds_lucas(k) if self.right_kind is SeqKind.LUCAS else digit_bounds_fib(k)

    def mu(self, m, shift):
        return MU_FAMILIES[self.sweep_family](m, shift)

    def sweep_shifts(self, m):
        """Shifts ``n - k`` of the grid at ``m``: from ``sweep_shift_start`` to the largest the window allows."""
        return range(self.sweep_shift_start, m + self.window[1])

    @property
    def sweep_A(self):
        return Integer(self.sweep_numerator) / LOG_ALPHA

    @property
    def gap_shift_bound(self):
        """Largest ``n - k`` once ``m <= m_threshold``."""
        return self.m_threshold + self.window[1] - 1


_PLANS = {
    1: ProofPlan(theorem=1, equation=Equation.FIB_LUCAS, solutions=frozenset({1, 2, 3, 13, 21, 34})),
    2: ProofPlan(
        theorem=2, equation=Equation.LUCAS_FIB, solutions=frozenset({13, 21}),
        printed_window=(-1, 7), min_shift=2, micro_case_k=2,
        two_term_form=LUCAS_FIB_TWO_TERM, three_term_form=LUCAS_FIB_THREE_TERM,
        shift_bound=3 * 10 ** 14, small_branch_bound=10 ** 15, chain_bound=25 * 10 ** 28,
        refined_bound=46 * 10 ** 15, m_threshold=168, lemma_gap=7, lemma_kind="reduction", lemma_q_index=60,
        lemma_mu=SQRT5_MU, lemma_epsilon=Fraction(17775, 10 ** 6), lemma_w=160, refined_shift=175,
        sweep_family="lucas-fib", sweep_m_range=(0, 168), sweep_shift_start=2, sweep_q_index=91,
        sweep_numerator=8, sweep_epsilon=Fraction(109, 10 ** 6), sweep_argmin=None, sweep_w=233,
        excluded_shifts=(4, 8)),
}
