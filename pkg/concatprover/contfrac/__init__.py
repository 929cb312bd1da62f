from concatprover.contfrac.expansion import ContinuedFraction, convergents_of, expand, extend
from concatprover.contfrac.approx import (IsConvergent, NotClose, first_denominator_exceeding, max_partial_quotient,
                                          approximation_floor, legendre_locate)
from concatprover.realexpr import LN10, LOG_ALPHA

#: ``log 10 / log alpha``.
TAU = LN10 / LOG_ALPHA
#: ``log alpha / log 10``.
TAU_INVERSE = LOG_ALPHA / LN10

__all__ = ["ContinuedFraction", "convergents_of", "expand", "extend", "IsConvergent", "NotClose",
           "first_denominator_exceeding", "max_partial_quotient", "approximation_floor", "legendre_locate",
           "TAU", "TAU_INVERSE"]
