from dataclasses import dataclass
from fractions import Fraction

from concatprover.exceptions import DomainError


@dataclass(frozen=True)
class DigitCount:
    d: int

    def __int__(self):
        return self.d

    def __eq__(self, other):
        if isinstance(other, int):
            return self.d == other
        return isinstance(other, DigitCount) and self.d == other.d

    def __hash__(self):
        return hash(self.d)


def digit_count(v):
    """Number of base-10 digits ``d`` with ``10^(d-1) <= v < 10^d``."""
    if not isinstance(v, int) or v < 1:
        raise DomainError("digit_count needs a positive integer, got %r." % (v,))
    return DigitCount(len(str(v)))


def digit_bounds_lucas(k):
    """Open interval ``((k-1)/5, (k+6)/4)`` containing the digit count of ``L_k``."""
    if k < 0:
        raise DomainError("Lucas index must be non-negative.")
    return Fraction(k - 1, 5), Fraction(k + 6, 4)


def digit_bounds_fib(k):
    """Open interval ``((k-2)/5, (k+3)/4)`` containing the digit count of ``F_k``."""
    if k < 1:
        raise DomainError("Fibonacci index must be at least 1.")
    return Fraction(k - 2, 5), Fraction(k + 3, 4)
