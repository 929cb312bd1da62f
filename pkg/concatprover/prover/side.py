"""Exact checks behind the side conditions of the bound chain."""
from concatprover.bigseq import SeqKind, digit_bounds_fib, digit_bounds_lucas, digit_count, fib, lucas, table
from concatprover.linforms import Equation


def lucas_identity_holds(k_max):
    """``L_k = F_(k+1) + F_(k-1)`` for ``1 <= k <= k_max``."""
    return all(lucas(k) == fib(k + 1) + fib(k - 1) for k in range(1, k_max + 1))


def digit_bounds_hold(kind, k_max):
    """The digit count of the ``k``-th term lies strictly inside its digit bounds for every ``k <= k_max``.

    The Fibonacci bounds start at ``k = 2``: ``F_1 = 1`` meets the upper bound ``(k+3)/4 = 1``.
    """
    kind = SeqKind(kind)
    bounds, start = (digit_bounds_lucas, 0) if kind is SeqKind.LUCAS else (digit_bounds_fib, 2)
    for k in range(start, k_max + 1):
        lo, hi = bounds(k)
        if not lo < int(digit_count(table(kind)[k])) < hi:
            return False
    return True


def min_shift_holds(equation, min_shift, k_max):
    """No solution has ``n - k < min_shift``, replayed for ``k <= k_max``.

    With ``m >= 1`` the value is at least ``10^d + right_k``, which exceeds ``F_(k+s)`` for every
    ``s < min_shift``.
    """
    equation = Equation(equation)
    right = table(equation.right_kind)
    start = 0 if equation is Equation.FIB_LUCAS else 1
    for k in range(start, k_max + 1):
        floor_value = 10 ** int(digit_count(right[k])) + right[k]
        if any(fib(k + s) >= floor_value for s in range(min_shift)):
            return False
    return True


def micro_cases_hold(equation, k_max, m_max):
    """For ``k <= k_max`` the right part has one digit and ``n <= m`` is impossible.

    This settles ``B = max(d, n - m) = n - m`` when ``n - m < d`` would force ``k <= k_max``.
    """
    equation = Equation(equation)
    left, right = table(equation.left_kind), table(equation.right_kind)
    start = 0 if equation is Equation.FIB_LUCAS else 1
    for k in range(start, k_max + 1):
        if int(digit_count(right[k])) != 1:
            return False
        for m in range(m_max + 1):
            value = 10 * left[m] + right[k]
            if any(fib(n) == value for n in range(max(0, m - 2), m + 1)):
                return False
    return True


def outside_window(records, window):
    """Records whose ``n - (m + k)`` is not strictly inside ``window``."""
    lo, hi = window
    return [r for r in records if not lo < r.n - r.m - r.k < hi]


def lucas_between_fibonacci(k_max):
    """``F_(k+1) < L_k < F_(k+2)`` for ``3 <= k <= k_max``, replayed exactly.

    ``L_k = F_(k+1) + F_(k-1)`` with ``0 < F_(k-1) < F_k`` gives these bounds for every ``k >= 3``, so
    ``F_n = L_k`` (the ``m = 0`` reading of ``F_n = F_m || L_k``) has no solution with ``k >= 3``.
    """
    return all(fib(k + 1) < lucas(k) < fib(k + 2) for k in range(3, k_max + 1))
