from concatprover.bigseq import SeqKind, fib, lucas
from concatprover.linforms import Equation
from concatprover.prover.side import (digit_bounds_hold, lucas_between_fibonacci, lucas_identity_holds,
                                      micro_cases_hold, min_shift_holds)


def test_lucas_identity():
    assert lucas_identity_holds(1000), "L_k = F_(k+1) + F_(k-1) up to k = 1000."


def test_lucas_between_fibonacci():
    assert lucas_between_fibonacci(1000), "F_(k+1) < L_k < F_(k+2) for 3 <= k <= 1000."
    # L_2 = 3 = F_4: F_n = L_k does have solutions below k = 3.
    assert lucas(2) == fib(4) and lucas(1) == fib(2), "Small Lucas numbers are Fibonacci numbers."
    fib_values = {fib(n) for n in range(1200)}
    assert not any(lucas(k) in fib_values for k in range(3, 1000)), "No larger Lucas number is a Fibonacci number."


def test_digit_bounds():
    assert digit_bounds_hold(SeqKind.FIBONACCI, 1000), "Fibonacci digit bounds up to k = 1000."
    assert digit_bounds_hold(SeqKind.LUCAS, 1000), "Lucas digit bounds up to k = 1000."


def test_min_shift():
    assert min_shift_holds(Equation.FIB_LUCAS, 4, 300), "n - k >= 4 for F_n = F_m || L_k."
    assert min_shift_holds(Equation.LUCAS_FIB, 2, 300), "n - k >= 2 for F_n = L_m || F_k."
    assert not min_shift_holds(Equation.FIB_LUCAS, 40, 300), "The shift bound is not arbitrary."


def test_micro_cases():
    assert micro_cases_hold(Equation.FIB_LUCAS, 4, 300), "Micro cases of F_n = F_m || L_k."
    assert micro_cases_hold(Equation.LUCAS_FIB, 2, 300), "Micro cases of F_n = L_m || F_k."
