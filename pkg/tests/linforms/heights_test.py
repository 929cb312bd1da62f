from fractions import Fraction

import numpy as np
import pytest

from concatprover import UnsupportedElement
from concatprover.bigseq import SeqKind
from concatprover.linforms import (ALPHA, GOLDEN, ROOT5, Difference, Product, QuadraticNumber, Quotient, Rat, SQRT5,
                                   SeqTerm, Sum, as_algebraic, exact_height, height, mahler_measure)
from concatprover.realexpr import LN10, LOG_ALPHA, certify_le, eval, log


def test_quadratic_arithmetic():
    assert GOLDEN * GOLDEN == GOLDEN + 1, "alpha^2 = alpha + 1."
    assert GOLDEN.norm() == -1, "N(alpha) = -1."
    assert GOLDEN * GOLDEN.conjugate() == QuadraticNumber(-1), "alpha * beta = -1."
    assert GOLDEN ** -1 == GOLDEN - 1, "1/alpha = alpha - 1."
    assert ROOT5 * ROOT5 == QuadraticNumber(5), "sqrt5^2 = 5."
    assert (GOLDEN ** 10 + GOLDEN.conjugate() ** 10) == QuadraticNumber(123), "L_10 = 123."
    with pytest.raises(ZeroDivisionError):
        QuadraticNumber(0).inverse()


def test_quadratic_order():
    assert GOLDEN > QuadraticNumber(Fraction(161, 100)) and GOLDEN < QuadraticNumber(Fraction(162, 100)), \
        "1.61 < alpha < 1.62."
    assert (1 - GOLDEN).sign() == -1, "beta < 0."
    assert QuadraticNumber(Fraction(9, 4), -1).sign() == 1, "9/4 > sqrt5."
    assert abs(QuadraticNumber(2, -1)) == QuadraticNumber(-2, 1), "|2 - sqrt5| = sqrt5 - 2."


def test_minimal_polynomial():
    assert GOLDEN.minimal_polynomial() == (1, -1, -1), "alpha is a root of x^2 - x - 1."
    assert ROOT5.minimal_polynomial() == (1, 0, -5), "sqrt5 is a root of x^2 - 5."
    assert QuadraticNumber(Fraction(-3, 4)).minimal_polynomial() == (4, 3), "-3/4 is a root of 4x + 3."
    half = QuadraticNumber(Fraction(1, 2), Fraction(1, 2)) / 2
    assert half.minimal_polynomial() == (4, -2, -1), "alpha/2 is a root of 4x^2 - 2x - 1."


def test_mahler_measure():
    assert mahler_measure(GOLDEN) == GOLDEN, "M(alpha) = alpha."
    assert mahler_measure(ROOT5) == QuadraticNumber(5), "M(sqrt5) = 5."
    assert mahler_measure(Fraction(3, 4)) == QuadraticNumber(4), "M(3/4) = 4."


def test_rule_heights():
    assert height(ALPHA).value == LOG_ALPHA / 2, "h(alpha) = log(alpha)/2."
    assert height(Rat(10)).value == LN10, "h(10) = log 10."
    assert height(Rat(-3, 7)).value == log(7), "h(-3/7) = log 7."
    assert height(ALPHA ** 3).value == 3 * (LOG_ALPHA / 2), "h(x^s) = |s| h(x)."
    bound = height(SeqTerm(SeqKind.LUCAS, 10) * SQRT5 / (1 - ALPHA ** -4))
    assert len(bound.provenance) > 3, "Compound heights keep their provenance."


def test_rule_dominates_exact():
    for e in (SQRT5 / (1 - ALPHA ** -6 * SQRT5), SeqTerm(SeqKind.FIBONACCI, 12) * SQRT5 + 1,
              (ALPHA + 2) / (ALPHA - 3)):
        assert certify_le(height(e, exact=True).value, height(e).value), "Rule height below exact for %s." % e


def test_exact_height():
    iv = eval(exact_height(GOLDEN) - LOG_ALPHA / 2, 128)
    assert iv.contains(0), "The exact height of alpha is log(alpha)/2."
    assert exact_height(Fraction(5, 3)) == log(5), "h(5/3) = log 5."


def test_unsupported():
    with pytest.raises(UnsupportedElement):
        as_algebraic(1.5)
    with pytest.raises(UnsupportedElement):
        height("x")


def _random_element(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        pick = int(rng.integers(0, 4))
        if pick == 0:
            return Rat(int(rng.integers(-40, 41)) or 1, int(rng.integers(1, 40)))
        if pick == 1:
            return SeqTerm(SeqKind.FIBONACCI if rng.random() < 0.5 else SeqKind.LUCAS, int(rng.integers(1, 40)))
        return ALPHA if pick == 2 else SQRT5
    if rng.random() < 0.2:
        return _random_element(rng, depth - 1) ** int(rng.integers(-3, 4))
    combine = (Sum, Difference, Product, Quotient)[int(rng.integers(0, 4))]
    return combine(_random_element(rng, depth - 1), _random_element(rng, depth - 1))


def test_rule_height_random():
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 60:
        e = _random_element(rng, 3)
        try:
            e.value()
        except ZeroDivisionError:
            continue
        exact = eval(height(e, exact=True).value, 256)
        rule = eval(height(e).value, 256)
        assert exact.lower <= rule.upper, "Rule height of %s is below its exact height." % e
        checked += 1
