import pytest

from concatprover.realexpr import (ALPHA, BETA, Abs, Add, Integer, LN10, LOG_ALPHA, Log10, Neg, ParseError, SQRT5,
                                   parse, rational, sqrt)
from concatprover.contfrac import TAU, TAU_INVERSE
from concatprover.prover import fib_lucas_mu, lucas_fib_mu, SQRT5_MU

TREES = [
    Integer(0), Integer(-17), ALPHA, BETA, SQRT5, sqrt(7), LN10, TAU, TAU_INVERSE, SQRT5_MU,
    rational(241, 10) * Integer(10) ** 9, Log10(ALPHA ** -3), Abs(Neg(LOG_ALPHA)),
    fib_lucas_mu(50, 20), lucas_fib_mu(44, 27),
]


def test_round_trip():
    for e in TREES:
        assert parse(str(e)) == e, "parse(str(e)) differs for %s." % e


def test_atoms():
    assert str(SQRT5) == "sqrt5", "sqrt5 has its own atom."
    assert parse("beta") == BETA, "beta is sugar for (sub 1 alpha)."
    assert parse("  (add 1 2 3) ") == Add(Add(Integer(1), Integer(2)), Integer(3)), "add folds to the left."


def test_errors():
    for text in ("", "(", "(add 1", "1 2", "(foo 1)", "(pow alpha x)", "(log 1 2)", "(sub 1)", "gamma", ")"):
        with pytest.raises(ParseError):
            parse(text)
    assert issubclass(ParseError, ValueError), "ParseError is a ValueError."
