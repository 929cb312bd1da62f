from fractions import Fraction

import pytest

from concatprover import SideConditionViolated
from concatprover.linforms import (Equation, FIB_LUCAS_THREE_TERM, FIB_LUCAS_TWO_TERM, LINEAR_FORMS,
                                   LUCAS_FIB_THREE_TERM, LUCAS_FIB_TWO_TERM, check_coefficient, lambda_instance,
                                   linear_form, matveev_coefficient, matveev_constant, matveev_exponent, replay_witness,
                                   verify_instance)
from concatprover.realexpr import Ordering, certified_eval, compare

EXPECTED_COEFFICIENTS = {
    FIB_LUCAS_TWO_TERM: (Fraction(240087, 10 ** 5) * 10 ** 10, Fraction(240088, 10 ** 5) * 10 ** 10),
    FIB_LUCAS_THREE_TERM: (Fraction(223291, 10 ** 5) * 10 ** 12, Fraction(223292, 10 ** 5) * 10 ** 12),
    LUCAS_FIB_TWO_TERM: (Fraction(718746, 10 ** 5) * 10 ** 12, Fraction(718747, 10 ** 5) * 10 ** 12),
    LUCAS_FIB_THREE_TERM: (Fraction(223291, 10 ** 5) * 10 ** 12, Fraction(223292, 10 ** 5) * 10 ** 12),
}


def test_lookup():
    for form in LINEAR_FORMS:
        assert linear_form(form.alias) is form, "Lookup by alias failed for %s." % form
        assert linear_form(str(form.alias)) is form, "Lookup by alias string failed for %s." % form
        assert linear_form(form.name.lower()) is form, "Lookup by name failed for %s." % form
    with pytest.raises(ValueError):
        linear_form(5)
    with pytest.raises(ValueError):
        linear_form("LAMBDA_9")


def test_coefficients():
    for form, (lo, hi) in EXPECTED_COEFFICIENTS.items():
        iv = certified_eval(matveev_coefficient(form))
        assert lo < iv.lower and iv.upper < hi, "Recomputed coefficient of %s out of range." % form


def test_printed_coefficients():
    for form in LINEAR_FORMS:
        check = check_coefficient(form)
        assert check.ok, "The printed coefficient of %s must absorb the recomputed one." % form
        assert check.within_tolerance, "The printed coefficient of %s is within 0.5%%." % form


def test_tampered_coefficient():
    check = check_coefficient(FIB_LUCAS_TWO_TERM, 10 ** 6)
    assert not check.within_printed and not check.ok, "1e6 is far below the recomputed coefficient."


def test_instances_at_solutions():
    # 34 = "3" "4": F_9 = 10 F_4 + L_3.  13 = "1" "3": F_7 = 10 L_1 + F_4.
    for form, (n, m, k) in ((FIB_LUCAS_TWO_TERM, (9, 4, 3)), (FIB_LUCAS_THREE_TERM, (9, 4, 3)),
                            (LUCAS_FIB_TWO_TERM, (7, 1, 4)), (LUCAS_FIB_THREE_TERM, (7, 1, 4))):
        inst = lambda_instance(form, n, m, k)
        assert inst.d == 1 and inst.t == form.t, "Wrong instance data for %s." % form
        checks = verify_instance(inst)
        assert all(checks.values()), "Hypotheses fail for %s: %s." % (form, checks)
        assert replay_witness(inst), "Nonvanishing witness fails for %s." % form


def test_instance_exponents():
    inst = lambda_instance(FIB_LUCAS_THREE_TERM, 30, 12, 17)
    assert inst.exponents == (inst.d, -30, 1), "Three-term forms take B = n."
    assert inst.B == 30, "Wrong B."
    inst = lambda_instance(FIB_LUCAS_TWO_TERM, 30, 12, 17)
    assert inst.exponents == (inst.d, -18) and inst.B == 18, "Two-term forms take B = n - m."
    assert len(inst.A) == 2 and len(lambda_instance(FIB_LUCAS_THREE_TERM, 30, 12, 17).A) == 3, \
        "The parametric height is added for three-term forms."
    assert str(matveev_exponent(inst)).startswith("(mul"), "The exponent is a product expression."


def test_side_conditions():
    with pytest.raises(SideConditionViolated):
        lambda_instance(FIB_LUCAS_THREE_TERM, 10, 5, 7)
    with pytest.raises(SideConditionViolated):
        lambda_instance(FIB_LUCAS_THREE_TERM, 20, 0, 10)
    with pytest.raises(SideConditionViolated):
        lambda_instance(LUCAS_FIB_THREE_TERM, 5, 3, 4)
    with pytest.raises(SideConditionViolated):
        lambda_instance(LUCAS_FIB_TWO_TERM, 5, 1, 0)
    with pytest.raises(SideConditionViolated):
        lambda_instance(FIB_LUCAS_TWO_TERM, 40, 39, 30)
    with pytest.raises(SideConditionViolated):
        lambda_instance(FIB_LUCAS_TWO_TERM, -1, 0, 0)


def test_equations():
    assert FIB_LUCAS_TWO_TERM.equation is Equation.FIB_LUCAS, "Wrong equation."
    assert LUCAS_FIB_THREE_TERM.equation is Equation.LUCAS_FIB, "Wrong equation."
    assert FIB_LUCAS_THREE_TERM.a3(4) is not None and FIB_LUCAS_THREE_TERM.parametric, "A_3 is parametric."
    with pytest.raises(ValueError):
        FIB_LUCAS_TWO_TERM.a3(4)


def test_exponent_monotone():
    for form in (FIB_LUCAS_TWO_TERM, FIB_LUCAS_THREE_TERM, LUCAS_FIB_TWO_TERM, LUCAS_FIB_THREE_TERM):
        previous = None
        for n in range(25, 200, 9):
            current = matveev_exponent(lambda_instance(form, n, 12, 17))
            if previous is not None:
                assert compare(previous, current) is Ordering.LESS, "%s: the exponent drops at n = %d." % (form, n)
            previous = current
    assert compare(matveev_constant(2), matveev_constant(3)) is Ordering.LESS, "C(t) grows with t."
