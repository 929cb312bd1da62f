from fractions import Fraction

import pytest

from concatprover.prover import Contradiction, NoContradiction, ProofPlan, m_bound_argument
from concatprover.prover.mbound import small_form_condition
from concatprover.realexpr import Ordering, compare
from concatprover.reduction import Reduced

import util_test


def test_legendre_argument():
    plan = ProofPlan.for_theorem(1)
    result = m_bound_argument(7 * 10 ** 26, plan, config=util_test.QUIET)
    assert isinstance(result, Contradiction), "m > 150 contradicts n < 7e26."
    assert result.threshold == 150, "Wrong threshold."
    details = result.details
    assert details["exponent"] == 141, "The decay exponent is m - 9."
    assert details["last_index"] == 54, "q_54 is the last denominator of 1/tau below 7e26."
    assert details["amax"] >= 106, "a_37 = 106 lies in range."
    assert details["legendre_closes"] and details["amax_closes"], "Both lower bounds exceed 7e26."


def test_reduction_argument():
    plan = ProofPlan.for_theorem(2)
    result = m_bound_argument(25 * 10 ** 28, plan, config=util_test.QUIET)
    assert isinstance(result, Contradiction), "m > 168 contradicts n < 2.5e29."
    status = result.details["status"]
    assert isinstance(status, Reduced), "The reduction succeeds."
    assert status.q_index == 60, "q_60 exceeds 6 * 2.5e29."
    assert Fraction(177756, 10 ** 7) < status.epsilon_lower < Fraction(177757, 10 ** 7), "Wrong epsilon."
    assert status.w_bound == 160, "Wrong w bound."


def test_small_threshold():
    plan = ProofPlan.for_theorem(1)
    result = m_bound_argument(7 * 10 ** 26, plan, hypothesis_m=20, config=util_test.QUIET)
    assert isinstance(result, NoContradiction), "m > 20 is not contradicted below 7e26."
    result = m_bound_argument(7 * 10 ** 26, plan, hypothesis_m=10, config=util_test.QUIET)
    assert isinstance(result, NoContradiction), "3 / alpha is not below 1/2."
    assert "reason" in result.details, "The failed precondition is reported."


def test_small_form_condition():
    plan = ProofPlan.for_theorem(1)
    lhs, rhs = small_form_condition(plan, plan.m_threshold)
    assert compare(lhs, rhs, config=util_test.QUIET) is Ordering.LESS, "3 / alpha^141 < 1/2."
    lhs, rhs = small_form_condition(plan, 10)
    assert compare(lhs, rhs, config=util_test.QUIET) is Ordering.GREATER, "3 / alpha > 1/2."


def test_unknown_argument():
    plan = ProofPlan.for_theorem(1).with_override("unknown argument", lemma_kind="baker")
    with pytest.raises(ValueError):
        m_bound_argument(7 * 10 ** 26, plan, config=util_test.QUIET)
