from fractions import Fraction

import pytest

from concatprover import ProverConfig
from concatprover.contfrac import TAU, expand
from concatprover.prover import ProofPlan, fib_lucas_mu, lucas_fib_mu
from concatprover.realexpr import ALPHA, rational
from concatprover.reduction import ReductionProblem, sweep

import util_test


def _template(plan):
    return ReductionProblem(plan.refined_bound, TAU, 0, plan.sweep_A, ALPHA, label="theorem %d" % plan.theorem)


def _cf(plan):
    return expand(TAU, plan.sweep_q_index + 1, index_base=0, config=util_test.QUIET)


def test_small_grid_fib_lucas():
    plan = ProofPlan.for_theorem(1)
    result = sweep(fib_lucas_mu, range(48, 53), range(18, 23), _template(plan), cf=_cf(plan),
                   q_index=plan.sweep_q_index, config=util_test.QUIET)
    assert result.ok, "Every point of the grid reduces."
    assert result.points == 25, "5 x 5 grid."
    assert result.q == 2568762252997982327345614176552, "Wrong q_60."
    assert result.argmin == (50, 20), "The minimum sits at (50, 20)."
    assert Fraction(340137, 10 ** 9) < result.min_epsilon < Fraction(340138, 10 ** 9), "Wrong minimum."
    assert result.w_bound == 170, "Wrong w bound."
    assert all(r.epsilon_lower >= result.min_epsilon for r in result.rows), "min_epsilon is not the minimum."


def test_small_grid_lucas_fib():
    plan = ProofPlan.for_theorem(2)
    result = sweep(lucas_fib_mu, range(42, 47), range(25, 30), _template(plan), cf=_cf(plan),
                   q_index=plan.sweep_q_index, config=util_test.QUIET)
    assert result.ok, "Every point of the grid reduces."
    assert result.argmin == (44, 27), "The minimum sits at (44, 27)."
    assert Fraction(10984, 10 ** 8) < result.min_epsilon < Fraction(10985, 10 ** 8), "Wrong minimum."
    assert result.w_bound == 233, "Wrong w bound."


def test_excluded_shifts_fail():
    plan = ProofPlan.for_theorem(2)
    result = sweep(lucas_fib_mu, range(1, 3), plan.sweep_shifts, _template(plan), cf=_cf(plan),
                   q_index=plan.sweep_q_index, config=util_test.QUIET)
    assert set(result.failures) == {(1, 4), (2, 8)}, "Shifts 4 and 8 do not reduce, got %s." % (result.failures,)
    assert not result.ok, "A sweep with failures is not ok."

    skipped = sweep(lucas_fib_mu, range(1, 3), plan.sweep_shifts, _template(plan), skip_shifts=(4, 8),
                    cf=_cf(plan), q_index=plan.sweep_q_index, config=util_test.QUIET)
    assert skipped.ok, "The remaining points reduce."
    assert skipped.points == result.points - 4, "Shifts 4 and 8 are skipped at both m."


def test_triangular_grid():
    plan = ProofPlan.for_theorem(1)
    result = sweep(fib_lucas_mu, range(1, 4), plan.sweep_shifts, _template(plan), cf=_cf(plan),
                   q_index=plan.sweep_q_index, config=util_test.QUIET)
    expected = [(m, s) for m in range(1, 4) for s in range(4, m + 8)]
    assert [(r.m, r.shift) for r in result.rows] == expected, "Shifts run from 4 to m + 7."


def test_to_table():
    plan = ProofPlan.for_theorem(1)
    result = sweep(fib_lucas_mu, range(10, 12), range(4, 7), _template(plan), cf=_cf(plan),
                   q_index=plan.sweep_q_index, config=util_test.QUIET)
    table = result.to_table()
    assert table.num_rows == result.points, "One row per point."
    assert table.column_names == ["m", "shift", "epsilon_lower", "status"], "Wrong columns."
    assert table.column("m").to_pylist() == [10, 10, 10, 11, 11, 11], "Wrong m column."
    assert set(table.column("status").to_pylist()) == {"reduced"}, "Every point reduces."


def test_default_convergent():
    plan = ProofPlan.for_theorem(1)
    template = ReductionProblem(10 ** 6, TAU, 0, plan.sweep_A, ALPHA)
    result = sweep(lambda m, s: rational(m, s), range(1, 3), range(7, 9), template,
                   cf=expand(TAU, 20, index_base=0, config=util_test.QUIET), config=util_test.QUIET)
    assert result.q > 6 * 10 ** 6, "The first convergent above 6M is used."
    assert result.points == 4, "2 x 2 grid."


def test_sweep_arguments():
    plan = ProofPlan.for_theorem(1)
    with pytest.raises(ValueError):
        sweep(fib_lucas_mu, range(1, 2), range(4, 5), _template(plan), config=util_test.QUIET)
    with pytest.raises(ValueError):
        sweep(fib_lucas_mu, range(1, 2), range(4, 5), _template(plan), cf=_cf(plan), q_index=10,
              config=util_test.QUIET)


@pytest.mark.slow
def test_full_grid_fib_lucas():
    plan = ProofPlan.for_theorem(1)
    result = sweep(plan.mu, range(plan.sweep_m_range[0], plan.sweep_m_range[1] + 1), plan.sweep_shifts,
                   _template(plan), cf=_cf(plan), q_index=plan.sweep_q_index, config=util_test.QUIET)
    assert result.ok, "The whole grid reduces."
    assert result.points == 11925, "Wrong grid size."
    assert result.argmin == (50, 20), "Wrong argmin."
    assert result.w_bound == 170, "Wrong w bound."


@pytest.mark.slow
def test_full_grid_lucas_fib():
    plan = ProofPlan.for_theorem(2)
    result = sweep(plan.mu, range(plan.sweep_m_range[0], plan.sweep_m_range[1] + 1), plan.sweep_shifts,
                   _template(plan), skip_shifts=plan.excluded_shifts, cf=_cf(plan), q_index=plan.sweep_q_index,
                   config=util_test.QUIET)
    assert result.ok, "The grid without shifts 4 and 8 reduces."
    assert result.points == 14873, "Wrong grid size."
    assert result.argmin == (44, 27), "Wrong argmin."
    assert result.w_bound == 233, "Wrong w bound."


def test_workers_match_in_process():
    plan = ProofPlan.for_theorem(1)
    grid = (fib_lucas_mu, range(46, 53), range(16, 23), _template(plan))
    serial = sweep(*grid, cf=_cf(plan), q_index=plan.sweep_q_index, config=util_test.QUIET)
    pooled = sweep(*grid, cf=_cf(plan), q_index=plan.sweep_q_index,
                   config=ProverConfig(progress=False, workers=2, sweep_chunk=5))
    assert pooled.rows == serial.rows, "Rows do not depend on the number of workers."
    assert (pooled.min_epsilon, pooled.argmin, pooled.w_bound) == (serial.min_epsilon, serial.argmin,
                                                                   serial.w_bound), "Same minimum."


def test_worker_settings():
    with pytest.raises(ValueError):
        ProverConfig(workers=-1)
    with pytest.raises(ValueError):
        ProverConfig(sweep_chunk=0)
