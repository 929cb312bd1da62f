import gmpy2
import pytest

from concatprover import DomainError
from concatprover.bigseq import (FIBONACCI, LUCAS, SeqKind, SeqValue, SequenceTable, fib, lucas, table)

import util_test


def test_seed_values():
    assert [fib(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13], "Wrong Fibonacci seeds."
    assert [lucas(k) for k in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29], "Wrong Lucas seeds."


def test_against_gmpy2():
    for n in util_test.random_indices(50, 2000, seed=1) + [0, 1, 2, 1000]:
        assert fib(n) == int(gmpy2.fib(n)), "F_%d differs from gmpy2." % n
        assert lucas(n) == int(gmpy2.lucas(n)), "L_%d differs from gmpy2." % n


def test_against_matrix_power():
    for n in (0, 1, 5, 89, 500, 1234):
        assert fib(n) == util_test.fib_matrix(n), "F_%d differs from the matrix power." % n


def test_lucas_identity():
    for k in range(1, 1001):
        assert lucas(k) == fib(k + 1) + fib(k - 1), "L_k = F_(k+1) + F_(k-1) fails at %d." % k


def test_negative_index():
    with pytest.raises(DomainError):
        fib(-1)
    with pytest.raises(DomainError):
        lucas(-3)


def test_table():
    assert table(SeqKind.FIBONACCI) is FIBONACCI, "Wrong table."
    assert table("L") is LUCAS, "Wrong table."
    t = SequenceTable(SeqKind.FIBONACCI, (0, 1))
    assert len(t) == 2, "A new table holds its seeds only."
    t.warm(20)
    assert len(t) == 21, "warm(n) must make index n available."
    assert t.values(5) == (0, 1, 1, 2, 3), "Wrong prefix."
    assert t[30] == 832040, "Wrong F_30."


def test_seq_value():
    for kind in SeqKind:
        for n in range(1, 60):
            v = SeqValue.of(kind, n)
            assert v.check_recurrence(), "Recurrence fails for %s_%d." % (kind, n)
            assert v.check_binet_bounds(), "Binet bounds fail for %s_%d." % (kind, n)
    assert SeqValue.of("L", 0).check_binet_bounds(), "L_0 = 2 lies between alpha^-1 and 2."
    assert not SeqValue(SeqKind.FIBONACCI, 10, 56).check_recurrence(), "A wrong value must not pass."
    with pytest.raises(DomainError):
        SeqValue.of("F", 0).check_binet_bounds()


def test_binet_bounds_up_to_1000():
    indices = sorted(set(util_test.random_indices(40, 1000, seed=5)) | {0, 1, 2, 999, 1000})
    for n in indices:
        if n >= 1:
            assert SeqValue.of("F", n).check_binet_bounds(), "alpha^(n-2) <= F_n <= alpha^(n-1) fails at %d." % n
        assert SeqValue.of("L", n).check_binet_bounds(), "alpha^(n-1) <= L_n <= 2 alpha^n fails at %d." % n
