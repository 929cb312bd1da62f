import json

import pytest

from concatprover import DomainError
from concatprover.bigseq import fib
from concatprover.search import (Equation, No, SolutionRecord, Yes, is_fibonacci, records_to_table, search_range,
                                 values)


def test_is_fibonacci():
    assert is_fibonacci(0) == Yes((0,)), "F_0 = 0."
    assert is_fibonacci(1) == Yes((1, 2)), "F_1 = F_2 = 1."
    assert is_fibonacci(21) == Yes((8,)), "F_8 = 21."
    assert is_fibonacci(fib(300)) == Yes((300,)), "F_300."
    for v in (4, 6, 22, 35, fib(300) + 1):
        assert is_fibonacci(v) == No(), "%d is not a Fibonacci number." % v
    with pytest.raises(DomainError):
        is_fibonacci(-1)
    with pytest.raises(DomainError):
        is_fibonacci(2.0)


def test_record_check():
    r = SolutionRecord(4, 3, 9, Equation.FIB_LUCAS, 1, 34)
    assert r.check(), "34 = '3' '4'."
    assert r.left == 3 and r.right == 4, "F_4 = 3, L_3 = 4."
    assert not SolutionRecord(4, 3, 10, Equation.FIB_LUCAS, 1, 34).check(), "F_10 != 34."
    assert not SolutionRecord(4, 3, 9, Equation.FIB_LUCAS, 2, 34).check(), "L_3 has one digit."

    degenerate = SolutionRecord(0, 2, 4, Equation.FIB_LUCAS, 1, 3, True)
    assert degenerate.check(), "F_4 = L_2 = 3 with an empty left block."
    assert not SolutionRecord(0, 2, 4, Equation.FIB_LUCAS, 1, 3).check(), "'0' '3' is not the decimal 3."


def test_json():
    for r in search_range(Equation.FIB_LUCAS, 10, 10) + search_range(Equation.LUCAS_FIB, 10, 10):
        obj = json.loads(json.dumps(r.to_json()))
        assert SolutionRecord.from_json(obj) == r, "JSON round trip changed %s." % (r,)
        assert obj["value"] == str(r.value), "Values are stored as strings."


def test_table():
    records = search_range(Equation.FIB_LUCAS, 10, 10)
    table = records_to_table(records)
    assert table.num_rows == len(records), "One row per record."
    assert table.column_names == ["equation", "n", "m", "k", "d", "value", "degenerate"], "Wrong columns."
    assert set(table.column("value").to_pylist()) == {str(v) for v in values(records)}, "Wrong values."
    assert records_to_table([]).num_rows == 0, "Empty table."
