from dataclasses import dataclass

import gmpy2
import pyarrow as pa

from concatprover.bigseq import FIBONACCI, table
from concatprover.exceptions import DomainError
from concatprover.linforms import Equation


@dataclass(frozen=True)
class SolutionRecord:
    """One solution ``F_n = 10^d left_m + right_k`` of ``equation``.

    ``degenerate`` marks ``m = 0`` in the Fibonacci-Lucas equation, where ``F_0 = 0`` leaves the left block
    empty and the record reads ``F_n = L_k``.
    """
    m: int
    k: int
    n: int
    equation: Equation
    d: int
    value: int
    degenerate: bool = False

    @property
    def left(self):
        return table(self.equation.left_kind)[self.m]

    @property
    def right(self):
        return table(self.equation.right_kind)[self.k]

    def check(self):
        """Exact replay: the equation, the digit count and the decimal concatenation."""
        right = self.right
        if FIBONACCI[self.n] != self.value or len(str(right)) != self.d:
            return False
        if self.value != 10 ** self.d * self.left + right:
            return False
        prefix = "" if self.degenerate else str(self.left)
        return str(self.value) == prefix + str(right)

    def to_json(self):
        return {"equation": self.equation.value, "n": self.n, "m": self.m, "k": self.k, "d": self.d,
                "value": str(self.value), "degenerate": self.degenerate}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["m"]), int(obj["k"]), int(obj["n"]), Equation(int(obj["equation"])), int(obj["d"]),
                   int(obj["value"]), bool(obj.get("degenerate", False)))


@dataclass(frozen=True)
class Yes:
    indices: tuple


@dataclass(frozen=True)
class No:
    pass


def is_fibonacci(v):
    """``Yes(indices)`` with every ``n`` such that ``F_n = v``, else ``No()``.

    ``v`` is a Fibonacci number iff ``5v^2 + 4`` or ``5v^2 - 4`` is a perfect square.
    """
    if not isinstance(v, int) or v < 0:
        raise DomainError("is_fibonacci needs a non-negative integer, got %r." % (v,))
    w = 5 * v * v
    if not (gmpy2.is_square(w + 4) or (w >= 4 and gmpy2.is_square(w - 4))):
        return No()
    indices, n = [], 0
    while FIBONACCI[n] <= v:
        if FIBONACCI[n] == v:
            indices.append(n)
        n += 1
    return Yes(tuple(indices))


def values(records):
    """The set of solution values."""
    return frozenset(r.value for r in records)


def records_to_table(records):
    records = list(records)
    return pa.table({
        "equation": pa.array([r.equation.value for r in records], type=pa.int8()),
        "n": pa.array([r.n for r in records], type=pa.int64()),
        "m": pa.array([r.m for r in records], type=pa.int64()),
        "k": pa.array([r.k for r in records], type=pa.int64()),
        "d": pa.array([r.d for r in records], type=pa.int64()),
        "value": pa.array([str(r.value) for r in records], type=pa.string()),
        "degenerate": pa.array([r.degenerate for r in records], type=pa.bool_()),
    })
