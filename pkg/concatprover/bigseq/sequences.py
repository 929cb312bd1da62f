import enum
import threading
from dataclasses import dataclass

from concatprover.exceptions import DomainError


class SeqKind(enum.Enum):
    FIBONACCI = "F"
    LUCAS = "L"

    def __str__(self):
        return self.value


class SequenceTable:
    """Memo table of a sequence satisfying ``u(n+2) = u(n+1) + u(n)``.

    Reads of computed entries take no lock. Extension is serialized by a lock and only appends, so a
    reader never observes a partially written entry.
    """

    def __init__(self, kind, seeds):
        self.kind = kind
        self._values = list(seeds)
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def warm(self, n):
        """Make sure indices ``0..n`` are available."""
        if n < len(self._values):
            return
        with self._lock:
            values = self._values
            a, b = values[-2], values[-1]
            for _ in range(len(values), n + 1):
                a, b = b, a + b
                values.append(b)

    def __getitem__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("Sequence index must be a non-negative integer, got %r." % (n,))
        if n >= len(self._values):
            self.warm(n)
        return self._values[n]

    def values(self, n):
        """Tuple with the values at indices ``0..n-1``."""
        if n > 0:
            self.warm(n - 1)
        return tuple(self._values[:n])


FIBONACCI = SequenceTable(SeqKind.FIBONACCI, (0, 1))
LUCAS = SequenceTable(SeqKind.LUCAS, (2, 1))


def table(kind):
    return FIBONACCI if SeqKind(kind) is SeqKind.FIBONACCI else LUCAS


def fib(n):
    """Exact Fibonacci number ``F_n`` with ``F_0 = 0``, ``F_1 = 1``."""
    return FIBONACCI[n]


def lucas(k):
    """Exact Lucas number ``L_k`` with ``L_0 = 2``, ``L_1 = 1``."""
    return LUCAS[k]


@dataclass(frozen=True)
class SeqValue:
    kind: SeqKind
    index: int
    value: int

    @classmethod
    def of(cls, kind, index):
        kind = SeqKind(kind)
        return cls(kind, index, table(kind)[index])

    def check_recurrence(self):
        t = table(self.kind)
        if self.index < 2:
            return self.value == t[self.index]
        return self.value == t[self.index - 1] + t[self.index - 2]

    def check_binet_bounds(self, bits=128):
        """Certify ``a^(n-2) <= F_n <= a^(n-1)`` (n >= 1) or ``a^(n-1) <= L_n <= 2 a^n`` with intervals."""
        from concatprover.realexpr import ALPHA, Integer, certify_le

        n = self.index
        v = Integer(self.value)
        if self.kind is SeqKind.FIBONACCI:
            if n < 1:
                raise DomainError("Binet bounds for Fibonacci numbers need n >= 1.")
            lower, upper = ALPHA ** (n - 2), ALPHA ** (n - 1)
        else:
            lower, upper = ALPHA ** (n - 1), 2 * ALPHA ** n

        # F_1 = a^0, F_2 = a^0 and L_1 = a^0 meet their bounds with equality.
        return certify_le(lower, v, max_bits=bits) and certify_le(v, upper, max_bits=bits)
