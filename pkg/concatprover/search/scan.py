"""Exhaustive search of the concatenation equations over index boxes.

Every ``(m, k)`` pair is tested for ``n`` in the window ``m + k - 2 < n < m + k + 8``. Candidates are
filtered modulo two primes below ``2^32`` with numpy ``uint64`` arithmetic and then confirmed by exact
integer comparison, so the sieve can only lose speed, never solutions.
"""
import logging

import numpy as np

from concatprover.bigseq import FIBONACCI, table
from concatprover.linforms import Equation
from concatprover.search.records import SolutionRecord
from concatprover.util import progress

logger = logging.getLogger(__name__)

MOD1 = 4294967291
MOD2 = 4294967279

#: Exclusive offsets of ``n - (m + k)``.
WINDOW = (-2, 8)


def _residues(kind, size, mod):
    return np.array([v % mod for v in table(kind).values(size)], dtype=np.uint64)


def _powers_of_ten(size, mod):
    out = np.empty(size, dtype=np.uint64)
    out[0] = 1
    for i in range(1, size):
        out[i] = (int(out[i - 1]) * 10) % mod
    return out


class _Sieve:
    """Residue tables of ``F``, the left and right sequences and ``10^d`` for one modulus."""

    def __init__(self, equation, size, d, mod):
        self.mod = np.uint64(mod)
        self.fib = _residues(FIBONACCI.kind, size, mod)
        self.left = _residues(equation.left_kind, size, mod)
        right = _residues(equation.right_kind, size, mod)
        p10 = _powers_of_ten(int(d.max()) + 1, mod)
        self.tail = right[:len(d)]
        self.scale = p10[d]

    def admits(self, m, ks, ns):
        # 10^d left_m + right_k = F_n (mod p); both factors are below 2^32.
        rhs = (self.scale[ks] * self.left[m] % self.mod + self.tail[ks]) % self.mod
        return self.fib[ns] == rhs


def _scan(equation, m_values, k_values, window_slack=0, shift_bound=None, show_progress=False):
    equation = Equation(equation)
    k_values = np.array([k for k in k_values if not (equation is Equation.LUCAS_FIB and k == 0)], dtype=np.int64)
    m_values = list(m_values)
    if not m_values or k_values.size == 0:
        return []

    lo, hi = WINDOW[0] + 1 - window_slack, WINDOW[1] - 1 + window_slack
    size = max(m_values) + int(k_values.max()) + hi + 2
    FIBONACCI.warm(size)
    table(equation.left_kind).warm(size)
    right_table = table(equation.right_kind)
    d = np.array([len(str(right_table[k])) for k in range(int(k_values.max()) + 1)], dtype=np.int64)
    sieves = [_Sieve(equation, size, d, mod) for mod in (MOD1, MOD2)]

    records = []
    for m in progress(m_values, show_progress, desc="search eq %d" % equation.value):
        for offset in range(lo, hi + 1):
            ns = m + k_values + offset
            keep = ns >= 0
            if shift_bound is not None:
                keep &= ns - k_values <= shift_bound
            ks, ns = k_values[keep], ns[keep]
            for sieve in sieves:
                hit = sieve.admits(m, ks, ns)
                ks, ns = ks[hit], ns[hit]
            for k, n in zip(ks.tolist(), ns.tolist()):
                right = right_table[k]
                value = FIBONACCI[n]
                if value == 10 ** int(d[k]) * table(equation.left_kind)[m] + right:
                    degenerate = equation is Equation.FIB_LUCAS and m == 0
                    records.append(SolutionRecord(m, k, n, equation, int(d[k]), value, degenerate))
    records.sort(key=lambda r: (r.m, r.k, r.n))
    return records


def search_range(equation, m_max, k_max, window_slack=0, show_progress=False):
    """All solutions with ``0 <= m < m_max`` and ``0 <= k < k_max``, in ascending ``(m, k, n)`` order.

    ``window_slack`` widens the ``n`` window on both sides.
    """
    if m_max < 1 or k_max < 1:
        raise ValueError("m_max and k_max must be at least 1, got %r and %r." % (m_max, k_max))
    records = _scan(equation, range(m_max), range(k_max), window_slack, show_progress=show_progress)
    logger.info("search_range eq %d (%d, %d): %d records", Equation(equation).value, m_max, k_max, len(records))
    return records


def close_gap(equation, k_bound, m_bound, shift_bound, show_progress=False):
    """All solutions with ``k < k_bound``, ``m <= m_bound`` and ``n - k <= shift_bound``.

    Shifts excluded by a congruence are scanned as well.
    """
    if k_bound <= 0 or m_bound < 0:
        return []
    records = _scan(equation, range(m_bound + 1), range(k_bound), shift_bound=shift_bound,
                    show_progress=show_progress)
    logger.info("close_gap eq %d (k < %d, m <= %d, n - k <= %d): %d records", Equation(equation).value, k_bound,
                m_bound, shift_bound, len(records))
    return records
