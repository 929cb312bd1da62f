import logging
import multiprocessing
from dataclasses import dataclass, field

import pyarrow as pa

from concatprover.config import resolve
from concatprover.contfrac import extend, first_denominator_exceeding
from concatprover.exceptions import PrecisionExhausted
from concatprover.reduction.lemma import epsilon_enclosure, publish_epsilon, w_bound, validate_problem
from concatprover.util import fraction_to_str, progress

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    m: int
    shift: int
    epsilon_lower: object
    status: str


@dataclass(frozen=True)
class SweepResult:
    """Outcome of a reduction over a grid of ``(m, shift)`` points sharing ``tau``, ``M``, ``A`` and ``B``.

    ``min_epsilon`` is the smallest published lower bound over the points with a certified positive epsilon
    and ``w_bound`` the bound it yields. Both are ``None`` when no point reduced.
    """
    q_index: int
    q: int
    min_epsilon: object
    argmin: object
    w_bound: object
    failures: tuple
    exhausted: tuple
    rows: tuple = field(repr=False)

    @property
    def points(self):
        return len(self.rows)

    @property
    def ok(self):
        return not self.failures and not self.exhausted

    def to_table(self):
        return pa.table({
            "m": pa.array([r.m for r in self.rows], type=pa.int64()),
            "shift": pa.array([r.shift for r in self.rows], type=pa.int64()),
            "epsilon_lower": pa.array([None if r.epsilon_lower is None else fraction_to_str(r.epsilon_lower, 12)
                                       for r in self.rows], type=pa.string()),
            "status": pa.array([r.status for r in self.rows], type=pa.string()),
        })


def _shifts(shift_range, m):
    return shift_range(m) if callable(shift_range) else shift_range


def _reduce_point(family, m, s, template, q, config):
    try:
        lo, _, _ = epsilon_enclosure(family(m, s), template.tau, q, template.M, config)
    except PrecisionExhausted:
        return SweepRow(m, s, None, "exhausted")
    if lo > 0:
        return SweepRow(m, s, publish_epsilon(lo, config.epsilon_digits), "reduced")
    return SweepRow(m, s, None, "nonpositive")


def _reduce_chunk(args):
    family, chunk, template, q, config = args
    return [_reduce_point(family, m, s, template, q, config) for m, s in chunk]


def _rows(family, points, template, q, config):
    """Rows of ``points`` in grid order, reduced in-process or on ``config.workers`` processes."""
    desc = template.label or "sweep"
    if config.workers <= 0 or len(points) <= config.sweep_chunk:
        for m, s in progress(points, config.progress, total=len(points), desc=desc):
            yield _reduce_point(family, m, s, template, q, config)
        return
    chunks = [points[i:i + config.sweep_chunk] for i in range(0, len(points), config.sweep_chunk)]
    tasks = [(family, chunk, template, q, config) for chunk in chunks]
    logger.info("sweep %s: %d chunks on %d workers", template.label, len(chunks), config.workers)
    with multiprocessing.Pool(processes=config.workers) as pool:
        # imap keeps the chunk order, so the rows come out in grid order.
        for rows in progress(pool.imap(_reduce_chunk, tasks), config.progress, total=len(chunks), desc=desc):
            yield from rows


def sweep(family, m_range, shift_range, template, skip_shifts=(), cf=None, q_index=None, config=None):
    """Reduce every point ``(m, shift)`` of a grid with one convergent.

    Args:
        family: callable ``(m, shift) -> mu`` giving the inhomogeneous term of each point. It must be a
            module-level function when ``config.workers`` is positive.
        m_range: iterable of ``m`` values.
        shift_range: iterable of shifts, or a callable of ``m`` returning one (triangular grids).
        template: :class:`ReductionProblem` supplying ``M``, ``tau``, ``A`` and ``B``. Its ``mu`` is ignored.
        skip_shifts: shifts left out of the grid, typically the ones excluded by a congruence.
        cf: expansion of ``template.tau``. Required.
        q_index: convergent to use. Defaults to the first one with ``q > 6M``.

    Points whose epsilon could not be decided at the precision cap are reported in ``exhausted`` instead of
    aborting the sweep. The result does not depend on ``config.workers``.
    """
    if cf is None:
        raise ValueError("cf (the expansion of tau) is required.")
    config = resolve(config)
    validate_problem(template, config)
    if q_index is None:
        q_index, _ = first_denominator_exceeding(cf, 6 * template.M, config)
    cf = extend(cf, q_index - cf.index_base + 1, config)
    q = cf.q(q_index)
    if q <= 6 * template.M:
        raise ValueError("Convergent %d has q = %d, which does not exceed 6M." % (q_index, q))

    skip = set(skip_shifts)
    points = [(m, s) for m in m_range for s in _shifts(shift_range, m) if s not in skip]
    logger.info("sweep %s: %d points with convergent %d", template.label, len(points), q_index)

    rows, failures, exhausted = [], [], []
    best, argmin = None, None
    for row in _rows(family, points, template, q, config):
        rows.append(row)
        if row.status == "exhausted":
            logger.warning("sweep %s: epsilon undecided at (%d, %d)", template.label, row.m, row.shift)
            exhausted.append((row.m, row.shift))
        elif row.status == "nonpositive":
            failures.append((row.m, row.shift))
        elif best is None or row.epsilon_lower < best:
            best, argmin = row.epsilon_lower, (row.m, row.shift)

    w = None if best is None else w_bound(template.A, template.B, q, best, config)
    return SweepResult(q_index, q, best, argmin, w, tuple(failures), tuple(exhausted), tuple(rows))
