"""Independent replay of a certificate.

The checker reads only the certificate: every claim is re-derived from the data it carries, without the
proof plan. Checkers are registered per claim kind; a claim of unknown kind fails. The values the steps hand on to each
other are checked by :mod:`concatprover.prover.links`.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from concatprover.bigseq import residue_class_excludes
from concatprover.config import resolve
from concatprover.contfrac import expand, extend, max_partial_quotient
from concatprover.exceptions import ConcatProverError
from concatprover.linforms import (BoundInequality, certifies, check_coefficient, lambda_instance, linear_form,
                                   verify_instance)
from concatprover.prover.certificate import Failed, dec_fraction, dec_int
from concatprover.prover.links import check_links
from concatprover.prover.mbound import Contradiction, m_bound_argument
from concatprover.prover.plan import MU_FAMILIES, ProofPlan
from concatprover.prover.side import (digit_bounds_hold, lucas_between_fibonacci, lucas_identity_holds,
                                      micro_cases_hold, min_shift_holds, outside_window)
from concatprover.realexpr import Ordering, certify_le, compare, parse
from concatprover.reduction import epsilon_enclosure, publish_epsilon, w_bound
from concatprover.search import Equation, close_gap, search_range, values

logger = logging.getLogger(__name__)

#: Steps a complete certificate must carry.
REQUIRED_STEPS = ("initial-search", "side-conditions", "matveev-coefficients", "bound-chain", "m-bound-argument",
                  "refined-bound", "congruence-exclusions", "reduction-sweep", "k-bound", "gap-closure")

_CHECKERS = {}


def checker(kind):
    def register(fn):
        _CHECKERS[kind] = fn
        return fn
    return register


@dataclass(frozen=True)
class CheckFailure:
    step: str
    kind: str
    details: str


@dataclass
class CheckReport:
    """``conclusion`` is the solution set re-derived from the claims, ``None`` when the replay failed."""
    theorem: int
    failures: list = field(default_factory=list)
    claims_checked: int = 0
    conclusion: object = None

    @property
    def ok(self):
        return not self.failures


def _search_values(claim, slack=0):
    eq = Equation(claim["equation"])
    size = claim.get("size")
    m_max = claim.get("m_max", size)
    k_max = claim.get("k_max", size)
    return search_range(eq, m_max, k_max, window_slack=slack)


def _claimed_values(claim):
    return frozenset(dec_int(v) for v in claim["values"])


@checker("search")
def _check_search(claim, ctx):
    return values(_search_values(claim, claim.get("window_slack", 0))) == _claimed_values(claim)


@checker("lucas-identity")
def _check_lucas_identity(claim, ctx):
    return lucas_identity_holds(claim["k_max"])


@checker("digit-bounds")
def _check_digit_bounds(claim, ctx):
    return digit_bounds_hold(claim["sequence"], claim["k_max"])


@checker("min-shift")
def _check_min_shift(claim, ctx):
    return min_shift_holds(claim["equation"], claim["min_shift"], claim["k_max"])


@checker("micro-cases")
def _check_micro_cases(claim, ctx):
    return micro_cases_hold(claim["equation"], claim["k_max"], claim["m_max"])


@checker("lucas-gap")
def _check_lucas_gap(claim, ctx):
    return lucas_between_fibonacci(claim["k_max"])


@checker("window")
def _check_window(claim, ctx):
    widened = _search_values(claim, claim["slack"])
    return widened == _search_values(claim) and len(widened) == claim["count"]


@checker("printed-window")
def _check_printed_window(claim, ctx):
    missed = outside_window(_search_values(claim), tuple(claim["window"]))
    return [[r.n, r.m, r.k] for r in missed] == claim["outside"]


@checker("coefficient")
def _check_coefficient(claim, ctx):
    return check_coefficient(claim["form"], parse(claim["printed"]), ctx.config).ok


@checker("linear-form")
def _check_linear_form(claim, ctx):
    inst = lambda_instance(claim["form"], claim["n"], claim["m"], claim["k"])
    return all(verify_instance(inst, ctx.config).values())


@checker("solved-bound")
def _check_solved_bound(claim, ctx):
    b = BoundInequality(parse(claim["offset"]), tuple(parse(c) for c in claim["coefficients"]),
                        Fraction(claim["y_scale"]), Fraction(claim["y_offset"]), claim.get("label", ""))
    return certifies(b, dec_int(claim["value"]), ctx.config)


@checker("propagated-bound")
def _check_propagated_bound(claim, ctx):
    tight = Fraction(claim["scale"]) * dec_int(claim["x"]) + Fraction(claim["offset"])
    return tight <= dec_int(claim["value"])


@checker("inequality")
def _check_inequality(claim, ctx):
    lhs, rhs = parse(claim["lhs"]), parse(claim["rhs"])
    if claim.get("strict", True):
        return compare(lhs, rhs, config=ctx.config) is Ordering.LESS
    return certify_le(lhs, rhs, config=ctx.config)


@checker("max-partial-quotient")
def _check_max_partial_quotient(claim, ctx):
    cf = expand(parse(claim["target"]), 64, index_base=claim["index_base"], config=ctx.config)
    found = max_partial_quotient(cf, dec_int(claim["max_denominator"]), ctx.config)
    if found is None:
        return False
    index, a_max, last = found
    cf = extend(cf, last + 2 - cf.index_base, ctx.config)
    if cf.quotient(last + 1) > a_max:
        index, a_max = last + 1, cf.quotient(last + 1)
    return (index, a_max, last) == (claim["index"], claim["value"], claim["last_index"])


def _convergent(claim, ctx):
    tau = parse(claim["tau"])
    q_index = claim["q_index"]
    cf = expand(tau, q_index - claim["index_base"] + 1, index_base=claim["index_base"], config=ctx.config)
    q, M = cf.q(q_index), dec_int(claim["M"])
    if q != dec_int(claim["q"]) or q <= 6 * M:
        return None
    return tau, q, M


@checker("reduction")
def _check_reduction(claim, ctx):
    found = _convergent(claim, ctx)
    if found is None:
        return False
    tau, q, M = found
    eps = dec_fraction(claim["epsilon"])
    lo, _, _ = epsilon_enclosure(parse(claim["mu"]), tau, q, M, ctx.config)
    if not (eps > 0 and lo >= eps):
        return False
    w = w_bound(parse(claim["A"]), parse(claim["B"]), q, eps, ctx.config)
    return w == claim["w_bound"] and w <= claim["w_max"]


@checker("m-bound")
def _check_m_bound(claim, ctx):
    form = linear_form(claim["form"])
    mu = claim.get("mu")
    plan = ProofPlan(theorem=0, equation=form.equation, solutions=frozenset(), two_term_form=form,
                     m_threshold=claim["threshold"], lemma_gap=claim["gap"], lemma_kind=claim["lemma"],
                     lemma_mu=None if mu is None else parse(mu), lemma_q_index=claim.get("q_index"))
    result = m_bound_argument(dec_int(claim["n_upper"]), plan, config=ctx.config)
    return isinstance(result, Contradiction)


@checker("shift-cover")
def _check_shift_cover(claim, ctx):
    return claim["shift"] >= claim["m_bound"] + claim["window_hi"] - 1


@checker("congruence")
def _check_congruence(claim, ctx):
    return residue_class_excludes(claim["shift"], claim["modulus"])


def _grid(claim):
    lo, hi = claim["m_range"]
    skip = set(claim["skip"])
    return [(m, s) for m in range(lo, hi + 1) for s in range(claim["shift_start"], m + claim["window_hi"])
            if s not in skip]


@checker("sweep")
def _check_sweep(claim, ctx):
    if claim["failures"] or claim["min_epsilon"] is None:
        return False
    found = _convergent(claim, ctx)
    if found is None:
        return False
    tau, q, M = found
    family = MU_FAMILIES[claim["family"]]
    grid = _grid(claim)
    if len(grid) != claim["points"]:
        return False
    argmin = tuple(claim["argmin"])
    claimed = dec_fraction(claim["min_epsilon"])
    digits = ctx.config.epsilon_digits

    if ctx.sample is None or ctx.sample >= len(grid):
        points = grid
    else:
        picks = ctx.rng.choice(len(grid), size=ctx.sample, replace=False)
        points = sorted({grid[i] for i in picks} | {argmin})
    logger.info("sweep check: %d of %d points", len(points), len(grid))

    best, best_at = None, None
    for m, s in points:
        lo, _, _ = epsilon_enclosure(family(m, s), tau, q, M, ctx.config)
        if lo <= 0:
            return False
        eps = publish_epsilon(lo, digits)
        if eps < claimed:
            return False
        if best is None or eps < best:
            best, best_at = eps, (m, s)
    if best != claimed or best_at != argmin:
        return False
    return w_bound(parse(claim["A"]), parse(claim["B"]), q, claimed, ctx.config) == claim["w_bound"]


@checker("k-bound")
def _check_k_bound(claim, ctx):
    return claim["k_bound"] <= claim["search_size"] and claim["m_bound"] < claim["search_size"]


@checker("gap-closure")
def _check_gap_closure(claim, ctx):
    records = close_gap(Equation(claim["equation"]), claim["k_bound"], claim["m_bound"], claim["shift_bound"])
    return values(records) == _claimed_values(claim)


@dataclass
class _Context:
    config: object
    sample: object
    rng: object


def check(certificate, sample=None, seed=0, config=None):
    """Re-verify every claim of ``certificate`` and re-derive its conclusion.

    Args:
        sample: when set, the reduction sweep is replayed on this many random grid points plus its reported
            minimum instead of the whole grid.
        seed: seed of the sample.

    Returns:
        :class:`CheckReport`. A claim that raises counts as a failure.
    """
    ctx = _Context(resolve(config), sample, np.random.default_rng(seed))
    report = CheckReport(certificate.theorem)
    labels = [s.label for s in certificate.steps]
    for label in REQUIRED_STEPS:
        if label not in labels:
            report.failures.append(CheckFailure(label, "-", "step missing"))

    found = frozenset()
    for step in certificate.steps:
        if isinstance(step.status, Failed):
            report.failures.append(CheckFailure(step.label, "-", "step reported as failed"))
        for claim in step.claims:
            kind = claim.get("kind")
            fn = _CHECKERS.get(kind)
            report.claims_checked += 1
            if fn is None:
                report.failures.append(CheckFailure(step.label, str(kind), "unknown claim kind"))
                continue
            try:
                ok = fn(claim, ctx)
            except (ConcatProverError, KeyError, TypeError, ValueError) as e:
                ok = False
                logger.warning("%s/%s raised %s: %s", step.label, kind, type(e).__name__, e)
            if not ok:
                report.failures.append(CheckFailure(step.label, kind, "claim does not replay"))
            elif kind in ("search", "gap-closure"):
                found |= _claimed_values(claim)

    for label, details in check_links(certificate):
        report.failures.append(CheckFailure(label, "link", details))

    if certificate.conclusion is None:
        report.failures.append(CheckFailure("conclusion", "-", "certificate has no conclusion"))
    elif found != certificate.conclusion:
        report.failures.append(CheckFailure("conclusion", "-", "conclusion %s differs from the replayed %s" % (
            sorted(certificate.conclusion), sorted(found))))
    if report.ok:
        report.conclusion = found
    logger.info("check theorem %d: %d claims, %d failures", certificate.theorem, report.claims_checked,
                len(report.failures))
    return report
