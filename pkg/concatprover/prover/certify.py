"""Replay of the proof of one theorem as an ordered list of certified steps."""
import logging

from concatprover.config import resolve
from concatprover.contfrac import TAU, TAU_INVERSE, expand
from concatprover.exceptions import NotExcludable, SideConditionViolated, StepFailed
from concatprover.linforms import (BoundInequality, check_coefficient, lambda_instance, propagate_bound,
                                   solve_bound, verify_instance)
from concatprover.prover.certificate import (Certificate, Discrepancy, Failed, Skipped, Step, Verified, enc_expr,
                                             enc_fraction, enc_int, environment)
from concatprover.prover.mbound import Contradiction, m_bound_argument, small_form_condition
from concatprover.prover.plan import ProofPlan
from concatprover.prover.side import (digit_bounds_hold, lucas_between_fibonacci, lucas_identity_holds,
                                      micro_cases_hold, min_shift_holds, outside_window)
from concatprover.realexpr import ALPHA, Integer
from concatprover.reduction import Reduced, ReductionProblem, exclude_by_congruence, sweep
from concatprover.search import Equation, close_gap, search_range, values

logger = logging.getLogger(__name__)

#: Window widening used to confirm that no solution lies just outside the index window.
WINDOW_SLACK = 2


def _note(step, status):
    # Failed wins over Discrepancy, which wins over Verified. Discrepancy details accumulate.
    current = step.status
    if isinstance(current, Failed):
        return
    if isinstance(status, Failed) or isinstance(current, (Verified, Skipped)):
        step.status = status
    elif isinstance(status, Discrepancy):
        step.status = Discrepancy(current.details + "; " + status.details)


def _adopt(step, solved, printed, what):
    """Adopt the printed bound when the recomputed one does not exceed it, else the recomputed one."""
    if solved.value <= printed:
        return printed
    _note(step, Discrepancy("recomputed %s bound %.2e exceeds the printed %.2e" % (what, solved.value, printed)))
    return solved.value


def _bound_claim(step, b, value, solved, role, **extra):
    step.claim("solved-bound", role=role, label=b.label, offset=enc_expr(b.offset),
               coefficients=[enc_expr(c) for c in b.coefficients], y_scale=str(b.y_scale),
               y_offset=str(b.y_offset), value=enc_int(value), tight="%.6e" % solved.tight, **extra)


def _sci(v):
    return "%.2e" % v


def _initial_search(plan, ctx, config):
    step = Step("initial-search", "exhaustive search of the small range",
                inputs={"equation": plan.equation.value, "m_max": plan.search_size, "k_max": plan.search_size})
    records = search_range(plan.equation, plan.search_size, plan.search_size, show_progress=config.progress)
    found = values(records)
    ctx["records"] = records
    step.outputs = {"values": sorted(enc_int(v) for v in found), "records": len(records),
                    "degenerate": sum(r.degenerate for r in records)}
    step.claim("search", equation=plan.equation.value, m_max=plan.search_size, k_max=plan.search_size,
               window_slack=0, values=sorted(str(v) for v in found))
    if not all(r.check() for r in records):
        _note(step, Failed("a search record fails its exact replay"))
    elif found != plan.solutions:
        _note(step, Failed("value set %s differs from the expected %s" % (sorted(found), sorted(plan.solutions))))
    return step


def _side_conditions(plan, ctx, config):
    eq = plan.equation
    step = Step("side-conditions", "digit bounds, index window, lower bound on n - k and the B micro-cases",
                inputs={"check_limit": plan.check_limit, "window": list(plan.window),
                        "min_shift": plan.min_shift, "micro_case_k": plan.micro_case_k})
    checks = {
        "lucas-identity": lucas_identity_holds(plan.check_limit),
        "digit-bounds": digit_bounds_hold(plan.right_kind, plan.check_limit),
        "min-shift": min_shift_holds(eq, plan.min_shift, plan.check_limit),
        "micro-cases": micro_cases_hold(eq, plan.micro_case_k, plan.check_limit),
    }
    step.claim("lucas-identity", k_max=plan.check_limit)
    step.claim("digit-bounds", sequence=plan.right_kind.value, k_max=plan.check_limit)
    step.claim("min-shift", equation=eq.value, min_shift=plan.min_shift, k_max=plan.check_limit)
    step.claim("micro-cases", equation=eq.value, k_max=plan.micro_case_k, m_max=plan.check_limit)

    if eq is Equation.FIB_LUCAS:
        checks["lucas-gap"] = lucas_between_fibonacci(plan.check_limit)
        step.claim("lucas-gap", k_max=plan.check_limit)

    widened = search_range(eq, plan.search_size, plan.search_size, window_slack=WINDOW_SLACK)
    checks["window"] = widened == ctx["records"]
    step.claim("window", equation=eq.value, size=plan.search_size, slack=WINDOW_SLACK, count=len(widened),
               window=list(plan.window))

    missed = outside_window(ctx["records"], plan.printed_window)
    step.claim("printed-window", equation=eq.value, size=plan.search_size, window=list(plan.printed_window),
               outside=[[r.n, r.m, r.k] for r in missed])
    step.outputs = {name: ok for name, ok in checks.items()}
    step.outputs["outside_printed_window"] = [[r.n, r.m, r.k] for r in missed]
    if eq is Equation.LUCAS_FIB:
        step.outputs["skipped"] = "k = 0 (F_0 = 0 has no digit count)"
    else:
        step.outputs["degenerate"] = "m = 0 reads F_n = L_k, impossible for k >= 3 as F_(k+1) < L_k < F_(k+2)"

    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        _note(step, Failed("side conditions fail: " + ", ".join(failed)))
    if missed:
        _note(step, Discrepancy("the printed window %s misses (n, m, k) in %s; the window %s is used" % (
            list(plan.printed_window), [[r.n, r.m, r.k] for r in missed], list(plan.window))))
    return step


def _witness_instances(step, plan, records, config):
    ordered = sorted((r for r in records if not r.degenerate), key=lambda r: r.value, reverse=True)
    for form in (plan.two_term_form, plan.three_term_form):
        for r in ordered:
            try:
                inst = lambda_instance(form, r.n, r.m, r.k)
            except SideConditionViolated:
                continue
            checks = verify_instance(inst, config)
            step.claim("linear-form", form=form.name, n=r.n, m=r.m, k=r.k)
            if not all(checks.values()):
                _note(step, Failed("%s at (%d, %d, %d) fails %s" % (
                    form.name, r.n, r.m, r.k, [c for c, ok in checks.items() if not ok])))
            break


def _matveev_coefficients(plan, ctx, config):
    step = Step("matveev-coefficients", "Matveev's lower bound instantiated for both linear forms",
                inputs={"two_term": plan.two_term_form.name, "three_term": plan.three_term_form.name})
    for role, form, printed in (("two-term", plan.two_term_form, plan.two_term_coefficient),
                                ("three-term", plan.three_term_form, plan.three_term_coefficient)):
        chk = check_coefficient(form, printed, config)
        recomputed = chk.recomputed.decimal_strings(8)[1]
        step.claim("coefficient", role=role, form=form.name, printed=enc_expr(printed))
        step.outputs[form.name] = {"recomputed": recomputed, "printed": enc_expr(printed),
                                   "within_tolerance": chk.within_tolerance}
        if not chk.ok:
            _note(step, Failed("recomputed coefficient %s of %s is not absorbed by the printed %s" % (
                recomputed, form.name, printed)))
        elif not chk.within_tolerance:
            _note(step, Discrepancy("printed coefficient of %s is more than 0.5%% above %s" % (
                form.name, recomputed)))
    _witness_instances(step, plan, ctx["records"], config)
    return step


def _bound_chain(plan, ctx, config):
    two, three = plan.two_term_form, plan.three_term_form
    step = Step("bound-chain", "upper bounds on n in the branches k <= m and m <= k",
                inputs={"two_term_coefficient": enc_expr(plan.two_term_coefficient),
                        "three_term_coefficient": enc_expr(plan.three_term_coefficient)})

    b1 = BoundInequality.single(plan.two_term_coefficient, two.decay_offset, label="n - k for k <= m")
    s1 = solve_bound(b1, config=config)
    shift_bound = _adopt(step, s1, plan.shift_bound, "n - k")
    _bound_claim(step, b1, shift_bound, s1, "shift")
    offset = -2 * plan.window[0] + plan.window[1]
    small = propagate_bound(shift_bound, 2, offset)
    small_bound = _adopt(step, small, plan.small_branch_bound, "k <= m")
    step.claim("propagated-bound", role="small-branch", x=enc_int(shift_bound), scale=2, offset=offset,
               value=enc_int(small_bound))

    b2 = BoundInequality.chained(plan.three_term_coefficient, plan.two_term_coefficient, two.decay_offset,
                                 three.a3_intercept, plan.window[1], label="n for m <= k")
    s2 = solve_bound(b2, config=config)
    chain_bound = _adopt(step, s2, plan.chain_bound, "m <= k")
    _bound_claim(step, b2, chain_bound, s2, "chain")

    n_bound = max(small_bound, chain_bound)
    ctx["n_bound"] = n_bound
    step.outputs = {
        "k<=m": {"n-k": _sci(shift_bound), "n-k recomputed": _sci(s1.value), "n": _sci(small_bound),
                 "n recomputed": _sci(small.value)},
        "m<=k": {"n": _sci(chain_bound), "n recomputed": _sci(s2.value)},
        "n_bound": enc_int(n_bound),
    }
    return step


def _m_bound(plan, ctx, config):
    n_bound = ctx["n_bound"]
    step = Step("m-bound-argument", "m is bounded through the two-term linear form",
                inputs={"n_bound": enc_int(n_bound), "m_threshold": plan.m_threshold, "kind": plan.lemma_kind})
    lhs, rhs = small_form_condition(plan, plan.m_threshold)
    step.claim("inequality", lhs=enc_expr(lhs), rhs=enc_expr(rhs), strict=True)
    step.claim("m-bound", form=plan.two_term_form.name, lemma=plan.lemma_kind, threshold=plan.m_threshold,
               gap=plan.lemma_gap, n_upper=enc_int(n_bound),
               mu=None if plan.lemma_mu is None else enc_expr(plan.lemma_mu), q_index=plan.lemma_q_index)
    result = m_bound_argument(n_bound, plan, config=config)
    details = result.details
    if plan.lemma_kind == "legendre" and "amax" in details:
        step.claim("inequality", lhs=enc_expr(Integer(n_bound)), rhs=enc_expr(details["legendre_lower"]),
                   strict=True)
        step.claim("max-partial-quotient", target=enc_expr(TAU_INVERSE), index_base=1,
                   max_denominator=enc_int(n_bound), index=details["amax_index"], value=details["amax"],
                   last_index=details["last_index"])
        step.claim("inequality", lhs=enc_expr(Integer(n_bound)), rhs=enc_expr(details["amax_lower"]),
                   strict=True)
        step.outputs = {"exponent": details["exponent"], "amax": details["amax"],
                        "amax_index": details["amax_index"], "last_index": details["last_index"]}
    elif plan.lemma_kind == "reduction" and isinstance(details.get("status"), Reduced):
        p, status = details["problem"], details["status"]
        step.claim("reduction", tau=enc_expr(p.tau), mu=enc_expr(p.mu), M=enc_int(p.M), A=enc_expr(p.A),
                   B=enc_expr(p.B), index_base=0, q_index=status.q_index, q=enc_int(status.q),
                   epsilon=enc_fraction(status.epsilon_lower), w_bound=status.w_bound,
                   w_max=details["exponent"] + 1)
        step.outputs = {"exponent": details["exponent"], "epsilon": enc_fraction(status.epsilon_lower),
                        "w_bound": status.w_bound, "q_index": status.q_index}
        if plan.lemma_epsilon is not None and status.epsilon_lower < plan.lemma_epsilon:
            _note(step, Discrepancy("epsilon %s is below the printed %s" % (
                enc_fraction(status.epsilon_lower)["decimal"], float(plan.lemma_epsilon))))
        if plan.lemma_w is not None and status.w_bound > plan.lemma_w:
            _note(step, Discrepancy("w bound %d exceeds the printed %d" % (status.w_bound, plan.lemma_w)))

    if isinstance(result, Contradiction):
        ctx["m_bound"] = result.threshold
        step.outputs["m_bound"] = result.threshold
    else:
        _note(step, Failed("m > %d is not contradicted below n < %s" % (plan.m_threshold, _sci(n_bound))))
    return step


def _refined_bound(plan, ctx, config):
    three = plan.three_term_form
    step = Step("refined-bound", "the three-term bound with n - k bounded through m",
                inputs={"m_bound": ctx["m_bound"], "shift": plan.refined_shift})
    needed = ctx["m_bound"] + plan.window[1] - 1
    step.claim("shift-cover", m_bound=ctx["m_bound"], window_hi=plan.window[1], shift=plan.refined_shift)
    if plan.refined_shift < needed:
        _note(step, Failed("n - k can reach %d but the plan bounds it by %d" % (needed, plan.refined_shift)))
        return step
    b = BoundInequality.refined(plan.three_term_coefficient, three.a3(plan.refined_shift), plan.window[1],
                                label="n once n - k <= %d" % plan.refined_shift)
    solved = solve_bound(b, config=config)
    refined = _adopt(step, solved, plan.refined_bound, "refined")
    _bound_claim(step, b, refined, solved, "refined", form=three.name, shift=plan.refined_shift)
    if refined > ctx["n_bound"]:
        _note(step, Discrepancy("refined bound %s exceeds the previous %s" % (_sci(refined), _sci(ctx["n_bound"]))))
        refined = ctx["n_bound"]
    ctx["refined"] = refined
    step.outputs = {"n_bound": enc_int(refined), "recomputed": _sci(solved.value)}
    return step


def _congruences(plan, ctx, config):
    step = Step("congruence-exclusions", "shifts ruled out by the Fibonacci sequence modulo 5",
                inputs={"shifts": list(plan.excluded_shifts)})
    if not plan.excluded_shifts:
        step.status = Skipped("no shift needs a congruence exclusion")
        return step
    reasons = {}
    for shift in plan.excluded_shifts:
        try:
            reasons[shift] = exclude_by_congruence(shift).reason
        except NotExcludable as e:
            _note(step, Failed(str(e)))
            continue
        step.claim("congruence", shift=shift, modulus=5)
    step.outputs = {str(s): r for s, r in reasons.items()}
    return step


def _reduction_sweep(plan, ctx, config):
    M = ctx["refined"]
    lo, hi = plan.sweep_m_range
    step = Step("reduction-sweep", "the reduction over every admissible (m, n - k)",
                inputs={"M": enc_int(M), "m_range": [lo, hi], "shift_start": plan.sweep_shift_start,
                        "skip": list(plan.excluded_shifts), "A": enc_expr(plan.sweep_A)})
    template = ReductionProblem(M, TAU, 0, plan.sweep_A, ALPHA, label="theorem %d sweep" % plan.theorem)
    cf = expand(TAU, plan.sweep_q_index + 1, index_base=0, config=config)
    q_index = plan.sweep_q_index
    if cf.q(q_index) <= 6 * M:
        _note(step, Discrepancy("q_%d does not exceed 6M; the first convergent that does is used" % q_index))
        q_index = None
    result = sweep(plan.mu, range(lo, hi + 1), plan.sweep_shifts, template, skip_shifts=plan.excluded_shifts,
                   cf=cf, q_index=q_index, config=config)
    step.claim("sweep", family=plan.sweep_family, m_range=[lo, hi], shift_start=plan.sweep_shift_start,
               window_hi=plan.window[1], skip=list(plan.excluded_shifts), M=enc_int(M), tau=enc_expr(TAU),
               A=enc_expr(plan.sweep_A), B=enc_expr(ALPHA), index_base=0, q_index=result.q_index,
               q=enc_int(result.q), points=result.points,
               min_epsilon=None if result.min_epsilon is None else enc_fraction(result.min_epsilon),
               argmin=None if result.argmin is None else list(result.argmin),
               failures=[list(p) for p in result.failures], w_bound=result.w_bound)
    step.outputs = {"points": result.points, "q_index": result.q_index, "q": enc_int(result.q),
                    "failures": [list(p) for p in result.failures],
                    "exhausted": [list(p) for p in result.exhausted]}
    if not result.ok or result.min_epsilon is None:
        _note(step, Failed("epsilon is not certified positive at %s" % (
            [list(p) for p in result.failures + result.exhausted],)))
        return step

    k_bound = (result.w_bound + 1) // 2
    ctx["k_bound"] = k_bound
    step.outputs.update({"min_epsilon": enc_fraction(result.min_epsilon), "argmin": list(result.argmin),
                         "w_bound": result.w_bound, "k_bound": k_bound})
    if result.min_epsilon < plan.sweep_epsilon:
        _note(step, Discrepancy("minimum epsilon %s is below the printed %s" % (
            enc_fraction(result.min_epsilon)["decimal"], float(plan.sweep_epsilon))))
    if plan.sweep_argmin is not None and tuple(result.argmin) != tuple(plan.sweep_argmin):
        _note(step, Discrepancy("minimum at %s instead of the printed %s" % (
            list(result.argmin), list(plan.sweep_argmin))))
    if result.w_bound > plan.sweep_w:
        _note(step, Discrepancy("w bound %d exceeds the printed %d" % (result.w_bound, plan.sweep_w)))
    if plan.printed_window != plan.window:
        _note(step, Discrepancy("the grid runs over %d <= n - k <= m + %d to match the corrected window" % (
            plan.sweep_shift_start, plan.window[1] - 1)))
    return step


def _k_bound(plan, ctx, config):
    k_bound, m_bound = ctx["k_bound"], ctx["m_bound"]
    step = Step("k-bound", "k < k_bound and m <= m_bound contradict max(m, k) >= the search size",
                inputs={"k_bound": k_bound, "m_bound": m_bound, "search_size": plan.search_size})
    step.claim("k-bound", k_bound=k_bound, m_bound=m_bound, search_size=plan.search_size)
    if not (k_bound <= plan.search_size and m_bound < plan.search_size):
        _note(step, Failed("the bounds leave max(m, k) >= %d open" % plan.search_size))
    return step


def _gap_closure(plan, ctx, config):
    k_bound, m_bound = ctx["k_bound"], ctx["m_bound"]
    shift_bound = m_bound + plan.window[1] - 1
    step = Step("gap-closure", "exhaustive enumeration of the box left by the reductions",
                inputs={"k_bound": k_bound, "m_bound": m_bound, "shift_bound": shift_bound})
    records = close_gap(plan.equation, k_bound, m_bound, shift_bound, show_progress=config.progress)
    found = values(records)
    step.claim("gap-closure", equation=plan.equation.value, k_bound=k_bound, m_bound=m_bound,
               shift_bound=shift_bound, values=sorted(str(v) for v in found))
    step.outputs = {"values": sorted(enc_int(v) for v in found), "records": len(records)}
    if not found <= plan.solutions:
        _note(step, Failed("new solutions %s" % sorted(found - plan.solutions)))
    return step


_STEPS = (
    _initial_search,
    _side_conditions,
    _matveev_coefficients,
    _bound_chain,
    _m_bound,
    _refined_bound,
    _congruences,
    _reduction_sweep,
    _k_bound,
    _gap_closure,
)


def certify(theorem, plan=None, config=None):
    """Replay the proof of ``theorem`` (1 or 2) and return its :class:`Certificate`.

    Raises:
        StepFailed: a step could not be verified. The failing step, with the data it certified, is attached.
    """
    config = resolve(config)
    plan = ProofPlan.for_theorem(theorem) if plan is None else plan
    if plan.theorem != int(theorem):
        raise ValueError("The plan is for theorem %d, not %r." % (plan.theorem, theorem))

    ctx, steps = {}, []
    for runner in _STEPS:
        label = runner.__name__.strip("_").replace("_", "-")
        logger.info("theorem %d: %s", plan.theorem, label)
        step = runner(plan, ctx, config)
        steps.append(step)
        if isinstance(step.status, Failed):
            logger.warning("theorem %d: %s failed: %s", plan.theorem, step.label, step.status.details)
            raise StepFailed("%s failed: %s" % (step.label, step.status.details), step=step)
        if isinstance(step.status, Discrepancy):
            logger.warning("theorem %d: %s: %s", plan.theorem, step.label, step.status.details)
        logger.info("theorem %d: %s finished (%s)", plan.theorem, step.label, step.status.name)

    conclusion = values(ctx["records"])
    steps.append(Step("conclusion", "the solution set", outputs={"values": sorted(enc_int(v) for v in conclusion)}))
    return Certificate(plan.theorem, steps, environment(config), conclusion, list(plan.notes))
