"""``concat-prover`` command line.

Exit codes: 0 success, 1 a library error or a failed verification, 2 a usage error.
"""
import argparse
import json
import logging
import re
import sys

from concatprover import __version__
from concatprover.bigseq import fib, lucas, pisano_period
from concatprover.config import ProverConfig
from concatprover.contfrac import TAU, expand
from concatprover.exceptions import ConcatProverError, StepFailed
from concatprover.linforms import BoundInequality, check_coefficient, linear_form, solve_bound
from concatprover.prover import ProofPlan, certify, check, load
from concatprover.prover.certificate import enc_fraction
from concatprover.realexpr import ALPHA, eval, parse
from concatprover.reduction import ReductionProblem, sweep
from concatprover.search import Equation, search_range, values
from concatprover.util import configure_logging, fraction_to_str

logger = logging.getLogger(__name__)

_GRID = re.compile(r"^(\d+)\.\.(\d+),(\d+)\.\.(\d+)$")


def _config(args):
    config = ProverConfig.default().with_overrides(progress=not getattr(args, "no_progress", False))
    if getattr(args, "precision_cap", None) is not None:
        config = config.with_overrides(precision_cap=args.precision_cap)
    if getattr(args, "workers", None) is not None:
        config = config.with_overrides(workers=args.workers)
    return config


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_seq(args):
    fn = {"fib": fib, "lucas": lucas, "pisano": pisano_period}[args.which]
    print(fn(args.index))
    return 0


def cmd_eval(args):
    lo, hi = eval(parse(args.expr), args.bits).decimal_strings(args.digits)
    print(lo, hi)
    return 0


def cmd_cfrac(args):
    cf = expand(parse(args.expr), args.terms, index_base=args.base, config=_config(args))
    if args.json:
        _emit({"target": str(cf.target), "index_base": cf.index_base, "quotients": list(cf.quotients),
               "convergents": [[str(p), str(q)] for p, q in cf.convergents]})
    else:
        for index in cf.indices():
            print(index, cf.quotient(index), "%d/%d" % cf.convergent(index))
    return 0


def cmd_bound(args):
    config = _config(args)
    form = linear_form(args.form)
    plan = ProofPlan.for_theorem(form.equation.value)
    coefficient = check_coefficient(form, config=config)
    if form.scale == 1:
        b = BoundInequality.single(form.printed_coefficient, form.decay_offset, label="n - k")
    elif args.chain:
        two = plan.two_term_form
        b = BoundInequality.chained(form.printed_coefficient, two.printed_coefficient, two.decay_offset,
                                    form.a3_intercept, plan.window[1], label="n for m <= k")
    else:
        b = BoundInequality.refined(form.printed_coefficient, form.a3(plan.refined_shift), plan.window[1],
                                    label="n once n - k <= %d" % plan.refined_shift)
    solved = solve_bound(b, config=config)
    result = {
        "form": form.name,
        "coefficient": coefficient.recomputed.decimal_strings(8)[1],
        "printed": str(form.printed_coefficient),
        "coefficient_ok": coefficient.ok,
        "inequality": str(b),
        "bound": "%.2e" % solved.value,
        "tight": "%.6e" % solved.tight,
    }
    if args.json:
        _emit(result)
    else:
        for key, value in result.items():
            print("%s: %s" % (key, value))
    return 0 if coefficient.ok else 1


def _grid(args, plan):
    if args.grid is None:
        return range(plan.sweep_m_range[0], plan.sweep_m_range[1] + 1), plan.sweep_shifts
    match = _GRID.match(args.grid)
    if match is None:
        raise ValueError("--grid must read m0..m1,s0..s1, got %r." % args.grid)
    m0, m1, s0, s1 = map(int, match.groups())
    return range(m0, m1 + 1), lambda m: range(s0, min(s1 + 1, m + plan.window[1]))


def _skip(args, plan):
    if args.skip is None:
        return plan.excluded_shifts
    if args.skip.strip().lower() in ("", "none"):
        return ()
    try:
        return tuple(int(s) for s in args.skip.split(","))
    except ValueError:
        raise ValueError("--skip must read s1,s2,... or none, got %r." % args.skip) from None


def cmd_reduce(args):
    config = _config(args)
    plan = ProofPlan.for_theorem(args.theorem)
    m_range, shifts = _grid(args, plan)
    template = ReductionProblem(plan.refined_bound, TAU, 0, plan.sweep_A, ALPHA, label="theorem %d" % plan.theorem)
    cf = expand(TAU, plan.sweep_q_index + 1, index_base=0, config=config)
    result = sweep(plan.mu, m_range, shifts, template, skip_shifts=_skip(args, plan), cf=cf,
                   q_index=plan.sweep_q_index, config=config)
    summary = {
        "points": result.points,
        "q_index": result.q_index,
        "min_epsilon": None if result.min_epsilon is None else enc_fraction(result.min_epsilon)["decimal"],
        "argmin": None if result.argmin is None else list(result.argmin),
        "w_bound": result.w_bound,
        "failures": [list(p) for p in result.failures],
        "exhausted": [list(p) for p in result.exhausted],
    }
    if args.json:
        summary["rows"] = [[r.m, r.shift, None if r.epsilon_lower is None else fraction_to_str(r.epsilon_lower, 12),
                            r.status] for r in result.rows]
        _emit(summary)
    else:
        for key, value in summary.items():
            print("%s: %s" % (key, value))
    return 0 if result.ok else 1


def cmd_search(args):
    records = search_range(Equation(args.eq), args.mmax, args.kmax, show_progress=not args.no_progress)
    if args.json:
        _emit({"values": sorted(str(v) for v in values(records)), "records": [r.to_json() for r in records]})
    else:
        for r in records:
            print("F_%d = %d  (m=%d, k=%d%s)" % (r.n, r.value, r.m, r.k, ", degenerate" if r.degenerate else ""))
        print("values:", sorted(values(records)))
    return 0


def cmd_certify(args):
    try:
        cert = certify(args.theorem, config=_config(args))
    except StepFailed as e:
        print("step failed: %s" % e, file=sys.stderr)
        if args.out and e.step is not None:
            with open(args.out, "w", encoding="utf-8") as f:
                json.dump(e.step.to_json(), f, indent=2)
        return 1
    if args.out:
        cert.save(args.out)
    else:
        print(cert.dumps())
    for step in cert.steps:
        logger.info("%s: %s", step.label, step.status.name)
    print("theorem %d: %s" % (cert.theorem, sorted(cert.conclusion)), file=sys.stderr)
    return 0 if cert.concluded else 1


def cmd_check(args):
    report = check(load(args.certificate), sample=args.sample, seed=args.seed, config=_config(args))
    for failure in report.failures:
        print("FAIL %s/%s: %s" % (failure.step, failure.kind, failure.details))
    if report.ok:
        print("OK theorem %d: %d claims, conclusion %s" % (report.theorem, report.claims_checked,
                                                           sorted(report.conclusion)))
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="concat-prover",
                                     description="Certified replay of the Fibonacci/Lucas concatenation theorems.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="Fibonacci and Lucas numbers, Pisano periods.")
    p.add_argument("which", choices=("fib", "lucas", "pisano"))
    p.add_argument("index", type=int)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("eval", help="Certified enclosure of an expression in prefix syntax.")
    p.add_argument("expr")
    p.add_argument("--bits", type=int, default=128)
    p.add_argument("--digits", type=int, default=30)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("cfrac", help="Certified continued fraction.")
    p.add_argument("expr")
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--base", type=int, choices=(0, 1), default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--precision-cap", type=int)
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("bound", help="Matveev coefficient and the solved bound of a linear form.")
    p.add_argument("--lambda", dest="form", required=True, help="1-4 or the form name.")
    p.add_argument("--chain", action="store_true", help="Chain a three-term form with the two-term bound.")
    p.add_argument("--json", action="store_true")
    p.add_argument("--precision-cap", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("reduce", help="Reduction sweep of a theorem.")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--grid", help="m0..m1,s0..s1 (inclusive).")
    p.add_argument("--skip", help="Shifts left out of the grid, comma separated, or none. Defaults to the shifts "
                                   "the theorem excludes by congruence.")
    p.add_argument("--json", action="store_true")
    p.add_argument("--precision-cap", type=int)
    p.add_argument("--workers", type=int, help="Processes used by the reduction sweep.")
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("search", help="Exhaustive search of one equation.")
    p.add_argument("--eq", type=int, choices=(1, 2), required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("certify", help="Replay the proof of a theorem and write its certificate.")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--out", help="Certificate path. Printed to stdout when omitted.")
    p.add_argument("--precision-cap", type=int)
    p.add_argument("--workers", type=int, help="Processes used by the reduction sweep.")
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check", help="Independently replay a certificate.")
    p.add_argument("certificate")
    p.add_argument("--sample", type=int, help="Replay this many sweep points instead of the whole grid.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--precision-cap", type=int)
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, sys.stderr)
    try:
        return args.func(args)
    except ConcatProverError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except ValueError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
