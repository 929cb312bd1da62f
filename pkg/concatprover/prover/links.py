"""Values a certificate threads from one step to the next.

Every claim replays on its own in :mod:`concatprover.prover.check`. The links below make the claims one
argument: each bound is rebuilt from the coefficients the certificate states, each step consumes the bound
the previous one produced, and the final enumeration runs over the box the reductions leave open.
"""
import logging
from fractions import Fraction

from concatprover.exceptions import CertificateError
from concatprover.linforms import BoundInequality, linear_form
from concatprover.prover.certificate import dec_int, enc_expr
from concatprover.realexpr import ALPHA, Integer, LOG_ALPHA, parse
from concatprover.contfrac import TAU
from concatprover.search import WINDOW, Equation

logger = logging.getLogger(__name__)

#: Claim kinds each step must carry.
EXPECTED_CLAIMS = {
    "initial-search": ("search",),
    "side-conditions": ("lucas-identity", "digit-bounds", "min-shift", "micro-cases", "window"),
    "matveev-coefficients": ("coefficient",),
    "bound-chain": ("solved-bound", "propagated-bound"),
    "m-bound-argument": ("m-bound",),
    "refined-bound": ("shift-cover", "solved-bound"),
    "reduction-sweep": ("sweep",),
    "k-bound": ("k-bound",),
    "gap-closure": ("gap-closure",),
}

#: Sweep family of each equation.
SWEEP_FAMILY = {Equation.FIB_LUCAS: "fib-lucas", Equation.LUCAS_FIB: "lucas-fib"}


class _Links:
    def __init__(self, certificate):
        self.steps = {s.label: s for s in certificate.steps}
        self.failures = []

    def require(self, ok, step, details):
        if not ok:
            self.failures.append((step, details))

    def claim(self, label, kind, role=None):
        step = self.steps.get(label)
        found = [] if step is None else [c for c in step.claims
                                         if c.get("kind") == kind and (role is None or c.get("role") == role)]
        if len(found) != 1:
            raise CertificateError("%s carries %d %s claims%s, expected one." % (
                label, len(found), kind, "" if role is None else " with role %s" % role))
        return found[0]

    def kinds(self, label):
        step = self.steps.get(label)
        return set() if step is None else {c.get("kind") for c in step.claims}

    def same_inequality(self, label, claim, b):
        same = (claim["offset"] == enc_expr(b.offset)
                and list(claim["coefficients"]) == [enc_expr(c) for c in b.coefficients]
                and Fraction(claim["y_scale"]) == b.y_scale and Fraction(claim["y_offset"]) == b.y_offset)
        self.require(same, label, "the %s inequality is not the one the stated coefficients give" % claim.get("role"))


def _expected_kinds(links):
    for label, kinds in EXPECTED_CLAIMS.items():
        if label not in links.steps:
            continue
        present = links.kinds(label)
        for kind in kinds:
            links.require(kind in present, label, "no %s claim" % kind)


def _thread(links):
    search = links.claim("initial-search", "search")
    eq = Equation(search["equation"])
    size = min(search["m_max"], search["k_max"])

    window = links.claim("side-conditions", "window")
    links.require(tuple(window["window"]) == WINDOW, "side-conditions",
                  "window %s is not the searched window %s" % (window["window"], list(WINDOW)))
    lo, hi = WINDOW
    min_shift = links.claim("side-conditions", "min-shift")
    links.require(min_shift["equation"] == eq.value, "side-conditions", "min-shift is about another equation")
    if eq is Equation.FIB_LUCAS:
        # m = 0 is outside every linear form and every sweep.
        links.require("lucas-gap" in links.kinds("side-conditions"), "side-conditions",
                      "no lucas-gap claim for the m = 0 case")

    two = links.claim("matveev-coefficients", "coefficient", "two-term")
    three = links.claim("matveev-coefficients", "coefficient", "three-term")
    two_form, three_form = linear_form(two["form"]), linear_form(three["form"])
    links.require(two_form.equation is eq and two_form.scale == 1, "matveev-coefficients",
                  "%s is not the two-term form of equation %d" % (two_form.name, eq.value))
    links.require(three_form.equation is eq and three_form.scale == 2, "matveev-coefficients",
                  "%s is not the three-term form of equation %d" % (three_form.name, eq.value))
    c2, c3 = parse(two["printed"]), parse(three["printed"])

    shift = links.claim("bound-chain", "solved-bound", "shift")
    chain = links.claim("bound-chain", "solved-bound", "chain")
    small = links.claim("bound-chain", "propagated-bound", "small-branch")
    links.same_inequality("bound-chain", shift, BoundInequality.single(c2, two_form.decay_offset))
    links.same_inequality("bound-chain", chain, BoundInequality.chained(
        c3, c2, two_form.decay_offset, three_form.a3_intercept, hi))
    links.require(dec_int(small["x"]) == dec_int(shift["value"]), "bound-chain",
                  "the k <= m branch starts from %s, not the n - k bound %s" % (small["x"], shift["value"]))
    links.require(Fraction(small["scale"]) == 2 and Fraction(small["offset"]) == -2 * lo + hi, "bound-chain",
                  "n < 2(n - k) + %d is the k <= m image" % (-2 * lo + hi))
    n_bound = max(dec_int(small["value"]), dec_int(chain["value"]))

    mb = links.claim("m-bound-argument", "m-bound")
    links.require(mb["form"] == two_form.name, "m-bound-argument", "the m bound uses %s" % mb["form"])
    links.require(dec_int(mb["n_upper"]) >= n_bound, "m-bound-argument",
                  "the m bound assumes n < %s, the chain gives %s" % (mb["n_upper"], n_bound))
    links.require(mb["gap"] >= two_form.decay_offset - lo - 1, "m-bound-argument",
                  "gap %s overstates the decay of %s" % (mb["gap"], two_form.name))
    m_bound = mb["threshold"]

    cover = links.claim("refined-bound", "shift-cover")
    refined = links.claim("refined-bound", "solved-bound", "refined")
    links.require(cover["m_bound"] == m_bound and cover["window_hi"] == hi, "refined-bound",
                  "the shift cover does not use m <= %d and the window" % m_bound)
    links.require(refined["shift"] == cover["shift"] and refined["form"] == three_form.name, "refined-bound",
                  "the refined bound is not taken at the covered shift")
    links.same_inequality("refined-bound", refined, BoundInequality.refined(
        c3, three_form.a3(cover["shift"]), hi))
    M = min(dec_int(refined["value"]), n_bound)

    congruent = {c["shift"] for c in links.steps["congruence-exclusions"].claims if c.get("kind") == "congruence"} \
        if "congruence-exclusions" in links.steps else set()

    sw = links.claim("reduction-sweep", "sweep")
    m_lo, m_hi = sw["m_range"]
    links.require(dec_int(sw["M"]) >= M, "reduction-sweep", "the sweep uses M = %s below n < %s" % (sw["M"], M))
    links.require(sw["family"] == SWEEP_FAMILY[eq], "reduction-sweep", "wrong family %s" % sw["family"])
    links.require(m_lo <= (1 if eq is Equation.FIB_LUCAS else 0) and m_hi >= m_bound, "reduction-sweep",
                  "m range %s does not cover m <= %d" % (sw["m_range"], m_bound))
    links.require(sw["shift_start"] <= min_shift["min_shift"] and sw["window_hi"] == hi, "reduction-sweep",
                  "the grid does not start at n - k = %d or ignores the window" % min_shift["min_shift"])
    links.require(set(sw["skip"]) <= congruent, "reduction-sweep",
                  "skipped shifts %s lack a congruence exclusion" % sorted(set(sw["skip"]) - congruent))
    links.require(sw["A"] == enc_expr(Integer(2 * three_form.numerator) / LOG_ALPHA)
                  and parse(sw["tau"]) == TAU and parse(sw["B"]) == ALPHA, "reduction-sweep",
                  "A, B or tau differ from the three-term form")
    if sw["w_bound"] is None:
        raise CertificateError("the sweep has no w bound")
    k_bound = (sw["w_bound"] + 1) // 2

    kb = links.claim("k-bound", "k-bound")
    links.require(kb["k_bound"] == k_bound and kb["m_bound"] == m_bound and kb["search_size"] == size, "k-bound",
                  "expected k < %d, m <= %d against the search size %d" % (k_bound, m_bound, size))

    gap = links.claim("gap-closure", "gap-closure")
    links.require(gap["equation"] == eq.value and gap["k_bound"] == k_bound and gap["m_bound"] == m_bound
                  and gap["shift_bound"] >= m_bound + hi - 1, "gap-closure",
                  "the enumeration does not cover k < %d, m <= %d, n - k <= %d" % (k_bound, m_bound,
                                                                                    m_bound + hi - 1))


def check_links(certificate):
    """``(step, details)`` for every link of ``certificate`` that does not hold."""
    links = _Links(certificate)
    _expected_kinds(links)
    if links.failures:
        return links.failures
    try:
        _thread(links)
    except (CertificateError, KeyError, TypeError, ValueError) as e:
        logger.warning("links of theorem %d: %s: %s", certificate.theorem, type(e).__name__, e)
        links.failures.append(("-", "malformed link data: %s" % e))
    return links.failures
