import json

import pytest

from concatprover.prover import Certificate, Failed, certify, check
from concatprover.prover.links import EXPECTED_CLAIMS, check_links

import util_test

pytestmark = pytest.mark.slow

SAMPLE = 40


@pytest.fixture(scope="module")
def certificate():
    return certify(1, config=util_test.QUIET)


def copy(cert):
    return Certificate.from_json(json.loads(cert.dumps()))


def claim(cert, kind):
    for step in cert.steps:
        for c in step.claims:
            if c["kind"] == kind:
                return c
    raise KeyError(kind)


def failed_kinds(report):
    return {f.kind for f in report.failures}


def test_check_passes(certificate):
    report = check(certificate, sample=SAMPLE, config=util_test.QUIET)
    assert report.ok, "Untouched certificate fails: %s" % report.failures
    assert report.conclusion == {1, 2, 3, 13, 21, 34}, "Wrong replayed conclusion."
    assert report.claims_checked == sum(len(s.claims) for s in certificate.steps), "Every claim is replayed."


def test_second_theorem():
    cert = certify(2, config=util_test.QUIET)
    report = check(cert, sample=SAMPLE, seed=7, config=util_test.QUIET)
    assert report.ok, "Untouched certificate fails: %s" % report.failures
    assert report.conclusion == {13, 21}, "Wrong replayed conclusion."


def test_tampered_conclusion(certificate):
    cert = copy(certificate)
    cert.conclusion = cert.conclusion | {55}
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert not report.ok and report.conclusion is None, "An extra solution is detected."
    assert [f.step for f in report.failures] == ["conclusion"], "Only the conclusion is wrong."


def test_tampered_search(certificate):
    cert = copy(certificate)
    claim(cert, "search")["values"] = ["1", "2", "3", "13", "21"]
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert "search" in failed_kinds(report), "A dropped solution is detected."


def test_tampered_coefficient(certificate):
    cert = copy(certificate)
    claim(cert, "coefficient")["printed"] = "1000000"
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert failed_kinds(report) == {"coefficient", "link"}, "A tampered coefficient is detected."
    assert {f.step for f in report.failures if f.kind == "link"} == {"bound-chain"}, \
        "The bounds no longer follow from the coefficient."


def test_tampered_bounds(certificate):
    cert = copy(certificate)
    claim(cert, "solved-bound")["value"] = 6 * 10 ** 11
    claim(cert, "max-partial-quotient")["value"] = 105
    claim(cert, "k-bound")["k_bound"] = 250
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert failed_kinds(report) - {"link"} == {"solved-bound", "max-partial-quotient", "k-bound"}, \
        "Wrong failures %s." % report.failures
    assert {f.step for f in report.failures if f.kind == "link"} == {"bound-chain", "k-bound"}, \
        "Wrong link failures %s." % report.failures


def test_tampered_sweep(certificate):
    cert = copy(certificate)
    sweep = claim(cert, "sweep")
    sweep["min_epsilon"] = {"exact": "1/1000", "decimal": "1.0e-3"}
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert "sweep" in failed_kinds(report), "An inflated minimum is detected."

    cert = copy(certificate)
    claim(cert, "sweep")["points"] = 11924
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert "sweep" in failed_kinds(report), "A shrunken grid is detected."


def test_structure(certificate):
    cert = copy(certificate)
    cert.steps = [s for s in cert.steps if s.label != "k-bound"]
    cert.steps[0].claims.append({"kind": "oracle"})
    cert.step("gap-closure").status = Failed("forged")
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    failures = {(f.step, f.kind) for f in report.failures}
    assert ("k-bound", "-") in failures, "A missing step is detected."
    assert ("initial-search", "oracle") in failures, "Unknown claims fail."
    assert ("gap-closure", "-") in failures, "Failed steps fail the check."


def test_sampling_is_seeded(certificate):
    first = check(certificate, sample=5, seed=3, config=util_test.QUIET)
    second = check(certificate, sample=5, seed=3, config=util_test.QUIET)
    assert first.ok and second.ok, "Sampled checks pass."
    assert first.claims_checked == second.claims_checked, "Same claims replayed."


def link_steps(cert):
    return {step for step, _ in check_links(cert)}


def test_links_hold(certificate):
    assert check_links(certificate) == [], "The steps of an untouched certificate fit together."


def test_search_claim_alone(certificate):
    cert = copy(certificate)
    for step in cert.steps:
        if step.label != "initial-search":
            step.claims = []
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert not report.ok and report.conclusion is None, "Claim-free steps prove nothing."
    missing = {f.step for f in report.failures if f.kind == "link"}
    assert missing == set(EXPECTED_CLAIMS) - {"initial-search"}, "Every step without its claims is reported."


def test_lowered_sweep_bound(certificate):
    cert = copy(certificate)
    claim(cert, "sweep")["M"] = str(10 ** 12)
    assert link_steps(cert) == {"reduction-sweep"}, "The sweep must use the refined bound."


def test_k_bound_threading(certificate):
    cert = copy(certificate)
    claim(cert, "k-bound")["k_bound"] -= 1
    claim(cert, "gap-closure")["k_bound"] -= 1
    assert link_steps(cert) == {"k-bound", "gap-closure"}, "k_bound follows from the sweep's w bound."


def test_gap_closure_box(certificate):
    cert = copy(certificate)
    claim(cert, "gap-closure")["m_bound"] -= 10
    assert link_steps(cert) == {"gap-closure"}, "The enumeration must reach the m bound."

    cert = copy(certificate)
    claim(cert, "gap-closure")["shift_bound"] -= 1
    assert link_steps(cert) == {"gap-closure"}, "The enumeration must reach the largest n - k."


def test_bound_chain_order(certificate):
    cert = copy(certificate)
    bounds = cert.step("bound-chain").claims
    shift = next(c for c in bounds if c.get("role") == "shift")
    chain = next(c for c in bounds if c.get("role") == "chain")
    shift["role"], chain["role"] = "chain", "shift"
    assert link_steps(cert) == {"bound-chain"}, "Swapped bounds are detected."

    cert = copy(certificate)
    claim(cert, "m-bound")["n_upper"] = 10 ** 11
    assert link_steps(cert) == {"m-bound-argument"}, "The m bound must assume the chained bound."


def test_m_bound_claim(certificate):
    cert = copy(certificate)
    claim(cert, "m-bound")["gap"] = 5
    assert link_steps(cert) == {"m-bound-argument"}, "The gap cannot outrun the decay of the form."

    cert = copy(certificate)
    claim(cert, "m-bound")["threshold"] = 100
    assert {"refined-bound", "k-bound", "gap-closure"} <= link_steps(cert), "The later steps use m <= 150."

    cert = copy(certificate)
    claim(cert, "m-bound")["n_upper"] = str(10 ** 60)
    report = check(cert, sample=SAMPLE, config=util_test.QUIET)
    assert {(f.step, f.kind) for f in report.failures} == {("m-bound-argument", "m-bound")}, \
        "m > 150 is not contradicted for n < 10^60: %s" % report.failures


def test_lucas_gap_required(certificate):
    cert = copy(certificate)
    side = cert.step("side-conditions")
    side.claims = [c for c in side.claims if c["kind"] != "lucas-gap"]
    assert link_steps(cert) == {"side-conditions"}, "m = 0 needs the Lucas gap claim."
    assert any(c["kind"] == "lucas-gap" for c in certificate.step("side-conditions").claims), "Claimed for F_n = L_k."


def test_skip_needs_congruence():
    cert = certify(2, config=util_test.QUIET)
    assert check_links(cert) == [], "The steps of theorem 2 fit together."
    assert not any(c["kind"] == "lucas-gap" for c in cert.step("side-conditions").claims), "m = 0 is swept."
    congruence = cert.step("congruence-exclusions")
    congruence.claims = [c for c in congruence.claims if c["shift"] != 8]
    assert check_links(cert) == [("reduction-sweep", "skipped shifts [8] lack a congruence exclusion")], \
        "Skipped shifts need an exclusion."
