import json
from fractions import Fraction

import pytest

from concatprover import CertificateError
from concatprover.prover import SCHEMA, Certificate, Discrepancy, Failed, Skipped, Step, Verified, load, loads
from concatprover.prover.certificate import dec_fraction, dec_int, enc_fraction, enc_int, environment

import util_test


def sample_certificate():
    search = Step("initial-search", "exhaustive search", inputs={"m_max": 200})
    search.claim("search", equation=1, m_max=200, k_max=200, window_slack=0, values=["1", "2"])
    steps = [
        search,
        Step("refined-bound", "bound", outputs={"n_bound": enc_int(45 * 10 ** 15)},
             status=Discrepancy("recomputed bound exceeds the printed one")),
        Step("congruence-exclusions", "congruences", status=Skipped("no shift needs a congruence exclusion")),
        Step("conclusion", "the solution set", outputs={"values": [1, 2]}),
    ]
    return Certificate(1, steps, environment(util_test.QUIET), frozenset({1, 2}), ["a note"])


def test_round_trip(tmp_path):
    cert = sample_certificate()
    again = loads(cert.dumps())
    assert again.to_json() == cert.to_json(), "JSON round trip changed the certificate."
    assert again.conclusion == {1, 2}, "Wrong conclusion."
    assert isinstance(again.step("refined-bound").status, Discrepancy), "Statuses survive the round trip."
    assert isinstance(again.step("initial-search").status, Verified), "Verified is the default status."
    assert again.step("initial-search").claims[0]["kind"] == "search", "Claims keep their kind."

    path = tmp_path / "certificate.json"
    cert.save(str(path))
    assert load(str(path)).to_json() == cert.to_json(), "File round trip changed the certificate."
    assert json.loads(path.read_text())["schema"] == SCHEMA, "Wrong schema tag."


def test_environment():
    env = environment(util_test.QUIET)
    assert env["precision_cap"] == util_test.QUIET.precision_cap, "The precision cap is recorded."
    assert env["epsilon_digits"] == 12, "The published digits are recorded."
    assert "timestamp" in env and "version" in env, "Missing provenance."


def test_large_integers():
    assert enc_int(2 ** 53 - 1) == 2 ** 53 - 1, "Small integers stay numbers."
    assert enc_int(2 ** 53) == str(2 ** 53), "Large integers become strings."
    assert dec_int(str(10 ** 30)) == 10 ** 30, "Strings decode to integers."
    for bad in (True, 1.5, "1e5", None):
        with pytest.raises(CertificateError):
            dec_int(bad)

    cert = sample_certificate()
    cert.conclusion = frozenset({10 ** 20})
    obj = json.loads(cert.dumps())
    assert obj["conclusion"] == [str(10 ** 20)], "Large conclusions are strings."
    assert loads(cert.dumps()).conclusion == {10 ** 20}, "Large conclusions decode."


def test_fractions():
    enc = enc_fraction(Fraction(34, 100000))
    assert enc == {"exact": "17/50000", "decimal": "3.40000000000e-4"}, "Wrong encoding %s." % enc
    assert dec_fraction(enc) == Fraction(17, 50000), "Wrong decoding."
    assert dec_fraction("1/3") == Fraction(1, 3), "Bare strings decode."
    with pytest.raises(CertificateError):
        dec_fraction({"decimal": "1"})
    with pytest.raises(CertificateError):
        dec_fraction("1/0")


def test_malformed():
    obj = sample_certificate().to_json()
    for key, value in (("schema", "other/1"), ("theorem", 3), ("steps", {})):
        bad = dict(obj, **{key: value})
        with pytest.raises(CertificateError):
            Certificate.from_json(bad)
    with pytest.raises(CertificateError):
        loads("{not json")
    with pytest.raises(CertificateError):
        loads("[]")
    bad = dict(obj, steps=[{"anchor": "no label", "status": "verified"}])
    with pytest.raises(CertificateError):
        Certificate.from_json(bad)
    bad = dict(obj, steps=[dict(obj["steps"][0], status="maybe")])
    with pytest.raises(CertificateError):
        Certificate.from_json(bad)


def test_failed_status():
    step = Step("gap-closure", "enumeration", status=Failed("new solutions [55]"))
    obj = step.to_json()
    assert obj["status"] == "failed" and obj["details"] == "new solutions [55]", "Wrong failed status."
    assert Step.from_json(obj).status == Failed("new solutions [55]"), "Failed survives the round trip."
    with pytest.raises(KeyError):
        sample_certificate().step("missing")
