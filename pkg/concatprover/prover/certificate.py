"""The certificate document and the claims it carries.

A certificate is one JSON object with ``schema: "concatprover.certificate/1"``. Each step lists claims, plain
objects tagged by ``kind``, that :func:`concatprover.prover.check` re-verifies from the document alone.
Integers above 2^53 are strings, rationals are ``"p/q"`` strings with a decimal rendering beside them and
expressions use the prefix syntax of :func:`concatprover.realexpr.parse`.
"""
import datetime
import json
from dataclasses import dataclass, field
from fractions import Fraction

from concatprover import __version__
from concatprover.config import resolve
from concatprover.exceptions import CertificateError
from concatprover.util import fraction_to_str, parse_fraction

SCHEMA = "concatprover.certificate/1"

_SAFE_INT = 2 ** 53


@dataclass(frozen=True)
class Verified:
    name = "verified"

    def to_json(self):
        return {"status": self.name}


@dataclass(frozen=True)
class Discrepancy:
    details: str
    name = "discrepancy"

    def to_json(self):
        return {"status": self.name, "details": self.details}


@dataclass(frozen=True)
class Skipped:
    reason: str
    name = "skipped"

    def to_json(self):
        return {"status": self.name, "reason": self.reason}


@dataclass(frozen=True)
class Failed:
    details: str
    name = "failed"

    def to_json(self):
        return {"status": self.name, "details": self.details}


def status_from_json(obj):
    name = obj.get("status")
    if name == "verified":
        return Verified()
    if name == "discrepancy":
        return Discrepancy(obj.get("details", ""))
    if name == "skipped":
        return Skipped(obj.get("reason", ""))
    if name == "failed":
        return Failed(obj.get("details", ""))
    raise CertificateError("Unknown step status %r." % (name,))


def enc_int(v):
    v = int(v)
    return v if abs(v) < _SAFE_INT else str(v)


def dec_int(v):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise CertificateError("Expected an integer, got %r." % (v,))
    try:
        return int(v)
    except ValueError:
        raise CertificateError("Expected an integer, got %r." % (v,)) from None


def enc_fraction(x):
    x = Fraction(x)
    return {"exact": fraction_to_str(x), "decimal": fraction_to_str(x, 12)}


def dec_fraction(obj):
    try:
        return parse_fraction(obj["exact"] if isinstance(obj, dict) else obj)
    except (KeyError, ValueError, ZeroDivisionError):
        raise CertificateError("Malformed rational %r." % (obj,)) from None


def enc_expr(e):
    return str(e)


@dataclass
class Step:
    """One replayed argument.

    ``anchor`` names the argument in words, ``claims`` lists what :func:`check` re-verifies.
    """
    label: str
    anchor: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    status: object = field(default_factory=Verified)

    def claim(self, kind, **data):
        self.claims.append(dict(kind=kind, **data))

    def to_json(self):
        return {"label": self.label, "anchor": self.anchor, "inputs": self.inputs, "outputs": self.outputs,
                "claims": self.claims, **self.status.to_json()}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj["label"], obj.get("anchor", ""), dict(obj.get("inputs", {})),
                       dict(obj.get("outputs", {})), list(obj.get("claims", [])), status_from_json(obj))
        except (KeyError, TypeError, AttributeError):
            raise CertificateError("Malformed step %r." % (obj,)) from None


def environment(config=None):
    config = resolve(config)
    return {
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "start_bits": config.start_bits,
        "precision_cap": config.precision_cap,
        "sweep_start_margin": config.sweep_start_margin,
        "retry_convergents": config.retry_convergents,
        "epsilon_digits": config.epsilon_digits,
    }


@dataclass
class Certificate:
    theorem: int
    steps: list
    environment: dict
    conclusion: object = None
    notes: list = field(default_factory=list)

    def step(self, label):
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    @property
    def concluded(self):
        return self.conclusion is not None

    def to_json(self):
        return {
            "schema": SCHEMA,
            "theorem": self.theorem,
            "environment": self.environment,
            "notes": list(self.notes),
            "steps": [s.to_json() for s in self.steps],
            "conclusion": None if self.conclusion is None else sorted(enc_int(v) for v in self.conclusion),
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict):
            raise CertificateError("A certificate is a JSON object.")
        if obj.get("schema") != SCHEMA:
            raise CertificateError("Unsupported schema %r, expected %r." % (obj.get("schema"), SCHEMA))
        if obj.get("theorem") not in (1, 2):
            raise CertificateError("theorem must be 1 or 2, got %r." % (obj.get("theorem"),))
        steps = obj.get("steps")
        if not isinstance(steps, list):
            raise CertificateError("steps must be a list.")
        conclusion = obj.get("conclusion")
        if conclusion is not None:
            conclusion = frozenset(dec_int(v) for v in conclusion)
        return cls(obj["theorem"], [Step.from_json(s) for s in steps], dict(obj.get("environment", {})),
                   conclusion, list(obj.get("notes", [])))

    def dumps(self, indent=2):
        return json.dumps(self.to_json(), indent=indent)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps())
            f.write("\n")


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateError("Certificate is not valid JSON: %s" % e) from None
    return Certificate.from_json(obj)


def load(path):
    with open(path, "r", encoding="utf-8") as f:
        return loads(f.read())
