"""Certified replay of the Fibonacci/Lucas mixed-concatenation theorems."""

__version__ = "0.1.0"

from concatprover.exceptions import (ConcatProverError, DomainError, PrecisionExhausted, UnsupportedElement,
                                     SideConditionViolated, NoFiniteBound, NotExcludable, StepFailed,
                                     CertificateError)
from concatprover.config import ProverConfig

__all__ = ["__version__", "ConcatProverError", "DomainError", "PrecisionExhausted", "UnsupportedElement",
           "SideConditionViolated", "NoFiniteBound", "NotExcludable", "StepFailed", "CertificateError",
           "ProverConfig"]
