from concatprover.prover.plan import ProofPlan, MU_FAMILIES, fib_lucas_mu, lucas_fib_mu, SQRT5_MU
from concatprover.prover.certificate import (SCHEMA, Certificate, Step, Verified, Discrepancy, Skipped, Failed,
                                             load, loads)
from concatprover.prover.mbound import Contradiction, NoContradiction, m_bound_argument
from concatprover.prover.certify import certify
from concatprover.prover.check import CheckFailure, CheckReport, REQUIRED_STEPS, check

__all__ = ["ProofPlan", "MU_FAMILIES", "fib_lucas_mu", "lucas_fib_mu", "SQRT5_MU",
           "SCHEMA", "Certificate", "Step", "Verified", "Discrepancy", "Skipped", "Failed", "load", "loads",
           "Contradiction", "NoContradiction", "m_bound_argument", "certify",
           "CheckFailure", "CheckReport", "REQUIRED_STEPS", "check"]
