from concatprover.exceptions import DomainError


def pisano_period(modulus):
    """Period of the Fibonacci sequence modulo ``modulus``, found by cycle detection.

    The period never exceeds ``6 * modulus``.
    """
    if not isinstance(modulus, int) or modulus < 2:
        raise DomainError("pisano_period needs a modulus >= 2, got %r." % (modulus,))
    a, b = 0, 1
    for period in range(1, 6 * modulus + 1):
        a, b = b, (a + b) % modulus
        if a == 0 and b == 1:
            return period
    raise AssertionError("Pisano period of %d exceeded 6*modulus." % modulus)


def fibonacci_residues(modulus, count):
    """``[F_0 mod modulus, ..., F_(count-1) mod modulus]``."""
    out = []
    a, b = 0, 1 % modulus
    for _ in range(count):
        out.append(a)
        a, b = b, (a + b) % modulus
    return out


def residue_class_excludes(shift, modulus):
    """True iff ``F_t = F_(t+shift) (mod modulus)`` has no solution ``t``.

    One full period of ``t`` decides it because both sides are periodic.
    """
    if shift < 1:
        raise DomainError("shift must be positive.")
    period = pisano_period(modulus)
    residues = fibonacci_residues(modulus, period + shift + 1)
    return all(residues[t] != residues[t + shift] for t in range(1, period + 1))
