class ConcatProverError(Exception):
    """Base class of every error raised by concatprover."""


class DomainError(ConcatProverError, ValueError):
    """An operation was applied outside its mathematical domain."""


class PrecisionExhausted(ConcatProverError):
    """A certified decision could not be reached within the precision cap.

    Attributes:
        bits: the last precision (in bits) that was tried.
        partial: an optional partial result that *is* certified, e.g. the prefix of a continued fraction.
    """

    def __init__(self, message, bits=None, partial=None):
        super().__init__(message)
        self.bits = bits
        self.partial = partial


class UnsupportedElement(ConcatProverError, TypeError):
    """A height was requested for an element the height calculus does not know."""


class SideConditionViolated(ConcatProverError, ValueError):
    """A linear form was instantiated with indices outside its range of validity."""


class NoFiniteBound(ConcatProverError, ValueError):
    """A bound inequality does not admit a finite solution."""


class NotExcludable(ConcatProverError):
    """A congruence exclusion was requested for a shift that admits solutions."""


class StepFailed(ConcatProverError):
    """A step of a proof replay failed. ``step`` holds the failing step record."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class CertificateError(ConcatProverError, ValueError):
    """A certificate document is malformed."""
