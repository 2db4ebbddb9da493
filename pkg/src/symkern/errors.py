"""Exception hierarchy shared across the package.

DomainError maps to CLI exit code 3 (request outside the supported
parameter range), NumericalError to exit code 4 (a computation that
should have succeeded did not).
"""


class DomainError(Exception):
    """Requested (group, delta) combination is outside the supported domain."""


class ClosedFormUnavailableError(DomainError):
    """No closed-form kernel for this space (Sp/SO pairs need delta <= 2)."""


class UnsupportedRangeError(DomainError):
    """Sharp embedding constants need delta <= 2 for Sp/SO(even)/SO(odd)."""


class NumericalError(Exception):
    """A numerical procedure failed (singular system, missing root, ...)."""


class SingularMatrixError(NumericalError):
    """Dense solve hit a pivot below the singularity threshold."""


class NoRootFoundError(NumericalError):
    """A root scan found no sign change where one was required."""


class NonFiniteIntegrandError(NumericalError):
    """A quadrature sample evaluated to NaN or infinity."""
