"""
Exception hierarchy for the o(5) deformation toolkit.

Checkers report violations (Jacobi residues, failed relations) as data;
exceptions are reserved for inputs the operations cannot work with.
"""


class DeformationError(Exception):
    """Base class for all errors raised by the toolkit."""


class ParameterMismatchError(DeformationError, ValueError):
    """A parameter tuple does not match the expected length or field."""


class DomainError(DeformationError, ValueError):
    """An argument lies outside the domain of an operation (e.g. epsilon = 0)."""


class SingularMapError(DeformationError):
    """A linear map that must be invertible is singular."""


class NotACocycleError(DeformationError):
    """A cochain that must be closed has a nonzero differential."""


class DividedPowerOverflowError(DeformationError):
    """A divided-power product leaves the truncation bounds with a nonzero coefficient."""


class ConsistencyError(DeformationError):
    """A frozen table fails an internal consistency check."""


class GoldenDataError(DeformationError):
    """Golden data is missing, corrupted, or cannot be parsed."""
