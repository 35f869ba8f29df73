"""Exception types shared across the package."""


class FprkitError(Exception):
    """Base class for all fprkit errors."""


class DomainError(FprkitError, ValueError):
    """An input is outside the mathematical domain of an operation."""


class InfeasibleError(DomainError):
    """No input in the allowed domain can achieve the requested target."""
