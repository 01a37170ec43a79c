"""Exception types shared by every module."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ToleranceUnreachable(RuntimeError):
    """A series would need more modes than the configured cap to meet tol."""
