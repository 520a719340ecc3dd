"""Exception types shared across the package."""


class SexticError(Exception):
    """Base class for errors raised by this package."""


class DomainError(SexticError, ValueError):
    """Argument outside the region where the requested quantity is evaluated."""


class PathNearSingularityError(DomainError):
    """Continuation path or target comes within the exclusion radius of a branch point."""


class InvalidStateError(SexticError, ValueError):
    """Initial data that does not satisfy s^6 + c^6 = 1 within tolerance."""
