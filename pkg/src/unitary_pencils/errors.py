"""Error types shared across modules."""


class DomainError(ValueError):
    """Inputs lie outside the region where the requested quantity is defined."""


class NumericalError(ArithmeticError):
    """A floating-point routine failed to produce a trustworthy answer."""


class ResourceError(RuntimeError):
    """The requested computation exceeds a configured size cap."""
