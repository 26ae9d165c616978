"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class ConeError(ValueError):
    """A spectrum is not in the Garding cone required by the operation."""


class NumericalError(RuntimeError):
    """A numerical procedure (ODE integration, quadrature) failed to converge."""
