"""Numerics for sigma_k curvature, Bray's football constant alpha(eps) and its certified bound at eps = 1/2."""

from .errors import ConeError, DomainError, NumericalError
from .interval import Interval

__version__ = "0.1.0"

__all__ = ["ConeError", "DomainError", "NumericalError", "Interval", "__version__"]
