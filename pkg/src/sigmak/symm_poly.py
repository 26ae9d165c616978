"""Elementary symmetric functions of Schouten eigenvalues.

Gårding cone membership is decided by the standard characterization
``sigma_j > 0 for j = 1..k``; the test is strict, so boundary points of the
(open) cone report ``False``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ConeError, DomainError

__all__ = [
    "Spectrum",
    "ConeReport",
    "elementary_symmetric",
    "sigma_k",
    "in_gamma_k_plus",
    "cone_report",
    "normalized_sigma",
    "lambda_k",
    "sigma_k_sphere",
    "gamma_kn",
]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of ``g^{-1} A`` at a point of an n-manifold, n >= 3."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if len(vals) < 3:
            raise DomainError(f"spectrum needs n >= 3 entries, got {len(vals)}")
        if not all(math.isfinite(v) for v in vals):
            raise DomainError("spectrum entries must be finite")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)


SpectrumLike = Union[Spectrum, Sequence[float]]


@dataclass(frozen=True)
class ConeReport:
    max_k: int
    sigmas: tuple[float, ...]


def _as_spectrum(s: SpectrumLike) -> Spectrum:
    return s if isinstance(s, Spectrum) else Spectrum(tuple(s))


def _check_k(n: int, k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= n:
        raise DomainError(f"k must satisfy 1 <= k <= n = {n}, got {k!r}")


def elementary_symmetric(values: Sequence[float], kmax: int | None = None) -> list[float]:
    """Return ``[sigma_0, ..., sigma_kmax]`` via the product recurrence.

    Expands ``prod_i (1 + x_i t)`` truncated at degree ``kmax``; O(n * kmax).
    """
    n = len(values)
    kmax = n if kmax is None else kmax
    e = [1.0] + [0.0] * kmax
    for count, x in enumerate(values, start=1):
        for j in range(min(count, kmax), 0, -1):
            e[j] += x * e[j - 1]
    return e


def sigma_k(s: SpectrumLike, k: int) -> float:
    eigs = _as_spectrum(s)
    _check_k(eigs.n, k)
    return elementary_symmetric(eigs.values, k)[k]


def in_gamma_k_plus(s: SpectrumLike, k: int) -> bool:
    eigs = _as_spectrum(s)
    _check_k(eigs.n, k)
    e = elementary_symmetric(eigs.values, k)
    return all(e[j] > 0.0 for j in range(1, k + 1))


def cone_report(s: SpectrumLike) -> ConeReport:
    eigs = _as_spectrum(s)
    e = elementary_symmetric(eigs.values)
    max_k = 0
    for j in range(1, eigs.n + 1):
        if e[j] <= 0.0:
            break
        max_k = j
    return ConeReport(max_k=max_k, sigmas=tuple(e[1:]))


def normalized_sigma(s: SpectrumLike, k: int) -> float:
    """``C(n,k)^{-1/k} sigma_k^{1/k}``; non-increasing in k on the cone."""
    eigs = _as_spectrum(s)
    _check_k(eigs.n, k)
    if not in_gamma_k_plus(eigs, k):
        raise ConeError(f"spectrum {eigs.values} is not in Gamma_{k}^+")
    return (sigma_k(eigs, k) / math.comb(eigs.n, k)) ** (1.0 / k)


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    _check_k(n, k)


def lambda_k(n: int, k: int) -> float:
    """The constant with ``sigma_k(lambda_k * g) = 1``."""
    _check_nk(n, k)
    return math.comb(n, k) ** (-1.0 / k)


def sigma_k_sphere(n: int, k: int) -> float:
    """sigma_k of the Schouten tensor ``g/2`` of the unit round n-sphere."""
    _check_nk(n, k)
    return math.comb(n, k) * 2.0 ** (-k)


def gamma_kn(n: int, k: int) -> float:
    """Laplacian coefficient ``(n lambda_k)^{-1}`` of the linearized operator."""
    return 1.0 / (n * lambda_k(n, k))
