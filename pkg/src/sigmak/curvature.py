"""Pointwise Schouten-tensor algebra and the comparison-geometry bounds built on it.

All tensors are plain numpy arrays in a fixed basis.  A
:class:`CurvaturePoint` holds the metric, Ricci tensor and scalar curvature at
one point; conformal changes are described by a caller-supplied 2-jet of the
conformal factor.  The module also contains the periodic solver for the
linearized sigma_k-Yamabe operator ``gamma_kn * Laplacian(h) + 2 * mean(h)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.linalg import eigh

from .errors import ConeError, DomainError
from .symm_poly import gamma_kn, in_gamma_k_plus, sigma_k, sigma_k_sphere

__all__ = [
    "CurvaturePoint",
    "ConformalJet",
    "PeriodicField",
    "LambdaBound",
    "schouten",
    "schouten_spectrum",
    "conformal_schouten",
    "yamabe_residual",
    "gvw_ricci_coefficient",
    "myers_bishop_bound",
    "lambda_bound_4d",
    "sphere_volume",
    "solve_linearized_periodic",
    "apply_linearized",
]

_CONSISTENCY_RTOL = 1e-10


def _symmetric(m: np.ndarray, name: str, atol: float = 1e-12) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"{name} must be a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    if not np.allclose(m, m.T, rtol=0.0, atol=atol * scale):
        raise DomainError(f"{name} is not symmetric")
    return 0.5 * (m + m.T)


@dataclass(frozen=True)
class CurvaturePoint:
    """Metric, Ricci tensor and scalar curvature at a point.

    ``R`` must equal ``trace(g^{-1} ric)`` to 1e-10 relative; inconsistent
    data is rejected at construction.
    """

    g: np.ndarray
    ric: np.ndarray
    R: float

    def __post_init__(self) -> None:
        g = _symmetric(self.g, "metric")
        ric = _symmetric(self.ric, "Ricci tensor")
        if g.shape != ric.shape:
            raise DomainError("metric and Ricci tensor shapes differ")
        if np.linalg.eigvalsh(g).min() <= 0.0:
            raise DomainError("metric is not positive definite")
        trace = float(np.trace(np.linalg.solve(g, ric)))
        if abs(trace - self.R) > _CONSISTENCY_RTOL * max(1.0, abs(self.R)):
            raise DomainError(f"scalar curvature {self.R} != trace(g^-1 Ric) = {trace}")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "ric", ric)
        object.__setattr__(self, "R", float(self.R))

    @property
    def n(self) -> int:
        return self.g.shape[0]

    @classmethod
    def from_ricci(cls, g, ric) -> "CurvaturePoint":
        g = np.asarray(g, dtype=float)
        ric = np.asarray(ric, dtype=float)
        return cls(g, ric, float(np.trace(np.linalg.solve(g, ric))))

    @classmethod
    def unit_sphere(cls, n: int) -> "CurvaturePoint":
        g = np.eye(n)
        return cls(g, (n - 1) * g, float(n * (n - 1)))


@dataclass(frozen=True)
class ConformalJet:
    """Value, gradient and covariant Hessian of the conformal factor u."""

    u: float
    du: np.ndarray
    hess_u: np.ndarray

    def __post_init__(self) -> None:
        du = np.asarray(self.du, dtype=float).reshape(-1)
        hess = _symmetric(self.hess_u, "Hessian of u")
        if hess.shape != (du.size, du.size):
            raise DomainError("gradient and Hessian sizes differ")
        object.__setattr__(self, "du", du)
        object.__setattr__(self, "hess_u", hess)

    @classmethod
    def constant(cls, n: int, u: float = 0.0) -> "ConformalJet":
        return cls(u, np.zeros(n), np.zeros((n, n)))


def schouten(p: CurvaturePoint) -> np.ndarray:
    n = p.n
    if n < 3:
        raise DomainError("Schouten tensor needs n >= 3")
    return (p.ric - p.R / (2.0 * (n - 1)) * p.g) / (n - 2)


def schouten_spectrum(A: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Eigenvalues of ``g^{-1} A`` in ascending order."""
    return eigh(_symmetric(A, "Schouten tensor", atol=1e-10), _symmetric(g, "metric"), eigvals_only=True)


def conformal_schouten(A: np.ndarray, jet: ConformalJet, g: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    g = np.asarray(g, dtype=float)
    n = jet.du.size
    if A.shape != (n, n) or g.shape != (n, n):
        raise DomainError(f"shape mismatch: A {A.shape}, g {g.shape}, jet dimension {n}")
    grad_sq = float(jet.du @ np.linalg.solve(g, jet.du))
    out = A + jet.hess_u + np.outer(jet.du, jet.du) - 0.5 * grad_sq * g
    return 0.5 * (out + out.T)


def yamabe_residual(p: CurvaturePoint, jet: ConformalJet, k: int) -> float:
    """Pointwise residual of the normalized sigma_k-Yamabe equation.

    ``sigma_k^{1/k}(A_u) - sigma_k^{1/k}(S^n) exp(-2u)`` where the eigenvalues
    of ``A_u`` are taken with respect to the background metric.
    """
    A_u = conformal_schouten(schouten(p), jet, p.g)
    eigs = schouten_spectrum(A_u, p.g)
    if not in_gamma_k_plus(eigs, k):
        raise ConeError(f"conformal Schouten spectrum {eigs} is not in Gamma_{k}^+")
    lhs = sigma_k(eigs, k) ** (1.0 / k)
    rhs = sigma_k_sphere(p.n, k) ** (1.0 / k) * math.exp(-2.0 * jet.u)
    return lhs - rhs


def gvw_ricci_coefficient(n: int, k: int) -> float:
    """Coefficient c in ``Ric >= c R g`` for k-admissible metrics, k > n/2."""
    if not (isinstance(n, int) and isinstance(k, int)) or k > n or k < 2 or 2 * k <= n:
        raise DomainError(f"Ricci lower bound needs n/2 < k <= n and k >= 2, got n={n}, k={k}")
    return (2 * k - n) / (2 * n * (k - 1))


def sphere_volume(n: int) -> float:
    """Volume of the unit round n-sphere."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"sphere dimension must be >= 1, got {n!r}")
    return 2.0 * math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2)


def myers_bishop_bound(n: int, ricci_lower: float) -> tuple[float, float]:
    """Diameter and volume bounds under ``Ric >= ricci_lower * g``.

    The comparison space is the round sphere of sectional curvature
    ``ricci_lower / (n - 1)``.
    """
    if ricci_lower <= 0.0 or not math.isfinite(ricci_lower):
        raise DomainError("Myers/Bishop bounds need a positive Ricci lower bound")
    if not isinstance(n, int) or n < 2:
        raise DomainError("dimension must be >= 2")
    radius = math.sqrt((n - 1) / ricci_lower)
    return math.pi * radius, sphere_volume(n) * radius**n


@dataclass(frozen=True)
class LambdaBound:
    value: float
    two_chi_plus_three_tau: int
    subcritical: bool


def lambda_bound_4d(chi: int, tau: int) -> LambdaBound:
    """Upper bound ``(2/9) pi^2 (2 chi + 3 tau)`` on the 4-d maximal volume.

    ``subcritical`` is set when ``2 chi + 3 tau < 12``, i.e. the bound lies
    strictly below ``vol(S^4) = 8 pi^2 / 3``.
    """
    s = 2 * int(chi) + 3 * int(tau)
    return LambdaBound(2.0 / 9.0 * math.pi**2 * s, s, s < 12)


# -- periodic linearized solver -------------------------------------------


@dataclass(frozen=True)
class PeriodicField:
    """Samples of a function on the unit d-torus on a uniform grid."""

    shape: tuple[int, ...]
    values: np.ndarray = field(repr=False)
    spacing: float

    def __post_init__(self) -> None:
        shape = tuple(int(s) for s in self.shape)
        vals = np.array(self.values, dtype=float).reshape(-1)
        if len(shape) not in (1, 2):
            raise DomainError("only 1-d and 2-d grids are supported")
        if math.prod(shape) != vals.size:
            raise DomainError("product(shape) must equal the number of values")
        if not self.spacing > 0.0:
            raise DomainError("spacing must be positive")
        vals.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "values", vals)

    @property
    def dim(self) -> int:
        return len(self.shape)

    @property
    def grid(self) -> np.ndarray:
        return self.values.reshape(self.shape)

    @classmethod
    def from_function(cls, func, points: int, dim: int = 1) -> "PeriodicField":
        h = 1.0 / points
        axis = np.arange(points) * h
        if dim == 1:
            vals = func(axis)
        else:
            X, Y = np.meshgrid(axis, axis, indexing="ij")
            vals = func(X, Y)
        return cls((points,) * dim, np.broadcast_to(vals, (points,) * dim), h)

    def mean(self) -> float:
        return float(self.values.mean())


Laplacian = Literal["spectral", "fd2"]


def _laplacian_symbol(shape: tuple[int, ...], spacing: float, kind: Laplacian) -> np.ndarray:
    symbols = []
    for m in shape:
        freq = np.fft.fftfreq(m, d=1.0 / m)
        if kind == "spectral":
            symbols.append(-((2.0 * math.pi * freq) ** 2))
        elif kind == "fd2":
            symbols.append(-4.0 / spacing**2 * np.sin(math.pi * freq / m) ** 2)
        else:
            raise DomainError(f"unknown Laplacian discretization {kind!r}")
    if len(symbols) == 1:
        return symbols[0]
    return symbols[0][:, None] + symbols[1][None, :]


def _check_grid(f: PeriodicField) -> None:
    if min(f.shape) < 4:
        raise DomainError("need at least 4 grid points per axis")
    for m in f.shape:
        if not math.isclose(m * f.spacing, 1.0, rel_tol=1e-12):
            raise DomainError("grid must cover the unit torus (points * spacing == 1)")


def apply_linearized(h: PeriodicField, n: int, k: int, laplacian: Laplacian = "spectral") -> PeriodicField:
    """Evaluate ``gamma_kn * Laplacian(h) + 2 * mean(h)`` on the grid."""
    _check_grid(h)
    symbol = _laplacian_symbol(h.shape, h.spacing, laplacian)
    lap = np.real(np.fft.ifftn(symbol * np.fft.fftn(h.grid)))
    out = gamma_kn(n, k) * lap + 2.0 * h.mean()
    return PeriodicField(h.shape, out, h.spacing)


def solve_linearized_periodic(
    f: PeriodicField, n: int, k: int, laplacian: Laplacian = "spectral"
) -> PeriodicField:
    """Invert the linearized operator on the unit torus.

    Solves ``gamma_kn * Laplacian(h1) = f - mean(f)`` with ``mean(h1) = 0`` and
    returns ``h = h1 + mean(f) / 2``; every right-hand side is solvable.
    """
    _check_grid(f)
    symbol = _laplacian_symbol(f.shape, f.spacing, laplacian)
    fhat = np.fft.fftn(f.grid)
    fbar = f.mean()
    fhat.flat[0] = 0.0
    inv = np.zeros_like(symbol)
    nonzero = symbol != 0.0
    inv[nonzero] = 1.0 / (gamma_kn(n, k) * symbol[nonzero])
    h1 = np.real(np.fft.ifftn(fhat * inv))
    h1 -= h1.mean()
    return PeriodicField(f.shape, h1 + 0.5 * fbar, f.spacing)
