"""Numerical evaluation of Bray's football volume-comparison constant alpha(eps).

Normalization is the unit round 3-sphere: scalar curvature 6, Ricci
eigenvalue 2, volume 2 pi^2.  For a trial parameter ``z`` the comparison
profile switches from the Ricci-limited regime to the scalar-limited regime
at ``x = y(z)``; the two pieces give the integrals ``I1`` and ``I2`` (both
already divided by pi^2, so ``I1 + I2`` is a volume ratio).

Both integrands are evaluated after the cube-root substitution ``x = t**3``,
which turns the ``x**(-1/3)`` behaviour into a smooth integrand and leaves at
most an inverse-square-root singularity at one endpoint; that is handled by
tanh-sinh quadrature with cancellation-free endpoint distances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .quadrature import QuadResult, tanh_sinh

__all__ = [
    "R0",
    "RIC0",
    "V0",
    "FOUR_PI",
    "AlphaEvaluation",
    "Epsilon0Result",
    "z_range",
    "y_of_z",
    "phi_of_z",
    "z_of_phi",
    "I1",
    "I2",
    "I1_closed_form",
    "integral_sum",
    "alpha",
    "epsilon0",
]

R0 = 6.0
RIC0 = 2.0
V0 = 2.0 * math.pi**2
FOUR_PI = 4.0 * math.pi

DEFAULT_QUAD_TOL = 1e-12
GRID_POINTS = 256
_Z_SLACK = 1e-12
# radicand gaps below this (relative) are rounding noise of their own computation
_GAP_NOISE = 64 * 2.0**-52


@dataclass(frozen=True)
class AlphaEvaluation:
    epsilon: float
    alpha: float
    z_star: float
    quad_error: float
    n_evals: int


@dataclass(frozen=True)
class Epsilon0Result:
    estimate: float
    bracket: tuple[float, float]
    iterations: int

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


def _check_eps(eps: float, allow_one: bool = False) -> None:
    upper_ok = eps <= 1.0 if allow_one else eps < 1.0
    if not (eps > 0.0 and upper_ok):
        bound = "(0, 1]" if allow_one else "(0, 1)"
        raise DomainError(f"epsilon must lie in {bound}, got {eps!r}")


def z_range(eps: float) -> tuple[float, float]:
    _check_eps(eps, allow_one=True)
    return FOUR_PI / (3.0 - 2.0 * eps), FOUR_PI


def _check_z(z: float, eps: float) -> float:
    z_min, z_max = z_range(eps)
    if not (z_min * (1 - _Z_SLACK) <= z <= z_max * (1 + _Z_SLACK)):
        raise DomainError(f"z = {z!r} outside [{z_min!r}, {z_max!r}] for eps = {eps!r}")
    return min(max(z, z_min), z_max)


def y_of_z(z: float, eps: float) -> float:
    """Regime switch point ``z**0.5 (4 pi - z) / (2 (1 - eps))``."""
    _check_eps(eps)
    z = _check_z(z, eps)
    return math.sqrt(z) * (FOUR_PI - z) / (2.0 * (1.0 - eps))


def phi_of_z(z: float) -> float:
    if not 0.0 < z <= FOUR_PI:
        raise DomainError(f"z must lie in (0, 4 pi], got {z!r}")
    return ((FOUR_PI - z) / z) ** (1.0 / 3.0)


def z_of_phi(phi: float) -> float:
    if phi < 0.0:
        raise DomainError(f"phi must be non-negative, got {phi!r}")
    return FOUR_PI / (1.0 + phi**3)


def _i1_quad(z: float, eps: float, tol: float) -> QuadResult:
    Y = y_of_z(z, eps)
    if Y <= 0.0:
        return QuadResult(0.0, 0.0, 0, 0)
    T = Y ** (1.0 / 3.0)
    # radicand at the upper limit; zero exactly at z = z_min
    gap = 36.0 * math.pi - (27.0 - 18.0 * eps) * T * T
    if gap < -1e-9:
        raise DomainError(f"I1 radicand negative at the switch point (z = {z!r})")
    if gap < _GAP_NOISE * 36.0 * math.pi:
        gap = 0.0
    b = 9.0 * eps * T * T
    scale = 6.0 * T**3 / math.pi**2

    def integrand(v, dl, dr):
        # u = 1 - v^2 removes the (1 - u)^(-1/2) endpoint behaviour
        u = dr * (1.0 + v)
        with np.errstate(over="ignore", divide="ignore"):
            return scale * u * u / np.sqrt(gap / (v * v) + b * (1.0 + u))

    return tanh_sinh(integrand, 0.0, 1.0, tol=tol)


def _i2_quad(z: float, eps: float, tol: float) -> QuadResult:
    Y = y_of_z(z, eps)
    phi3 = (FOUR_PI - z) / z
    s_lo = Y ** (1.0 / 3.0) / math.sqrt(z)
    if s_lo >= 1.0:
        return QuadResult(0.0, 0.0, 0, 0)
    gap = s_lo * s_lo + s_lo - phi3
    if gap < -1e-9:
        raise DomainError(f"I2 radicand negative at the lower limit (z = {z!r})")
    if gap < _GAP_NOISE:
        gap = 0.0
    scale = z / math.pi**2

    def integrand(s, dl, dr):
        quad = gap + dl * (s + s_lo + 1.0)
        return scale * s**2.5 / np.sqrt(dr * quad)

    return tanh_sinh(integrand, s_lo, 1.0, tol=tol)


def I1(z: float, epsilon: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    """Ricci-regime integral ``(1/pi^2) int_0^{y(z)} (36 pi - 27(1-eps) y^(2/3) - 9 eps x^(2/3))^(-1/2) dx``."""
    return _i1_quad(z, epsilon, tol).value


def I2(z: float, epsilon: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    """Scalar-regime integral ``(1/pi^2) int_{y(z)}^{z^(3/2)} (36 pi - 18(1-eps) y x^(-1/3) - 9 x^(2/3))^(-1/2) dx``."""
    return _i2_quad(z, epsilon, tol).value


def integral_sum(z: float, epsilon: float, tol: float = DEFAULT_QUAD_TOL) -> tuple[float, float, int]:
    """``(I1 + I2, error estimate, integrand evaluations)`` at one z."""
    if z == FOUR_PI:
        # pure scalar regime: (4/pi) int_0^1 s^2 (1 - s^2)^(-1/2) ds = 1
        return 1.0, 0.0, 0
    r1 = _i1_quad(z, epsilon, tol)
    r2 = _i2_quad(z, epsilon, tol)
    return r1.value + r2.value, r1.error + r2.error, r1.n_evals + r2.n_evals


def I1_closed_form(phi: float) -> float:
    """Closed form of ``I1`` at eps = 1/2 in the variable ``phi = ((4 pi - z)/z)^(1/3)``."""
    if not 0.0 <= phi <= 1.0:
        raise DomainError(f"phi must lie in [0, 1], got {phi!r}")
    p2, p3 = phi * phi, phi**3
    P = 2.0 + 2.0 * p3 - 3.0 * p2
    Q = max(2.0 + 2.0 * p3 - 4.0 * p2, 0.0)
    arg = min(phi / math.sqrt(P), 1.0)
    bracket = P * math.asin(arg) - math.sqrt(Q) * phi
    return (4.0 / math.pi) / (1.0 + p3) * (math.sqrt(2.0) / 2.0) * bracket


# -- supremum over z ---------------------------------------------------------

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, a: float, b: float, xtol: float) -> tuple[float, float]:
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


class _Objective:
    """Memoized ``I1 + I2`` in z with running error and work counters."""

    def __init__(self, eps: float, tol: float) -> None:
        self.eps = eps
        self.tol = tol
        self.cache: dict[float, tuple[float, float]] = {}
        self.n_evals = 0

    def __call__(self, z: float) -> float:
        hit = self.cache.get(z)
        if hit is None:
            value, err, n = integral_sum(z, self.eps, self.tol)
            self.n_evals += n
            hit = self.cache[z] = (value, err)
        return hit[0]

    def error(self, z: float) -> float:
        return self.cache[z][1]


def _grid(eps: float, points: int) -> np.ndarray:
    z_min, z_max = z_range(eps)
    zs = np.linspace(z_min, z_max, points)
    zs[-1] = z_max
    return zs


def _refine(obj: _Objective, zs: np.ndarray, idx: int, lo_idx: int, hi_idx: int) -> tuple[float, float]:
    a = zs[max(idx - 1, lo_idx)]
    b = zs[min(idx + 1, hi_idx)]
    return _golden_max(obj, float(a), float(b), xtol=1e-10 * (zs[-1] - zs[0]))


def alpha(epsilon: float, tol: float = DEFAULT_QUAD_TOL, grid_points: int = GRID_POINTS) -> AlphaEvaluation:
    """Supremum of ``I1 + I2`` over the admissible z-interval.

    A uniform grid locates candidates; golden-section search refines around
    the three best grid points.  ``eps = 1`` is the Bishop limit, alpha = 1.
    """
    _check_eps(epsilon, allow_one=True)
    if epsilon == 1.0:
        return AlphaEvaluation(1.0, 1.0, FOUR_PI, 0.0, 0)
    obj = _Objective(epsilon, tol)
    zs = _grid(epsilon, grid_points)
    values = np.array([obj(float(z)) for z in zs])
    best_z, best_v = float(zs[-1]), 1.0
    order = np.argsort(-values, kind="stable")[:3]
    candidates = [(float(zs[i]), float(values[i])) for i in order]
    for i in order:
        candidates.append(_refine(obj, zs, int(i), 0, len(zs) - 1))
    for z, v in candidates:
        if v > best_v:
            best_z, best_v = z, v
    return AlphaEvaluation(
        epsilon=epsilon,
        alpha=best_v,
        z_star=best_z,
        quad_error=obj.error(best_z),
        n_evals=obj.n_evals,
    )


def interior_max(epsilon: float, tol: float = DEFAULT_QUAD_TOL, grid_points: int = GRID_POINTS) -> tuple[float, float]:
    """Largest ``I1 + I2`` away from the grid endpoints, refined by golden section."""
    _check_eps(epsilon)
    obj = _Objective(epsilon, tol)
    zs = _grid(epsilon, grid_points)
    inner = np.array([obj(float(z)) for z in zs[1:-1]])
    i = int(np.argmax(inner)) + 1
    z_ref, v_ref = _refine(obj, zs, i, 1, len(zs) - 2)
    if inner[i - 1] >= v_ref:
        return float(zs[i]), float(inner[i - 1])
    return z_ref, v_ref


def epsilon0(
    tol: float = 1e-4,
    bracket: tuple[float, float] = (0.05, 0.5),
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> Epsilon0Result:
    """Bisection for the smallest eps with alpha(eps) = 1.

    The indicator is whether some interior z has ``I1 + I2 > 1``.
    """
    lo, hi = bracket

    def above_one(eps: float) -> bool:
        return interior_max(eps, quad_tol)[1] > 1.0

    if not above_one(lo) or above_one(hi):
        raise NumericalError(f"bracket {bracket} does not straddle the alpha = 1 transition")
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if above_one(mid):
            lo = mid
        else:
            hi = mid
        iterations += 1
    return Epsilon0Result(0.5 * (lo + hi), (lo, hi), iterations)
