"""Phase-plane integration of the equality-case comparison ODE.

In coordinates ``x = F(V)``, ``y = F'(V)`` the extremal path obeys

    dy/dx = -1/2 x^(-1/3) y^(-1) max{ 3/2 R0 - (36 pi - y^2) / (3 x^(2/3)), 3 eps Ric0 }

and the half volume is the line integral of ``dx / y``.  This module
integrates that ODE directly with an adaptive Runge-Kutta method, giving an
oracle for the quadrature in :mod:`sigmak.bray_football` that shares no code
with it.

Integration runs in ``t = x^(1/3)`` with state ``D = 36 pi - y^2`` (no
cancellation while y is large) and switches to y as the independent variable
once y drops below ``Y_SWITCH``, where dy/dt blows up but dt/dy stays finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .bray_football import RIC0, R0, V0, y_of_z, z_range
from .errors import DomainError, NumericalError

__all__ = ["PhasePath", "ode_rhs", "phase_path", "Y_SWITCH"]

THIRTY_SIX_PI = 36.0 * math.pi
Y_SWITCH = 1e-3
_RTOL = 1e-11
_ATOL = 1e-13
_T_START = 1e-4


def ode_rhs(x: float, y: float, epsilon: float, R0: float = R0, Ric0: float = RIC0) -> float:
    """Equality-case ``dy/dx``; negative whenever x, y and eps are positive."""
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"ode_rhs needs x > 0 and y > 0, got x={x!r}, y={y!r}")
    scalar = 1.5 * R0 - (THIRTY_SIX_PI - y * y) / (3.0 * x ** (2.0 / 3.0))
    ricci = 3.0 * epsilon * Ric0
    return -0.5 * x ** (-1.0 / 3.0) / y * max(scalar, ricci)


@dataclass(frozen=True)
class PhasePath:
    epsilon: float
    z: float
    samples: tuple[tuple[float, float, float], ...]
    half_volume: float

    @property
    def alpha_candidate(self) -> float:
        return 2.0 * self.half_volume / V0

    @property
    def terminal_x(self) -> float:
        return self.samples[-1][0]


def _m_scalar(t, D):
    return 1.5 * R0 - D / (3.0 * t * t)


def phase_path(epsilon: float, z: float, samples_per_leg: int = 64) -> PhasePath:
    """Integrate the extremal path for ``(epsilon, z)`` from the y-axis down to y = 0.

    The Ricci branch is active for ``x < y(z)`` and the scalar branch after;
    the branches agree at the switch, so the right-hand side is continuous.
    """
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    z_min, z_max = z_range(epsilon)
    if not z_min <= z <= z_max:
        raise DomainError(f"z = {z!r} outside [{z_min!r}, {z_max!r}]")
    m_ricci = 3.0 * epsilon * RIC0
    T = y_of_z(z, epsilon) ** (1.0 / 3.0)
    d_switch = THIRTY_SIX_PI - Y_SWITCH**2

    pieces: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []

    def record_t(sol, t0, t1):
        ts = np.linspace(t0, t1, samples_per_leg)
        D, V = sol.sol(ts)
        pieces.append((ts**3, np.sqrt(np.maximum(THIRTY_SIX_PI - D, 0.0)), V))

    def reached_switch(t, s):
        return d_switch - s[0]

    reached_switch.terminal = True
    reached_switch.direction = -1

    def run(rhs, t0, t1, state):
        sol = solve_ivp(rhs, (t0, t1), state, method="RK45", rtol=_RTOL, atol=_ATOL,
                        dense_output=True, events=reached_switch)
        if sol.status == -1:
            raise NumericalError(f"phase-plane integration failed: {sol.message}")
        t_end = float(sol.t[-1])
        record_t(sol, t0, t_end)
        return t_end, sol.y[:, -1], sol.status == 1

    def ricci_rhs(t, s):
        y = math.sqrt(max(THIRTY_SIX_PI - s[0], 0.0))
        return [3.0 * t * m_ricci, 3.0 * t * t / y]

    def scalar_rhs(t, s):
        y = math.sqrt(max(THIRTY_SIX_PI - s[0], 0.0))
        return [3.0 * t * _m_scalar(t, s[0]), 3.0 * t * t / y]

    if T > 0.0:
        # Ricci regime from the y-axis: state (D, V) = (36 pi - y0^2, 0)
        d0 = (27.0 - 18.0 * epsilon) * T * T - 9.0 * epsilon * T * T
        t, state, switched = run(ricci_rhs, 0.0, T, [d0, 0.0])
        if not switched:
            t, state, switched = run(scalar_rhs, T, math.sqrt(z), state)
    else:
        # z = 4 pi: start a hair off the regular-singular point on D = 9 t^2
        t0 = _T_START
        y0 = math.sqrt(THIRTY_SIX_PI - 9.0 * t0 * t0)
        v0 = t0**3 / y0
        t, state, switched = run(scalar_rhs, t0, math.sqrt(z), [9.0 * t0 * t0, v0])
    if not switched:
        raise NumericalError("path did not approach the x-axis before x = z^(3/2)")

    # swap to y as the independent variable: state (t, V)
    y_start = math.sqrt(THIRTY_SIX_PI - state[0])

    def m_of(t, y):
        return m_ricci if t < T else _m_scalar(t, THIRTY_SIX_PI - y * y)

    def y_rhs(y, s):
        m = m_of(s[0], y)
        return [-2.0 * y / (3.0 * s[0] * m), -2.0 * s[0] / m]

    sol = solve_ivp(y_rhs, (y_start, 0.0), [t, state[1]], method="RK45", rtol=_RTOL,
                    atol=_ATOL, dense_output=True)
    if sol.status != 0:
        raise NumericalError(f"terminal integration failed: {sol.message}")
    ys = np.linspace(y_start, 0.0, samples_per_leg)
    ts, Vs = sol.sol(ys)
    pieces.append((ts**3, ys, Vs))

    xs = np.concatenate([p[0] for p in pieces])
    yv = np.concatenate([p[1] for p in pieces])
    vv = np.concatenate([p[2] for p in pieces])
    samples = tuple((float(a), float(b), float(c)) for a, b, c in zip(xs, yv, vv))
    return PhasePath(epsilon=epsilon, z=z, samples=samples, half_volume=float(sol.y[1, -1]))
