"""Direct interval bound of ``I1 + I2`` at eps = 1/2, independent of the lemma chain.

With ``f(s) = sqrt((s^2 + s) / (s^2 + s - phi^3))`` the second integral is

    I2 = (4/pi) / (1 + phi^3) * int_phi^1 s^2 / sqrt((1 - s)(1 + s)) f(s) ds.

Splitting ``f = 1 + (f - 1)`` gives the exact part
``F(phi) = int_phi^1 s^2 / sqrt(1 - s^2) ds`` plus a remainder bounded by an
upper Riemann sum over 2^10 uniform s-cells.  On each cell the weight
``(1 - s)^(-1/2)`` is integrated exactly, ``s^2 / sqrt(1 + s)`` is taken at
the right end (it is increasing) and ``f - 1`` at the left end with the
largest phi (it decreases in s and increases in phi).

The bound cannot close at phi = 0, where ``I1 + I2 = 1`` exactly, so it
covers ``[PHI_MIN, 1]``; the lemma chain handles the neighbourhood of 0.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ..errors import DomainError
from ..interval import Interval, pi_i
from . import functions as fn
from .engine import DEFAULT_MAX_DEPTH, Certificate, IntervalKit, prove

__all__ = ["PHI_MIN", "S_CELLS", "verify_direct_sum", "remainder_upper"]

PHI_MIN = Fraction(1, 100)
S_CELLS = 2**10

_S_GRID = np.arange(S_CELLS + 1, dtype=float) / S_CELLS
_INF = np.inf


def _up(x):
    return np.nextafter(x, _INF)


def _down(x):
    return np.nextafter(x, -_INF)


def remainder_upper(phi_lo: float, phi_hi: float, cells: int = S_CELLS) -> float:
    """Upper bound of ``int_phi^1 s^2 (f - 1) / sqrt((1 - s)(1 + s)) ds`` over phi in the cell."""
    grid = _S_GRID if cells == S_CELLS else np.arange(cells + 1, dtype=float) / cells
    right = grid[1:]
    keep = right > phi_lo
    s_b = right[keep]
    s_a = np.maximum(grid[:-1][keep], phi_lo)

    # exact weight: int (1 - s)^(-1/2) ds = 2 (sqrt(1 - s_a) - sqrt(1 - s_b))
    mass = 2.0 * _up(_up(np.sqrt(_up(1.0 - s_a))) - _down(np.sqrt(np.maximum(_down(1.0 - s_b), 0.0))))
    mass = np.maximum(mass, 0.0)

    # s^2 / sqrt(1 + s) at the right end
    w = _up(_up(s_b * s_b) / _down(np.sqrt(_down(1.0 + s_b))))

    # f - 1 = phi^3 / (sqrt(A) (sqrt(B) + sqrt(A))),  B = s^2 + s,  A = B - phi^3
    c = _up(_up(phi_hi * phi_hi) * phi_hi)
    B = _down(_down(s_a * s_a) + s_a)
    A = _down(B - c)
    if np.any(A <= 0.0):
        raise DomainError("phi cell too wide for the remainder bound")
    rA = _down(np.sqrt(A))
    rB = _down(np.sqrt(B))
    fm1 = _up(c / _down(rA * _down(rB + rA)))

    terms = _up(_up(w * fm1) * mass)
    return float(_up(math.fsum(terms.tolist())))


def _check(phi: Interval) -> Interval:
    # (I1 + I2 - 1) * (pi/4)(1 + phi^3) = phi^3 c_1 + F + R - (pi/4)(1 + phi^3)
    ops = IntervalKit
    i1_part = phi**3 * fn.I1_cofactor(phi)
    # F is decreasing, so its range is spanned by the endpoint values
    f_range = Interval(fn.F(Interval(phi.hi, phi.hi), ops).lo, fn.F(Interval(phi.lo, phi.lo), ops).hi)
    rem = Interval(0.0, remainder_upper(phi.lo, phi.hi))
    return i1_part + f_range + rem - pi_i() / 4 * (1 + phi**3)


def verify_direct_sum(
    phi_min=PHI_MIN, max_depth: int = DEFAULT_MAX_DEPTH
) -> Certificate:
    """``I1 + I2 <= 1`` on ``[phi_min, 1]`` by direct interval quadrature."""
    phi_min = Fraction(phi_min)
    if not 0 < phi_min < 1:
        raise DomainError(f"phi_min must lie in (0, 1), got {phi_min}")
    return prove(
        "direct_sum",
        f"I1 + I2 - 1 < 0 on [{phi_min}, 1] (scaled by (pi/4)(1 + phi^3)), "
        f"{S_CELLS} s-cells with exact (1 - s)^(-1/2) weight",
        _check,
        (phi_min, 1),
        max_depth,
    )
