"""Closed-form ingredients of the eps = 1/2 volume bound, written once per kit.

Every function takes the argument ``phi`` and a kit ``ops`` (see
:mod:`.engine`) supplying ``c`` (exact constants), ``sqrt``, ``asin`` and
``pi``; the same text then evaluates in floats, intervals, or interval duals.
Polynomials are written in forms that keep interval overestimation small,
e.g. ``2 + 2 phi^3 - 3 phi^2 = 1 + (1 - phi)^2 (1 + 2 phi)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DomainError
from ..interval import Interval, arcsin_i
from .engine import FloatKit, IntervalKit

__all__ = [
    "P",
    "Q",
    "S",
    "E",
    "E_cofactor",
    "F",
    "G",
    "H",
    "H_prime",
    "J",
    "K",
    "I1_value",
    "I1_cofactor",
    "I1_float",
    "f_taylor_weight",
    "g_taylor_weight",
    "asin_excess",
    "asin_excess_enclosure",
]

HALF = Fraction(1, 2)
_SERIES_CUTOFF = 1.0 / 64.0


def P(phi, ops):
    """``2 + 2 phi^3 - 3 phi^2``, which is at least 1 on [0, 1]."""
    return 1 + (1 - phi) ** 2 * (1 + 2 * phi)


def Q(phi, ops):
    """``2 + 2 phi^3 - 4 phi^2``, vanishing at phi = 1."""
    return 2 * (1 - phi) * S(phi, ops)


def S(phi, ops):
    """``1 + phi - phi^2``."""
    return ops.c(Fraction(5, 4)) - (phi - HALF) ** 2


def E(phi, ops):
    return ops.sqrt(1 + phi) / ops.sqrt(S(phi, ops)) - HALF * phi**2 / (1 + phi)


def E_cofactor(phi, ops):
    """``e`` with ``E(phi) = 1 + phi^4 e(phi)``."""
    s = S(phi, ops)
    rs = ops.sqrt(s)
    ra = ops.sqrt(1 + phi)
    num = 3 + 3 * phi + phi**2
    den = ((1 + phi + phi**2) + ra * rs) * 2 * (1 + phi) * rs * (ra + rs)
    return num / den


def F(phi, ops):
    return ops.pi() / 4 + HALF * phi * ops.sqrt((1 - phi) * (1 + phi)) - HALF * ops.asin(phi)


def f_taylor_weight(s, ops):
    """``h(s)`` with ``1/sqrt(1 - s^2) - 1 = s^2 h(s)``; increasing on [0, 1)."""
    r = ops.sqrt((1 - s) * (1 + s))
    return 1 / (r * (1 + r))


def G(phi, ops):
    return ops.pi() / 4 - HALF * ops.sqrt((1 - phi) / (1 + phi)) - HALF * ops.asin(phi)


def g_taylor_weight(s, ops):
    """``k(s)`` with ``G'(s) = -s k(s)``; increasing on [0, 1)."""
    return 1 / (2 * (1 + s) * ops.sqrt((1 - s) * (1 + s)))


def H(phi, ops):
    """Upper bound for ``I1 + I2`` used on [4/5, 1]."""
    r2 = ops.sqrt(2)
    first = r2 / 2 * P(phi, ops) * ops.asin(phi)
    second = ops.sqrt(1 - phi) * (-phi * ops.sqrt(S(phi, ops)) + Fraction(4, 3) + Fraction(2, 3) * phi)
    return 4 / ops.pi() / (1 + phi**3) * (first + second)


def H_prime(phi: float) -> float:
    """Hand-differentiated ``H'`` (floats only; cross-checked against finite differences)."""
    p3 = 1.0 + phi**3
    r2 = math.sqrt(2.0)
    a = math.asin(phi)
    r1 = math.sqrt(1.0 - phi)
    rs = math.sqrt(1.0 + phi - phi * phi)
    poly = 2.0 - 3.0 * phi**2 + 2.0 * phi**3
    lin = 4.0 / 3.0 + 2.0 * phi / 3.0
    total = (
        2.0 * r2 * (-6.0 * phi + 6.0 * phi**2) * a / p3
        - 6.0 * r2 * phi**2 * poly * a / p3**2
        - 2.0 * lin / (r1 * p3)
        - 2.0 * phi * (-4.0 * phi + 3.0 * phi**2) / (p3 * r1 * rs)
        + 2.0 * r2 * poly / (math.sqrt(1.0 - phi * phi) * p3)
        - 12.0 * r1 * lin * phi**2 / p3**2
        + 12.0 * phi**3 * r1 * rs / p3**2
        + 8.0 * r1 / (3.0 * p3)
        - 4.0 * r1 * rs / p3
    )
    return total / math.pi


def J(phi, ops):
    s = S(phi, ops)
    return (
        -Fraction(4, 3)
        - Fraction(2, 3) * phi
        + phi * (4 * phi - 3 * phi**2) / ops.sqrt(s)
        + ops.sqrt(2) * P(phi, ops) / ops.sqrt(1 + phi)
    )


def K(phi, ops):
    return -Fraction(4, 3) - Fraction(2, 3) * phi + phi * ops.sqrt(S(phi, ops))


# -- arcsin excess g(u) = (arcsin u - u) / u^3 --------------------------------
#
# arcsin u - u = sum_{j>=1} a_j u^(2j+1) with a_1 = 1/6 and a_j positive and
# decreasing, so g is increasing on [0, 1] and
#     1/6 <= g(u) <= 1/6 + (3/40) u^2 / (1 - u^2).


def asin_excess(u: float) -> float:
    if u < _SERIES_CUTOFF:
        u2 = u * u
        return 1.0 / 6.0 + u2 * (3.0 / 40.0 + u2 * (5.0 / 112.0 + u2 * 35.0 / 1152.0))
    return (math.asin(u) - u) / u**3


def _g_point(u: float) -> Interval:
    if u < _SERIES_CUTOFF:
        u_i = Interval(u, u)
        upper = Interval.coerce(Fraction(1, 6)) + Fraction(3, 40) * u_i**2 / (1 - u_i**2)
        return Interval(Interval.coerce(Fraction(1, 6)).lo, upper.hi)
    u_i = Interval(u, u)
    return (arcsin_i(u_i) - u_i) / u_i**3


def asin_excess_enclosure(u: Interval) -> Interval:
    """Enclosure of ``g`` over ``u`` (a subset of [0, 1]) from monotonicity."""
    if u.lo < 0.0 or u.hi > 1.0:
        raise DomainError(f"asin_excess needs u in [0, 1], got {u}")
    return Interval(_g_point(u.lo).lo, _g_point(u.hi).hi)


# -- first integral in phi (eps = 1/2) ---------------------------------------


def I1_cofactor(phi: Interval) -> Interval:
    """``c`` with ``I1(phi) = (4/pi) / (1 + phi^3) * phi^3 * c(phi)``."""
    ops = IntervalKit
    p = P(phi, ops)
    rp = ops.sqrt(p)
    rq = ops.sqrt(Q(phi, ops))
    x = (phi / rp).intersect(Interval(0.0, 1.0))
    r2 = ops.sqrt(2)
    return r2 / 2 * (asin_excess_enclosure(x) / rp + 1 / (rp + rq))


def I1_value(phi: Interval) -> Interval:
    """Enclosure of the closed form of ``I1`` over ``phi``."""
    ops = IntervalKit
    return 4 / ops.pi() / (1 + phi**3) * phi**3 * I1_cofactor(phi)


def I1_float(phi: float) -> float:
    ops = FloatKit
    p = P(phi, ops)
    q = max(Q(phi, ops), 0.0)
    x = min(phi / math.sqrt(p), 1.0)
    bracket = p * math.asin(x) - math.sqrt(q) * phi
    return 4.0 / math.pi / (1.0 + phi**3) * math.sqrt(2.0) / 2.0 * bracket
