"""Certificates for the inequality chain behind ``I1 + I2 <= 1`` at eps = 1/2.

Small phi, [0, 4/5]:
    I1 <= (4/pi) / (1 + phi^3) * (61/100) phi^3, and I2 <= (4/pi) / (1 + phi^3)
    * (E F + G phi^3) with separate bounds on E, F, E F and G.
Large phi, [4/5, 1]:
    I1 + I2 <= H(phi), H(4/5) < 0.9881, and H' < 0 through a three-part
    decomposition of H'.

Inequalities with an equality endpoint are rewritten so that the vanishing
factor (phi^3, phi^4, (1 - phi)^2, ...) is explicit and only the cofactor is
bounded by intervals.  Two lemmas (F and G) use the integral form of the mean
value theorem: ``F(phi) - pi/4 + phi^3/3 = -phi^5/5 * h(xi)`` for some xi in
[0, phi], so it suffices to enclose h on [0, phi].
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError
from ..interval import Interval, arcsin_i, pi_i, sqrt_i
from . import functions as fn
from .backup import verify_direct_sum
from .engine import (
    DEFAULT_MAX_DEPTH,
    Certificate,
    DualKit,
    IDual,
    IntervalKit,
    combine,
    prove,
    scalar_check,
)

__all__ = [
    "LEMMA_IDS",
    "verify_arcsin_cubic",
    "verify_I1_small",
    "verify_EFG",
    "verify_sum_small",
    "verify_H_large",
    "verify_theorem_eps_half",
    "verify_lemma",
]

IK = IntervalKit
SPLIT = Fraction(4, 5)
I1_COEFF = Fraction(61, 100)
H_AT_SPLIT_BOUND = Fraction(9881, 10000)


def _frac(x) -> Fraction:
    return Fraction(x) if not isinstance(x, Fraction) else x


def _check_unit(name: str, x: Fraction, allow_zero: bool = False) -> None:
    if not ((x >= 0 if allow_zero else x > 0) and x <= 1):
        raise DomainError(f"{name} must lie in (0, 1], got {x}")


# -- arcsin x <= x + m x^3 on [0, beta] --------------------------------------


def arcsin_cubic_m(beta: Fraction) -> Interval:
    """Enclosure of ``m = (arcsin beta - beta) / beta^3``."""
    b = Interval.coerce(beta)
    return (arcsin_i(b) - b) / b**3


def verify_arcsin_cubic(beta=SPLIT, max_depth: int = DEFAULT_MAX_DEPTH) -> Certificate:
    """``arcsin x - x - m x^3 <= 0`` on ``[0, beta]``, m as defined by beta.

    Writing the difference as ``x^3 (g(x) - m)`` with g increasing makes the
    x = 0 end an equality cell.  At x = beta the difference vanishes; there
    the cell is closed by showing the difference is nondecreasing, which for
    ``d/dx = 1/sqrt(1 - x^2) - 1 - 3 m x^2`` is equivalent to
    ``1 - (1 + 3 m x^2)^2 (1 - x^2) >= 0``.
    """
    beta = _frac(beta)
    _check_unit("beta", beta)
    m = arcsin_cubic_m(beta)

    def check(x: Interval) -> Interval:
        raw = x**3 * (fn.asin_excess_enclosure(x) - m)
        if raw.hi <= 0.0 or not x.contains(beta):
            return raw
        slope = 1 - (1 + 3 * m * x**2) ** 2 * (1 - x**2)
        if slope.lo >= 0.0:
            return Interval(min(raw.lo, 0.0), 0.0)
        return raw

    cert = prove(
        "arcsin_cubic.cells",
        f"arcsin(x) <= x + m x^3 on [0, {beta}], m = (arcsin({beta}) - {beta}) / ({beta})^3",
        check,
        (0, beta),
        max_depth,
        equality_points=(0, beta),
    )
    sixth = Interval.coerce(Fraction(1, 6))
    m_check = scalar_check("m", "enclosure of m; m > 1/6", m, m.lo > sixth.hi)
    return combine("arcsin_cubic", cert.claim, (0, beta), [cert], [m_check])


# -- first integral on [0, split] --------------------------------------------


def c0_enclosure(split: Fraction) -> tuple[Fraction, Interval, Interval]:
    """``(l, m0, c0)`` for the constant ``c0 = (sqrt 2 / 2)(1 / (1 + sqrt l) + m0)``."""
    p = 2 + 2 * split**3 - 3 * split**2
    q = 2 + 2 * split**3 - 4 * split**2
    l = q / p
    m0 = arcsin_cubic_m(split)
    c0 = sqrt_i(2) / 2 * (1 / (1 + sqrt_i(l)) + m0)
    return l, m0, c0


def verify_I1_small(
    split=SPLIT, coeff=I1_COEFF, max_depth: int = DEFAULT_MAX_DEPTH
) -> Certificate:
    """``I1 <= (4/pi) / (1 + phi^3) * coeff * phi^3`` on ``[0, split]``.

    Two independent routes: subdivision of the exact cofactor of I1, and the
    constant chain ``c0 < coeff`` built from the arcsin cubic bound at split.
    """
    split, coeff = _frac(split), _frac(coeff)
    _check_unit("split", split)

    def cofactor_check(phi: Interval) -> Interval:
        return phi**3 * (fn.I1_cofactor(phi) - coeff)

    direct = prove(
        "i1_small.cofactor",
        f"I1(phi) - (4/pi) phi^3 {coeff} / (1 + phi^3) <= 0 on [0, {split}] (divided by (4/pi)/(1+phi^3))",
        cofactor_check,
        (0, split),
        max_depth,
        equality_points=(0,),
    )

    def p_check(phi: Interval) -> Interval:
        return -((1 - phi) ** 2) * (1 + 2 * phi)

    p_lower = prove(
        "i1_small.P_at_least_one",
        f"1 - (2 + 2 phi^3 - 3 phi^2) <= 0 on [0, {split}]",
        p_check,
        (0, split),
        max_depth,
        equality_points=(1,),
    )
    arcsin_cert = verify_arcsin_cubic(split, max_depth)
    l, m0, c0 = c0_enclosure(split)
    coeff_i = Interval.coerce(coeff)
    checks = [
        scalar_check("l", f"l({split}) = {l} exactly", Interval.coerce(l), True),
        scalar_check("m0", "enclosure of m0", m0, True),
        scalar_check("c0", f"c0 < {coeff}", c0, c0.hi < coeff_i.lo),
    ]
    return combine(
        "i1_small",
        f"I1(phi) <= (4/pi) (1/(1+phi^3)) ({coeff}) phi^3 on [0, {split}]",
        (0, split),
        [direct, p_lower, arcsin_cert],
        checks,
    )


# -- E, F, E F, G ------------------------------------------------------------


def _e_bound(coeff: Fraction):
    def check(phi: Interval) -> Interval:
        return phi**4 * (fn.E_cofactor(phi, IK) - coeff)

    return check


def _f_mvt(phi: Interval) -> Interval:
    """Enclosure of ``(F(phi) - pi/4 + phi^3/3) / phi^5``."""
    return -fn.f_taylor_weight(Interval(0.0, phi.hi), IK) / 5


def _f_check(phi: Interval) -> Interval:
    return phi**5 * _f_mvt(phi)


def _ef_check(phi: Interval) -> Interval:
    # E = 1 + phi^4 e, F = pi/4 - phi^3/3 + phi^5 f
    # => E F - pi/4 - (pi/16 - 1/3) phi^3 = phi^3 (phi^2 f + phi e F - pi/16)
    e = fn.E_cofactor(phi, IK)
    return phi**3 * (phi**2 * _f_mvt(phi) + phi * e * fn.F(phi, IK) - pi_i() / 16)


def _g_check(phi: Interval) -> Interval:
    # G' = -phi k(phi) => G - (pi/4 - 1/2) = -(phi^2 / 2) k(xi)
    return -(phi**2) / 2 * fn.g_taylor_weight(Interval(0.0, phi.hi), IK)


def verify_EFG(split=SPLIT, max_depth: int = DEFAULT_MAX_DEPTH) -> Certificate:
    """Bounds on E, F, E F and G over ``[0, split]`` (E split at 2/5)."""
    split = _frac(split)
    two_fifths = Fraction(2, 5)
    if not two_fifths < split <= 1:
        raise DomainError(f"split must lie in (2/5, 1], got {split}")
    parts = [
        prove("E_small", "E(phi) <= 1 + phi^4 / 2 on [0, 2/5]", _e_bound(Fraction(1, 2)),
              (0, two_fifths), max_depth, equality_points=(0,)),
        prove("E_large", f"E(phi) <= 1 + (125/434) phi^4 on [2/5, {split}]",
              _e_bound(Fraction(125, 434)), (two_fifths, split), max_depth),
        prove("F", f"F(phi) <= pi/4 - phi^3/3 on [0, {split}]", _f_check, (0, split),
              max_depth, equality_points=(0,)),
        prove("EF", f"E(phi) F(phi) <= pi/4 + (pi/16 - 1/3) phi^3 on [0, {split}]", _ef_check,
              (0, split), max_depth, equality_points=(0,)),
        prove("G", f"G(phi) <= pi/4 - 1/2 on [0, {split}]", _g_check, (0, split), max_depth,
              equality_points=(0,)),
    ]
    return combine("efg", f"E, F, E F and G bounds on [0, {split}]", (0, split), parts)


# -- assembly on [0, split] --------------------------------------------------


def _assembled_bound(phi: Interval, coeff: Fraction) -> Interval:
    pi = pi_i()
    total = pi / 4 + (pi / 16 - Fraction(1, 3) + pi / 4 - Fraction(1, 2) + coeff) * phi**3
    return 4 / pi / (1 + phi**3) * total


def verify_sum_small(
    split=SPLIT, coeff=I1_COEFF, max_depth: int = DEFAULT_MAX_DEPTH
) -> Certificate:
    """``I1 + I2 - 1 <= (4/pi) phi^3/(1 + phi^3) [pi/16 - 5/6 + coeff] <= 0`` on ``[0, split]``."""
    split, coeff = _frac(split), _frac(coeff)
    bracket = pi_i() / 16 - Fraction(5, 6) + coeff
    at_zero = _assembled_bound(Interval(0.0, 0.0), coeff)
    at_split = _assembled_bound(Interval.coerce(split), coeff)
    checks = [
        scalar_check("bracket", f"pi/16 - 5/6 + {coeff} < 0", bracket, bracket.hi < 0.0),
        scalar_check("bound_at_zero", "assembled bound at phi = 0 equals 1", at_zero,
                     at_zero.contains(1.0)),
        scalar_check("bound_at_split", f"assembled bound at phi = {split} is < 1", at_split,
                     at_split.hi < 1.0),
    ]
    parts = [verify_I1_small(split, coeff, max_depth), verify_EFG(split, max_depth)]
    return combine("sum_small", f"I1 + I2 <= 1 on [0, {split}]", (0, split), parts, checks)


# -- [4/5, 1] ----------------------------------------------------------------


def _j_check(phi: Interval) -> Interval:
    # J(1) = 0 and the bound vanishes at 1; near 1 the difference is increasing
    c = Fraction(2, 3) + 2 * sqrt_i(2)
    raw = fn.J(phi, IK) - c * (1 - phi)
    if raw.hi <= 0.0 or phi.hi < 1.0:
        return raw
    d = fn.J(IDual.variable(phi), DualKit) - c * (1 - IDual.variable(phi))
    if d.d.lo > 0.0:
        return Interval(min(raw.lo, 0.0), 0.0)
    return raw


def _k_tangent_check(phi: Interval) -> Interval:
    # K(phi) + 1 - (1 - phi)/6 = -(1 - phi)^2 (2 phi + 1)^2 / (2 (2 phi sqrt(S) + 1 + phi))
    s = fn.S(phi, IK)
    return -((1 - phi) ** 2) * (2 * phi + 1) ** 2 / (2 * (2 * phi * sqrt_i(s) + 1 + phi))


def _k_check(phi: Interval) -> Interval:
    return fn.K(phi, IK) + Fraction(11, 12)


def _convex_check(phi: Interval) -> Interval:
    # 2/3 - sqrt(S) + 1/3 = 1 - sqrt(S) = -phi (1 - phi) / (1 + sqrt(S))
    return -phi * (1 - phi) / (1 + sqrt_i(fn.S(phi, IK)))


def _poly_slope_check(phi: Interval) -> Interval:
    # d/dphi [4 sqrt2 (1 + phi^3) - 11 phi^2] = phi (12 sqrt2 phi - 22)
    return phi * (12 * sqrt_i(2) * phi - 22)


def _asin_check(phi: Interval) -> Interval:
    return Fraction(5, 6) - arcsin_i(phi)


def _quartic_check(phi: Interval) -> Interval:
    # phi (phi^3 - 2) + 1 = -(1 - phi)(phi^3 + phi^2 + phi - 1)
    return -(1 - phi) * (phi**3 + phi**2 + phi - 1)


def _p_check(phi: Interval) -> Interval:
    return -((1 - phi) ** 2) * (1 + 2 * phi)


def verify_H_large(split=SPLIT, max_depth: int = DEFAULT_MAX_DEPTH) -> Certificate:
    """``I1 + I2 <= H`` with ``H(split) < 0.9881`` and ``H' < 0`` on ``[split, 1]``."""
    split = _frac(split)
    half = Fraction(1, 2)
    parts = [
        prove("P_at_least_one", "2 + 2 phi^3 - 3 phi^2 >= 1 on [0, 1]", _p_check, (0, 1),
              max_depth, equality_points=(1,)),
        prove("J_bound", "J(phi) <= (2/3 + 2 sqrt 2)(1 - phi) on [1/2, 1]", _j_check, (half, 1),
              max_depth, equality_points=(1,)),
        prove("K_tangent", f"K(phi) <= -1 + (1 - phi)/6 on [{split}, 1]", _k_tangent_check,
              (split, 1), max_depth, equality_points=(1,)),
        prove("K_bound", f"K(phi) <= -11/12 on [{split}, 1]", _k_check, (split, 1), max_depth),
        prove("convexity", "2/3 - sqrt(1 + phi - phi^2) <= -1/3 on [0, 1]", _convex_check,
              (0, 1), max_depth, equality_points=(0, 1)),
        prove("poly_decreasing", "d/dphi [4 sqrt2 (1 + phi^3) - 11 phi^2] <= 0 on [0, 1]",
              _poly_slope_check, (0, 1), max_depth, equality_points=(0,)),
        prove("arcsin_above", f"arcsin(phi) > 5/6 on [{split}, 1]", _asin_check, (split, 1),
              max_depth),
        prove("quartic", f"phi (phi^3 - 2) <= -1 on [{split}, 1]", _quartic_check, (split, 1),
              max_depth, equality_points=(1,)),
    ]
    s = Interval.coerce(split)
    h_split = fn.H(s, IK)
    r2 = sqrt_i(2)
    poly = 4 * r2 * (1 + s**3) - 11 * s**2
    final = -5 * r2 + 2
    tangent = -1 + (1 - split) / 6
    j_at_one = fn.J(Interval(1.0, 1.0), IK)
    checks = [
        scalar_check("H_at_split", f"H({split}) < 9881/10000", h_split,
                     h_split.hi < Interval.coerce(H_AT_SPLIT_BOUND).lo),
        scalar_check("J_at_one", "J(1) = 0 (encloses 0)", j_at_one, j_at_one.contains(0.0)),
        scalar_check("tangent_value", f"-1 + (1 - {split})/6 = {tangent} < -11/12",
                     Interval.coerce(tangent), tangent < Fraction(-11, 12)),
        scalar_check("poly_at_split", f"4 sqrt2 (1 + ({split})^3) - 11 ({split})^2 < 2", poly,
                     poly.hi < 2.0),
        scalar_check("arcsin_at_split", f"arcsin({split}) > 5/6", arcsin_i(s),
                     arcsin_i(s).lo > Interval.coerce(Fraction(5, 6)).hi),
        scalar_check("final", "-5 sqrt 2 + 2 < 0", final, final.hi < 0.0),
    ]
    return combine("h_large", f"I1 + I2 <= H(phi) < 1 on [{split}, 1]", (split, 1), parts, checks)


# -- theorem -----------------------------------------------------------------


def verify_theorem_eps_half(
    split=SPLIT, coeff=I1_COEFF, max_depth: int = DEFAULT_MAX_DEPTH
) -> Certificate:
    """``I1(phi) + I2(phi) <= 1`` on [0, 1], hence alpha(1/2) = 1."""
    parts = [
        verify_arcsin_cubic(split, max_depth),
        verify_I1_small(split, coeff, max_depth),
        verify_EFG(split, max_depth),
        verify_sum_small(split, coeff, max_depth),
        verify_H_large(split, max_depth),
        verify_direct_sum(max_depth=max_depth),
    ]
    return combine("theorem_eps_half", "I1(phi) + I2(phi) <= 1 on [0, 1] at eps = 1/2", (0, 1),
                   parts)


LEMMA_IDS = ("arcsin_cubic", "i1_small", "efg", "sum_small", "h_large", "direct_sum",
             "theorem_eps_half")


def verify_lemma(lemma_id: str, max_depth: int = DEFAULT_MAX_DEPTH) -> Certificate:
    table = {
        "arcsin_cubic": lambda: verify_arcsin_cubic(max_depth=max_depth),
        "i1_small": lambda: verify_I1_small(max_depth=max_depth),
        "efg": lambda: verify_EFG(max_depth=max_depth),
        "sum_small": lambda: verify_sum_small(max_depth=max_depth),
        "h_large": lambda: verify_H_large(max_depth=max_depth),
        "direct_sum": lambda: verify_direct_sum(max_depth=max_depth),
        "theorem_eps_half": lambda: verify_theorem_eps_half(max_depth=max_depth),
    }
    try:
        run = table[lemma_id]
    except KeyError:
        raise DomainError(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMA_IDS)}") from None
    return run()
