"""Certified interval arithmetic in binary64.

Every operation returns an :class:`Interval` that encloses the exact real
result for all real inputs in the operand intervals.  Outward rounding is
done by stepping one ulp outward with :func:`math.nextafter` after each
native operation, so no control of the FPU rounding mode is needed.  Sums
use an error-free transformation to skip the step when the native result is
already a valid bound; products and quotients with an exact zero operand are
not widened.

``arcsin`` relies on the platform ``asin`` being faithfully rounded.  That
assumption is checked once at import against 64 high-precision reference
values (see :data:`ARCSIN_SELF_TEST`); enclosures then carry 4 ulps of slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Union

from ._arcsin_refs import ARCSIN_REFERENCES
from .errors import DomainError

__all__ = [
    "Interval",
    "IntervalLike",
    "ARCSIN_SELF_TEST",
    "ArcsinSelfTest",
    "arcsin_i",
    "pi_i",
    "sqrt_i",
]

_INF = math.inf
ARCSIN_SLACK_ULPS = 4


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _two_sum_err(a: float, b: float, s: float) -> float:
    # Knuth's TwoSum: a + b == s + err exactly (barring overflow).
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def _sum_lo(a: float, b: float) -> float:
    s = a + b
    if math.isinf(s):
        return s
    return s if _two_sum_err(a, b, s) >= 0.0 else _down(s)


def _sum_hi(a: float, b: float) -> float:
    s = a + b
    if math.isinf(s):
        return s
    return s if _two_sum_err(a, b, s) <= 0.0 else _up(s)


def _mul_pair(x: float, y: float) -> tuple[float, float]:
    if x == 0.0 or y == 0.0:
        return 0.0, 0.0
    p = x * y
    return _down(p), _up(p)


def _div_pair(x: float, y: float) -> tuple[float, float]:
    if x == 0.0:
        return 0.0, 0.0
    q = x / y
    return _down(q), _up(q)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` of reals with binary64 endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise DomainError("interval endpoint is NaN")
        if lo > hi:
            raise DomainError(f"empty interval [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    # -- construction -----------------------------------------------------
    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(x, x)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Interval":
        """Tightest enclosure of a rational number."""
        q = Fraction(q)
        f = float(q)
        exact = Fraction(f)
        if exact == q:
            return cls(f, f)
        if exact < q:
            return cls(f, _up(f))
        return cls(_down(f), f)

    @classmethod
    def coerce(cls, x: "IntervalLike") -> "Interval":
        if isinstance(x, Interval):
            return x
        if isinstance(x, float):
            return cls(x, x)
        if isinstance(x, (int, Fraction)):
            return cls.from_fraction(Fraction(x))
        if isinstance(x, Real):
            return cls.point(float(x))
        return NotImplemented  # type: ignore[return-value]

    @classmethod
    def hull(cls, *xs: "IntervalLike") -> "Interval":
        ivs = [cls.coerce(x) for x in xs]
        return cls(min(i.lo for i in ivs), max(i.hi for i in ivs))

    # -- queries ----------------------------------------------------------
    @property
    def width(self) -> float:
        return _up(self.hi - self.lo) if self.hi > self.lo else 0.0

    @property
    def mid(self) -> float:
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    def contains(self, x: "IntervalLike") -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            return Fraction(self.lo) <= x <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def subset_of(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise DomainError(f"disjoint enclosures {self} and {other}")
        return Interval(lo, hi)

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def certainly_lt(self, other: "IntervalLike") -> bool:
        return self.hi < Interval.coerce(other).lo

    def certainly_le(self, other: "IntervalLike") -> bool:
        return self.hi <= Interval.coerce(other).lo

    def certainly_gt(self, other: "IntervalLike") -> bool:
        return self.lo > Interval.coerce(other).hi

    def certainly_positive(self) -> bool:
        return self.lo > 0.0

    def certainly_negative(self) -> bool:
        return self.hi < 0.0

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> "Interval":
        return self

    def __add__(self, other: "IntervalLike") -> "Interval":
        o = Interval.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Interval(_sum_lo(self.lo, o.lo), _sum_hi(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other: "IntervalLike") -> "Interval":
        o = Interval.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Interval(_sum_lo(self.lo, -o.hi), _sum_hi(self.hi, -o.lo))

    def __rsub__(self, other: "IntervalLike") -> "Interval":
        o = Interval.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: "IntervalLike") -> "Interval":
        o = Interval.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        pairs = [
            _mul_pair(self.lo, o.lo),
            _mul_pair(self.lo, o.hi),
            _mul_pair(self.hi, o.lo),
            _mul_pair(self.hi, o.hi),
        ]
        return Interval(min(p[0] for p in pairs), max(p[1] for p in pairs))

    __rmul__ = __mul__

    def __truediv__(self, other: "IntervalLike") -> "Interval":
        o = Interval.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise DomainError(f"division by interval containing zero: {o}")
        pairs = [
            _div_pair(self.lo, o.lo),
            _div_pair(self.lo, o.hi),
            _div_pair(self.hi, o.lo),
            _div_pair(self.hi, o.hi),
        ]
        return Interval(min(p[0] for p in pairs), max(p[1] for p in pairs))

    def __rtruediv__(self, other: "IntervalLike") -> "Interval":
        o = Interval.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "Interval":
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers are supported")
        if n == 0:
            return Interval(1.0, 1.0)
        if n == 1:
            return self
        if n % 2 == 1:
            return Interval(_pow_point(self.lo, n).lo, _pow_point(self.hi, n).hi)
        # even powers are nonnegative; clamp away underflow rounding
        if self.lo >= 0.0:
            return Interval(max(0.0, _pow_point(self.lo, n).lo), _pow_point(self.hi, n).hi)
        if self.hi <= 0.0:
            return Interval(max(0.0, _pow_point(self.hi, n).lo), _pow_point(self.lo, n).hi)
        big = max(-self.lo, self.hi)
        return Interval(0.0, _pow_point(big, n).hi)

    def __abs__(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"


IntervalLike = Union[Interval, float, int, Fraction]


def _pow_point(x: float, n: int) -> Interval:
    acc = Interval(1.0, 1.0)
    base = Interval(x, x)
    while n:
        if n & 1:
            acc = acc * base
        n >>= 1
        if n:
            base = base * base
    return acc


def sqrt_i(a: IntervalLike) -> Interval:
    """Enclosure of ``{sqrt(x) : x in a}``."""
    a = Interval.coerce(a)
    if a.lo < 0.0:
        raise DomainError(f"sqrt of interval with negative lower bound: {a}")
    lo = 0.0 if a.lo == 0.0 else max(0.0, _down(math.sqrt(a.lo)))
    hi = 0.0 if a.hi == 0.0 else _up(math.sqrt(a.hi))
    return Interval(lo, hi)


def pi_i() -> Interval:
    """Enclosure of pi one ulp wide (``math.pi`` is the nearest double below pi)."""
    return Interval(math.pi, _up(math.pi))


_HALF_PI_HI = _up(math.pi) / 2.0


def _step(x: float, k: int, direction: float) -> float:
    for _ in range(k):
        x = math.nextafter(x, direction)
    return x


# |arcsin x| >= |x| keeps the slack from crossing zero near the origin


def _asin_lo(x: float) -> float:
    if x == 0.0:
        return 0.0
    lo = max(-_HALF_PI_HI, _step(math.asin(x), ARCSIN_SLACK_ULPS, -_INF))
    return max(lo, x) if x > 0.0 else lo


def _asin_hi(x: float) -> float:
    if x == 0.0:
        return 0.0
    hi = min(_HALF_PI_HI, _step(math.asin(x), ARCSIN_SLACK_ULPS, _INF))
    return min(hi, x) if x < 0.0 else hi


@dataclass(frozen=True)
class ArcsinSelfTest:
    n_checked: int
    n_faithful: int
    n_enclosed: int
    failures: tuple[float, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _run_arcsin_self_test() -> ArcsinSelfTest:
    faithful = enclosed = 0
    failures = []
    for x, ref_text in ARCSIN_REFERENCES:
        ref = Fraction(ref_text)
        r = math.asin(x)
        ok_faithful = Fraction(_down(r)) < ref < Fraction(_up(r)) or Fraction(r) == ref
        ok_enclosed = Fraction(_asin_lo(x)) <= ref <= Fraction(_asin_hi(x))
        faithful += ok_faithful
        enclosed += ok_enclosed
        if not (ok_faithful and ok_enclosed):
            failures.append(x)
    return ArcsinSelfTest(len(ARCSIN_REFERENCES), faithful, enclosed, tuple(failures))


ARCSIN_SELF_TEST = _run_arcsin_self_test()


def arcsin_i(a: IntervalLike) -> Interval:
    """Enclosure of ``{arcsin(x) : x in a}`` for ``a`` inside ``[-1, 1]``.

    arcsin is increasing, so the endpoint images (widened by the faithful
    rounding slack) bound the whole range.
    """
    a = Interval.coerce(a)
    if a.lo < -1.0 or a.hi > 1.0:
        raise DomainError(f"arcsin argument outside [-1, 1]: {a}")
    if not ARCSIN_SELF_TEST.passed:
        raise RuntimeError(
            "platform asin failed the faithful-rounding self-test at "
            f"x = {ARCSIN_SELF_TEST.failures}"
        )
    return Interval(_asin_lo(a.lo), _asin_hi(a.hi))
