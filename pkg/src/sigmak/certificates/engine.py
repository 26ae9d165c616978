"""Bisection prover, certificate records and arithmetic kits.

A lemma is stated as ``diff(x) <= 0`` on a closed domain.  The lemma supplies
a cell check ``check(cell) -> Interval`` whose upper endpoint is a proven
upper bound of ``diff`` over the cell; the prover bisects until every cell's
bound is strictly negative, or non-positive on a cell touching one of the
lemma's designated equality points.  A check may raise :class:`DomainError`
when the cell is too wide for its formula; the cell is then split.

Cells are explored depth-first, left to right, so the cell list comes out in
canonical order and raising the depth limit can only refine, never undo, a
proof.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from ..errors import DomainError
from ..interval import Interval, IntervalLike, arcsin_i, pi_i, sqrt_i

__all__ = [
    "PASS",
    "FAIL",
    "DEFAULT_MAX_DEPTH",
    "Certificate",
    "ScalarCheck",
    "IDual",
    "FloatKit",
    "IntervalKit",
    "DualKit",
    "prove",
    "combine",
    "scalar_check",
    "max_depth_from_env",
    "domain_enclosure",
]

PASS = "PASS"
FAIL = "FAIL"
DEFAULT_MAX_DEPTH = 40
MIN_DEPTH, MAX_DEPTH = 8, 60

Check = Callable[[Interval], Interval]


def max_depth_from_env(default: int = DEFAULT_MAX_DEPTH) -> int:
    raw = os.environ.get("SYL_MAX_DEPTH")
    if raw is None or raw == "":
        return default
    try:
        depth = int(raw)
    except ValueError:
        raise DomainError(f"SYL_MAX_DEPTH must be an integer, got {raw!r}") from None
    return check_depth(depth)


def check_depth(depth: int) -> int:
    if not MIN_DEPTH <= depth <= MAX_DEPTH:
        raise DomainError(f"max depth must lie in [{MIN_DEPTH}, {MAX_DEPTH}], got {depth}")
    return depth


@dataclass(frozen=True)
class ScalarCheck:
    """A single proven (or refuted) scalar fact with the enclosure behind it."""

    name: str
    claim: str
    enclosure: Interval
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "claim": self.claim,
            "enclosure": [self.enclosure.lo, self.enclosure.hi],
            "passed": self.passed,
        }


def scalar_check(name: str, claim: str, enclosure: Interval, passed: bool) -> ScalarCheck:
    return ScalarCheck(name, claim, enclosure, bool(passed))


@dataclass(frozen=True)
class Certificate:
    """PASS/FAIL record of one lemma.

    ``cells`` holds ``(lo, hi, bound_lo, bound_hi)`` rows covering ``domain``;
    composite certificates carry their parts in ``components`` instead.
    """

    lemma_id: str
    claim: str
    domain: tuple[float, float]
    status: str
    max_depth_used: int
    cells: tuple[tuple[float, float, float, float], ...] = ()
    components: tuple["Certificate", ...] = ()
    checks: tuple[ScalarCheck, ...] = ()
    failure: str | None = None
    equality_points: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def depth(self) -> int:
        return self.max_depth_used

    def component(self, lemma_id: str) -> "Certificate":
        for c in self.components:
            if c.lemma_id == lemma_id:
                return c
        raise KeyError(lemma_id)

    def check(self, name: str) -> ScalarCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[str]:
        """Ids of every failing leaf, depth first."""
        out: list[str] = []
        if self.status == FAIL and self.failure and not self.components:
            out.append(f"{self.lemma_id}: {self.failure}")
        for c in self.components:
            out.extend(c.failures())
        for ch in self.checks:
            if not ch.passed:
                out.append(f"{self.lemma_id}: {ch.name}")
        if self.status == FAIL and not out:
            out.append(f"{self.lemma_id}: {self.failure}")
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "lemma_id": self.lemma_id,
            "claim": self.claim,
            "domain": list(self.domain),
            "status": self.status,
            "depth": self.max_depth_used,
            "equality_points": list(self.equality_points),
            "cells": [list(c) for c in self.cells],
            "checks": [c.to_dict() for c in self.checks],
            "components": [c.to_dict() for c in self.components],
            "failure": self.failure,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, allow_nan=False)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Certificate":
        return cls(
            lemma_id=d["lemma_id"],
            claim=d["claim"],
            domain=(float(d["domain"][0]), float(d["domain"][1])),
            status=d["status"],
            max_depth_used=int(d["depth"]),
            cells=tuple(tuple(float(v) for v in c) for c in d["cells"]),
            components=tuple(cls.from_dict(c) for c in d["components"]),
            checks=tuple(
                ScalarCheck(c["name"], c["claim"], Interval(*c["enclosure"]), bool(c["passed"]))
                for c in d["checks"]
            ),
            failure=d["failure"],
            equality_points=tuple(d.get("equality_points", ())),
        )


def domain_enclosure(lo: IntervalLike, hi: IntervalLike) -> tuple[float, float]:
    """Float interval containing the exact domain ``[lo, hi]``."""
    return Interval.coerce(lo).lo, Interval.coerce(hi).hi


def _touches(cell: Interval, points: Sequence[Fraction]) -> bool:
    return any(cell.contains(p) for p in points)


def prove(
    lemma_id: str,
    claim: str,
    check: Check,
    domain: tuple[IntervalLike, IntervalLike],
    max_depth: int = DEFAULT_MAX_DEPTH,
    equality_points: Iterable[IntervalLike] = (),
) -> Certificate:
    """Prove ``diff <= 0`` on ``domain`` by adaptive bisection."""
    lo, hi = domain_enclosure(*domain)
    eq = [Fraction(p) for p in equality_points]
    cells: list[tuple[float, float, float, float]] = []
    deepest = 0
    failure: str | None = None
    stack: list[tuple[Interval, int]] = [(Interval(lo, hi), 0)]
    while stack:
        cell, depth = stack.pop()
        deepest = max(deepest, depth)
        try:
            bound = check(cell)
        except DomainError:
            bound = None
        if bound is not None and (bound.hi < 0.0 or (bound.hi <= 0.0 and _touches(cell, eq))):
            cells.append((cell.lo, cell.hi, bound.lo, bound.hi))
            continue
        if depth >= max_depth or cell.mid in (cell.lo, cell.hi):
            shown = "undefined" if bound is None else f"[{bound.lo!r}, {bound.hi!r}]"
            failure = f"cell [{cell.lo!r}, {cell.hi!r}] unproven at depth {depth}, bound {shown}"
            break
        left, right = cell.split()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    return Certificate(
        lemma_id=lemma_id,
        claim=claim,
        domain=(lo, hi),
        status=FAIL if failure else PASS,
        max_depth_used=deepest,
        cells=tuple(cells),
        failure=failure,
        equality_points=tuple(str(p) for p in eq),
    )


def combine(
    lemma_id: str,
    claim: str,
    domain: tuple[IntervalLike, IntervalLike],
    components: Sequence[Certificate] = (),
    checks: Sequence[ScalarCheck] = (),
) -> Certificate:
    """Composite certificate: PASS iff every component and check passes."""
    bad = [c.lemma_id for c in components if not c.passed] + [c.name for c in checks if not c.passed]
    return Certificate(
        lemma_id=lemma_id,
        claim=claim,
        domain=domain_enclosure(*domain),
        status=FAIL if bad else PASS,
        max_depth_used=max((c.max_depth_used for c in components), default=0),
        components=tuple(components),
        checks=tuple(checks),
        failure=("failing: " + ", ".join(bad)) if bad else None,
    )


# -- forward-mode derivatives with interval coefficients ---------------------


@dataclass(frozen=True, slots=True)
class IDual:
    """``v + d * eps`` with interval ``v`` and ``d``; encloses a function and its derivative."""

    v: Interval
    d: Interval

    @staticmethod
    def _lift(x: "IDual | IntervalLike") -> "IDual":
        if isinstance(x, IDual):
            return x
        return IDual(Interval.coerce(x), Interval(0.0, 0.0))

    @classmethod
    def variable(cls, x: IntervalLike) -> "IDual":
        return cls(Interval.coerce(x), Interval(1.0, 1.0))

    def __add__(self, o):
        o = IDual._lift(o)
        return IDual(self.v + o.v, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return IDual(-self.v, -self.d)

    def __sub__(self, o):
        o = IDual._lift(o)
        return IDual(self.v - o.v, self.d - o.d)

    def __rsub__(self, o):
        return IDual._lift(o) - self

    def __mul__(self, o):
        o = IDual._lift(o)
        return IDual(self.v * o.v, self.d * o.v + self.v * o.d)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = IDual._lift(o)
        q = self.v / o.v
        return IDual(q, (self.d - q * o.d) / o.v)

    def __rtruediv__(self, o):
        return IDual._lift(o) / self

    def __pow__(self, n: int):
        if n == 0:
            return IDual._lift(1)
        return IDual(self.v**n, n * self.v ** (n - 1) * self.d)


# -- arithmetic kits: one formula, three number types -------------------------


class FloatKit:
    """Plain binary64, for cross-checks and plotting."""

    @staticmethod
    def c(q: IntervalLike) -> float:
        return float(q)

    @staticmethod
    def sqrt(x) -> float:
        return math.sqrt(x)

    @staticmethod
    def asin(x) -> float:
        return math.asin(x)

    @staticmethod
    def pi() -> float:
        return math.pi


class IntervalKit:
    @staticmethod
    def c(q: IntervalLike) -> Interval:
        return Interval.coerce(q)

    @staticmethod
    def sqrt(x) -> Interval:
        return sqrt_i(x)

    @staticmethod
    def asin(x) -> Interval:
        return arcsin_i(x)

    @staticmethod
    def pi() -> Interval:
        return pi_i()


class DualKit:
    @staticmethod
    def c(q: IntervalLike) -> IDual:
        return IDual._lift(q)

    @staticmethod
    def sqrt(x) -> IDual:
        x = IDual._lift(x)
        r = sqrt_i(x.v)
        return IDual(r, x.d / (2 * r))

    @staticmethod
    def asin(x) -> IDual:
        x = IDual._lift(x)
        return IDual(arcsin_i(x.v), x.d / sqrt_i((1 - x.v) * (1 + x.v)))

    @staticmethod
    def pi() -> IDual:
        return IDual._lift(pi_i())
