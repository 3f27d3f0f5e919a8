"""Closed-interval arithmetic on the real line.

Intervals are the atoms of every preference judgment in this package:
``Interval(4, 6)`` reads "somewhere between 4 and 6 units". Operations
follow set semantics, so the sum of two intervals is the set of sums of
their elements, and the opposite of ``[a, b]`` is ``[-b, -a]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import InvariantViolation, NegativeAlpha

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Interval:
    """A closed real interval [lower, upper] with finite bounds."""

    lower: float
    upper: float

    def __post_init__(self):
        # +0.0 normalizes -0.0 so serialized output is stable.
        lo = float(self.lower) + 0.0
        hi = float(self.upper) + 0.0
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InvariantViolation("interval bounds must be finite")
        if lo > hi:
            raise InvariantViolation(f"interval lower bound {lo} exceeds upper bound {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    def __iter__(self) -> Iterator[float]:
        yield self.lower
        yield self.upper

    def __add__(self, other: "Interval") -> "Interval":
        return add(self, other)

    def __sub__(self, other: "Interval") -> "Interval":
        return subtract(self, other)

    def __neg__(self) -> "Interval":
        return negate(self)


@dataclass(frozen=True)
class NeutralElement:
    """The symmetric interval [-epsilon, epsilon] that generalizes zero.

    A crisp scale has a single neutral value 0; an interval scale has a
    whole family of candidates, one per half-width ``epsilon``.
    """

    epsilon: float = 0.0

    def __post_init__(self):
        eps = float(self.epsilon) + 0.0
        if not math.isfinite(eps):
            raise InvariantViolation("neutral half-width must be finite")
        if eps < 0:
            raise NegativeAlpha(f"neutral half-width must be nonnegative, got {eps}")
        object.__setattr__(self, "epsilon", eps)

    @property
    def interval(self) -> Interval:
        return Interval(-self.epsilon, self.epsilon)

    @property
    def width(self) -> float:
        """Full length of the neutral interval, 2 * epsilon."""
        return 2.0 * self.epsilon


def add(a: Interval, b: Interval) -> Interval:
    """Set sum: bound-wise addition."""
    return Interval(a.lower + b.lower, a.upper + b.upper)


def negate(a: Interval) -> Interval:
    """Opposed element -a = [-upper, -lower]."""
    return Interval(-a.upper, -a.lower)


def subtract(a: Interval, b: Interval) -> Interval:
    """Set difference {x - y : x in a, y in b}; equals add(a, negate(b))."""
    return Interval(a.lower - b.upper, a.upper - b.lower)


def scale(lam: float, a: Interval) -> Interval:
    """Set image {lam * x : x in a}; bounds swap for negative factors."""
    if lam >= 0:
        return Interval(lam * a.lower, lam * a.upper)
    return Interval(lam * a.upper, lam * a.lower)


def leq0(a: Interval, b: Interval) -> bool:
    """Bound-wise lattice order: a <= b iff both bounds of a are <= those of b."""
    return a.lower <= b.lower and a.upper <= b.upper


def length(a: Interval) -> float:
    """Length upper - lower; the uncertainty carried by the interval."""
    return a.upper - a.lower


def midpoint(a: Interval) -> float:
    return (a.lower + a.upper) / 2.0


def is_neutral(a: Interval, tol: float = DEFAULT_TOL) -> bool:
    """True when a is symmetric around zero, i.e. a member of the neutral family."""
    return abs(a.lower + a.upper) <= tol


def leq0_within(a: Interval, b: Interval, tol: float = DEFAULT_TOL) -> bool:
    """Tolerance-relaxed version of leq0, used for ordering preconditions."""
    return a.lower <= b.lower + tol and a.upper <= b.upper + tol


def close(a: Interval, b: Interval, tol: float = DEFAULT_TOL) -> bool:
    """Bound-wise absolute closeness."""
    return abs(a.lower - b.lower) <= tol and abs(a.upper - b.upper) <= tol
