"""Bridges between interval preference relations and classical models.

Two affine-in-log transforms embed the classical pairwise-comparison
structures into the interval world:

* fuzzy (additive) relations on [0, 1]:  f(y) = y - 1/2
* multiplicative ratio relations on [1/9, 9]:  f(a) = log_9(a)

Both maps are monotone, so interval entries transform bound-wise, and a
crisp classical relation is consistent exactly when its image is
consistent with respect to the crisp neutral [0, 0].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomain
from .intervals import DEFAULT_TOL, NeutralElement
from .ipr import IntervalMatrix, consistency_report

_SLACK = 1e-12  # lets round-trip values re-validate at domain edges

SAATY_MAX = 9.0
SAATY_MIN = 1.0 / 9.0


@dataclass(frozen=True, eq=False)
class FuzzyRelation:
    """Square matrix of membership intervals with bounds inside [0, 1]."""

    entries: IntervalMatrix

    def __post_init__(self):
        lo, hi = self.entries.lower, self.entries.upper
        if lo.min() < -_SLACK or hi.max() > 1.0 + _SLACK:
            raise OutOfDomain("fuzzy relation bounds must lie within [0, 1]")

    @classmethod
    def from_crisp(cls, values) -> "FuzzyRelation":
        arr = np.asarray(values, dtype=float)
        return cls(IntervalMatrix(arr, arr.copy()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return self.entries == other.entries


@dataclass(frozen=True, eq=False)
class SaatyRelation:
    """Square matrix of ratio intervals; bounds strictly positive."""

    entries: IntervalMatrix

    def __post_init__(self):
        if self.entries.lower.min() <= 0:
            raise OutOfDomain("ratio relation bounds must be strictly positive")

    @classmethod
    def from_crisp(cls, values) -> "SaatyRelation":
        arr = np.asarray(values, dtype=float)
        return cls(IntervalMatrix(arr, arr.copy()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SaatyRelation):
            return NotImplemented
        return self.entries == other.entries


def from_fuzzy(Y: FuzzyRelation) -> IntervalMatrix:
    """Shift membership values so indifference (1/2) maps to zero."""
    return IntervalMatrix(Y.entries.lower - 0.5, Y.entries.upper - 0.5)


def to_fuzzy(Z: IntervalMatrix) -> FuzzyRelation:
    """Inverse shift; entries must fit inside [-1/2, 1/2]."""
    if Z.lower.min() < -0.5 - _SLACK or Z.upper.max() > 0.5 + _SLACK:
        raise OutOfDomain("entries outside [-1/2, 1/2] have no fuzzy counterpart")
    return FuzzyRelation(IntervalMatrix(Z.lower + 0.5, Z.upper + 0.5))


def from_saaty(A: SaatyRelation, strict_range: bool = True) -> IntervalMatrix:
    """Base-9 logarithm, mapping the ratio scale onto a bipolar unit scale.

    With strict_range (default) the bounds must lie in [1/9, 9], the
    conventional extent of the ratio scale; pass strict_range=False to
    accept any positive bounds.
    """
    lo, hi = A.entries.lower, A.entries.upper
    if strict_range and (lo.min() < SAATY_MIN - _SLACK or hi.max() > SAATY_MAX + _SLACK):
        raise OutOfDomain("ratio bounds outside [1/9, 9]; pass strict_range=False to allow")
    log9 = math.log(9.0)
    return IntervalMatrix(np.log(lo) / log9, np.log(hi) / log9)


def to_saaty(Z: IntervalMatrix) -> SaatyRelation:
    """Inverse transform 9**x; entries must fit inside [-1, 1]."""
    if Z.lower.min() < -1.0 - _SLACK or Z.upper.max() > 1.0 + _SLACK:
        raise OutOfDomain("entries outside [-1, 1] have no ratio counterpart")
    return SaatyRelation(IntervalMatrix(np.power(9.0, Z.lower), np.power(9.0, Z.upper)))


def consistency_transfer_check(
    source: FuzzyRelation | SaatyRelation,
    tol: float = DEFAULT_TOL,
    u: NeutralElement | None = NeutralElement(0.0),
) -> bool:
    """Consistency of a classical relation, judged in the interval world.

    Transforms the relation and checks interval consistency with respect
    to u (the crisp neutral by default, which matches the classical
    additive and multiplicative tests on crisp input; pass u=None to infer
    the neutral from the diagonal of the transformed relation).
    """
    if isinstance(source, FuzzyRelation):
        transformed = from_fuzzy(source)
    elif isinstance(source, SaatyRelation):
        transformed = from_saaty(source)
    else:
        raise OutOfDomain(f"unsupported relation type {type(source).__name__}")
    return consistency_report(transformed, u, tol).is_consistent
