"""Interval-valued value scales.

A value scale assigns each object an interval priority value, ordered
best to worst under the bound-wise lattice order. Scales come either
from the worst-reference column of a consistent relation or from the
chain of consecutive comparisons, and are normalized so the best value
straddles 1 and the worst straddles 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateScale, InconsistentInput, LengthMismatch, NotOrdered
from .intervals import (
    DEFAULT_TOL,
    Interval,
    NeutralElement,
    length,
    leq0,
    leq0_within,
)
from .ipr import IntervalMatrix, check_consistency


@dataclass(frozen=True)
class ConsecutiveChain:
    """Comparisons between consecutive objects, best to worst: z_12, z_23, ..."""

    steps: tuple[Interval, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        if not steps:
            raise DegenerateScale("a consecutive chain needs at least one step")
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class ValueScale:
    """Interval priority values, best to worst, with their neutral element."""

    values: tuple[Interval, ...]
    neutral: NeutralElement
    normalization_constant: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)


def derive_scale(
    Z: IntervalMatrix, u: NeutralElement | None = None, tol: float = DEFAULT_TOL
) -> ValueScale:
    """Value scale from the worst-reference column of a consistent IPR.

    Requires the objects to be ordered best to worst, i.e. every
    consecutive comparison z_{i,i+1} sits at or above the neutral element.
    """
    report = check_consistency(Z, u, tol)
    if not report.is_consistent:
        raise InconsistentInput(
            f"max consistency residual {report.max_residual:g} at triple {report.worst_triple}"
        )
    u = report.neutral
    for i in range(Z.n - 1):
        if not leq0_within(u.interval, Z.entry(i, i + 1), tol):
            raise NotOrdered(f"comparison ({i},{i + 1}) falls below the neutral element")
    return ValueScale(tuple(Z.column(Z.n - 1)), u)


def cumulative_from_chain(
    chain: ConsecutiveChain, u: NeutralElement, tol: float = DEFAULT_TOL
) -> ValueScale:
    """Value scale accumulated from consecutive comparisons.

    The k-th value is the interval of width 2*eps centered at the sum of
    the step midpoints from k to the end; the last value is the neutral
    element itself. Equals derive_scale on the fully propagated matrix.
    """
    target = u.width
    for i, step in enumerate(chain.steps):
        if abs(length(step) - target) > tol:
            raise LengthMismatch(
                f"step {i} has length {length(step):g}, expected {target:g}"
            )
        if not leq0_within(u.interval, step, tol):
            raise NotOrdered(f"step {i} falls below the neutral element")
    lows = [s.lower for s in chain.steps]
    highs = [s.upper for s in chain.steps]
    values = []
    for k in range(len(chain.steps)):
        mid = (sum(lows[k:]) + sum(highs[k:])) / 2.0
        values.append(Interval(mid - u.epsilon, mid + u.epsilon))
    values.append(u.interval)
    return ValueScale(tuple(values), u)


def normalization_constant(chain: ConsecutiveChain) -> float:
    """Average of the least and greatest total unit counts along the chain."""
    c_minus = sum(s.lower for s in chain.steps)
    c_plus = sum(s.upper for s in chain.steps)
    c = (c_plus + c_minus) / 2.0
    if c <= 0:
        raise DegenerateScale(f"normalization constant must be positive, got {c:g}")
    return c


def normalize(scale: ValueScale, c: float) -> ValueScale:
    """Divide every value and the neutral by c so the top value straddles 1."""
    if c <= 0:
        raise DegenerateScale(f"normalization constant must be positive, got {c:g}")
    values = tuple(Interval(v.lower / c, v.upper / c) for v in scale.values)
    return ValueScale(values, NeutralElement(scale.neutral.epsilon / c), normalization_constant=c)


def check_monotone(scale: ValueScale) -> bool:
    """True when the values decrease (non-strictly) under the lattice order."""
    return all(
        leq0(scale.values[k + 1], scale.values[k]) for k in range(len(scale.values) - 1)
    )
