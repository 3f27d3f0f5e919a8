"""Interval preference relations (IPRs).

An IPR is a square matrix of intervals satisfying the reciprocity
condition z_ij = -z_ji. It is *consistent* with respect to a neutral
element u = [-eps, eps] when

    z_ij + u = z_ik + z_kj   for all triples (i, j, k),

the interval analogue of additive transitivity. Consistency makes the
matrix redundant: any single column carries the whole relation, which is
what the representation operations below exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InconsistentInput, InvariantViolation, LengthMismatch, NotReciprocal
from .intervals import DEFAULT_TOL, Interval, NeutralElement, length, midpoint


@dataclass(frozen=True, eq=False)
class IntervalMatrix:
    """Square matrix of intervals stored as two (n, n) float arrays."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=float) + 0.0
        hi = np.asarray(self.upper, dtype=float) + 0.0
        if lo.ndim != 2 or lo.shape != hi.shape or lo.shape[0] != lo.shape[1]:
            raise InvariantViolation("interval matrix must be square")
        if lo.shape[0] == 0:
            raise InvariantViolation("interval matrix must be nonempty")
        if not (np.isfinite(lo).all() and np.isfinite(hi).all()):
            raise InvariantViolation("matrix bounds must be finite")
        bad = lo > hi
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise InvariantViolation(f"entry ({i},{j}) has lower > upper")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Interval | tuple[float, float]]]) -> "IntervalMatrix":
        ivs = [[e if isinstance(e, Interval) else Interval(*e) for e in row] for row in rows]
        n = len(ivs)
        if any(len(row) != n for row in ivs):
            raise InvariantViolation("interval matrix must be square")
        lo = np.array([[e.lower for e in row] for row in ivs])
        hi = np.array([[e.upper for e in row] for row in ivs])
        return cls(lo, hi)

    @classmethod
    def from_midpoints(cls, mids: np.ndarray, halfwidth: float) -> "IntervalMatrix":
        mids = np.asarray(mids, dtype=float)
        return cls(mids - halfwidth, mids + halfwidth)

    @property
    def n(self) -> int:
        return self.lower.shape[0]

    def entry(self, i: int, j: int) -> Interval:
        return Interval(self.lower[i, j], self.upper[i, j])

    def row(self, i: int) -> list[Interval]:
        return [self.entry(i, j) for j in range(self.n)]

    def column(self, j: int) -> list[Interval]:
        return [self.entry(i, j) for i in range(self.n)]

    def rows(self) -> list[list[Interval]]:
        return [self.row(i) for i in range(self.n)]

    def midpoints(self) -> np.ndarray:
        return (self.lower + self.upper) / 2.0

    def lengths(self) -> np.ndarray:
        return self.upper - self.lower

    def allclose(self, other: "IntervalMatrix", tol: float = DEFAULT_TOL) -> bool:
        return (
            self.lower.shape == other.lower.shape
            and float(np.abs(self.lower - other.lower).max()) <= tol
            and float(np.abs(self.upper - other.upper).max()) <= tol
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalMatrix):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(f"[{self.lower[i, j]:g},{self.upper[i, j]:g}]" for j in range(self.n))
            for i in range(self.n)
        )
        return f"IntervalMatrix({body})"


@dataclass(frozen=True)
class ConsistencyReport:
    """Diagnostic summary of reciprocity and consistency checks."""

    is_reciprocal: bool
    is_consistent: bool
    neutral: NeutralElement | None
    max_residual: float
    worst_triple: tuple[int, int, int] | None


def reciprocity_gap(Z: IntervalMatrix) -> float:
    """Largest bound-wise violation of z_ij = -z_ji over the whole matrix."""
    return float(np.abs(Z.lower + Z.upper.T).max())


def check_reciprocity(Z: IntervalMatrix, tol: float = DEFAULT_TOL) -> bool:
    return reciprocity_gap(Z) <= tol


def infer_neutral(Z: IntervalMatrix) -> NeutralElement:
    """Candidate neutral element from the diagonal.

    In a consistent relation every diagonal entry equals u, so the mean of
    the diagonal half-lengths is the unique candidate; on noisy input it is
    a least-squares guess.
    """
    eps = float(Z.lengths().diagonal().mean() / 2.0)
    return NeutralElement(eps)


def _consistency_scan(Z: IntervalMatrix, u: NeutralElement) -> tuple[float, tuple[int, int, int]]:
    """Exhaustive scan of all n^3 triples; returns (max residual, arg-max triple)."""
    lo, hi, n = Z.lower, Z.upper, Z.n
    eps = u.epsilon
    best = -1.0
    triple = (0, 0, 0)
    for i in range(n):
        # residual[k, j] for the triple (i, j, k), one array per bound
        rl = (lo[i][None, :] - eps) - (lo[i][:, None] + lo)
        rh = (hi[i][None, :] + eps) - (hi[i][:, None] + hi)
        resid = np.maximum(np.abs(rl), np.abs(rh))
        k, j = np.unravel_index(int(resid.argmax()), resid.shape)
        if resid[k, j] > best:
            best = float(resid[k, j])
            triple = (i, int(j), int(k))
    return best, triple


def consistency_report(
    Z: IntervalMatrix, u: NeutralElement | None = None, tol: float = DEFAULT_TOL
) -> ConsistencyReport:
    """Full diagnostic that never raises: reports reciprocity failures too."""
    gap = reciprocity_gap(Z)
    if gap > tol:
        return ConsistencyReport(
            is_reciprocal=False,
            is_consistent=False,
            neutral=None,
            max_residual=gap,
            worst_triple=None,
        )
    if u is None:
        u = infer_neutral(Z)
    max_residual, triple = _consistency_scan(Z, u)
    consistent = max_residual <= tol
    return ConsistencyReport(
        is_reciprocal=True,
        is_consistent=consistent,
        neutral=u,
        max_residual=max_residual,
        worst_triple=None if consistent else triple,
    )


def check_consistency(
    Z: IntervalMatrix, u: NeutralElement | None = None, tol: float = DEFAULT_TOL
) -> ConsistencyReport:
    """Consistency check for an IPR; the neutral is inferred when omitted.

    Raises NotReciprocal when the input is not an IPR at all, since the
    consistency condition is only defined on reciprocal matrices.
    """
    report = consistency_report(Z, u, tol)
    if not report.is_reciprocal:
        raise NotReciprocal(f"reciprocity gap {report.max_residual:g} exceeds tolerance {tol:g}")
    return report


def values_from_reference(
    Z: IntervalMatrix, ref: int | None = None, tol: float = DEFAULT_TOL
) -> list[Interval]:
    """Priority values read off one reference column of a consistent IPR.

    With v_k = z[k, ref] the representation identity z_ij + u = v_i - v_j
    holds for every pair. The default reference is the last object (the
    worst one under best-to-worst ordering), which anchors the scale so the
    bottom value equals the neutral element.
    """
    report = check_consistency(Z, None, tol)
    if not report.is_consistent:
        raise InconsistentInput(
            f"max consistency residual {report.max_residual:g} at triple {report.worst_triple}"
        )
    if ref is None:
        ref = Z.n - 1
    if not 0 <= ref < Z.n:
        raise InvariantViolation(f"reference index {ref} out of range for n={Z.n}")
    return Z.column(ref)


def matrix_from_values(
    values: Sequence[Interval], u: NeutralElement, tol: float = DEFAULT_TOL
) -> IntervalMatrix:
    """Rebuild the consistent IPR represented by priority values.

    Every value must have length 2*eps; the entry (i, j) is the interval of
    width 2*eps centered at midpoint(v_i) - midpoint(v_j). Any common shift
    of the values yields the same matrix, so the gauge is irrelevant.
    """
    target = u.width
    for k, v in enumerate(values):
        if abs(length(v) - target) > tol:
            raise LengthMismatch(
                f"value {k} has length {length(v):g}, expected {target:g}"
            )
    mids = np.array([midpoint(v) for v in values])
    diff = mids[:, None] - mids[None, :]
    return IntervalMatrix(diff - u.epsilon, diff + u.epsilon)


def midpoint_decomposition(
    Z: IntervalMatrix, tol: float = DEFAULT_TOL
) -> tuple[IntervalMatrix, float]:
    """Split a consistent IPR into a crisp consistent core plus a halfwidth.

    Returns (X, h) where X holds the degenerate entries [m_ij, m_ij] with
    m_ij = midpoint(z_ij) and h = eps; re-inflating X by h restores Z.
    X itself satisfies crisp additive transitivity x_ij = x_ik + x_kj.
    """
    report = check_consistency(Z, None, tol)
    if not report.is_consistent:
        raise InconsistentInput(
            f"max consistency residual {report.max_residual:g} at triple {report.worst_triple}"
        )
    mids = Z.midpoints()
    return IntervalMatrix(mids, mids.copy()), report.neutral.epsilon


def inconsistency_index(Z: IntervalMatrix, u: NeutralElement) -> float:
    """Distance to the nearest matrix consistent w.r.t. the given neutral.

    Value of the least-squares repair objective at its optimum: zero if and
    only if Z is already consistent w.r.t. u. Assumes Z is reciprocal.
    """
    n = Z.n
    mids = Z.midpoints()
    nu = mids.mean(axis=1)
    diff = nu[:, None] - nu[None, :]
    rl = Z.lower - (diff - u.epsilon)
    rh = Z.upper - (diff + u.epsilon)
    return float((rl * rl + rh * rh).sum() / (2.0 * n * n))
