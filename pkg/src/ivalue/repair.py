"""Least-squares consistency repair.

Given a reciprocal but possibly inconsistent matrix, find the nearest
consistent one. Consistent matrices are exactly those of the form

    z_ij = [nu_i - nu_j - alpha, nu_i - nu_j + alpha]

for crisp priorities nu and a neutral half-width alpha >= 0, so the
squared-distance objective

    F(nu, alpha) = (1 / 2n^2) * sum_ij (z_ij^+ - (nu_i - nu_j + alpha))^2
                                     + (z_ij^- - (nu_i - nu_j - alpha))^2

is an unconstrained quadratic with a closed-form minimizer:

    nu_k  = mu + mean_j midpoint(z_kj)        (mean of nu prescribed as mu)
    alpha = sum_ij length(z_ij) / (2 n^2)

The nu part of the solution is unique only up to translation, hence the
prescribed mean mu acting as a gauge. The same construction applied to a
chain of consecutive comparisons (each entry weighted 1 / 2(n-1)) gives
the equal-length adjustment used inside elicitation sessions:

    alpha = sum_i length(step_i) / (2 (n-1)),  adjusted step = midpoint +- alpha.

``oracle_repair`` is an independent projected-gradient minimizer of the
same objective, kept around so tests can cross-validate the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NegativeAlpha, NotReciprocal
from .intervals import DEFAULT_TOL, Interval, length, midpoint
from .ipr import IntervalMatrix, reciprocity_gap
from .scales import ConsecutiveChain


@dataclass(frozen=True)
class RepairSolution:
    """Optimum of the full-matrix repair: priorities, half-width, repaired matrix."""

    nu: tuple[float, ...]
    alpha: float
    repaired: IntervalMatrix
    objective: float
    mu: float


@dataclass(frozen=True)
class ChainRepairSolution:
    """Equal-length adjustment of a consecutive-comparison chain."""

    alpha: float
    adjusted_steps: tuple[Interval, ...]
    objective: float


def _require_reciprocal(Z: IntervalMatrix, tol: float) -> None:
    gap = reciprocity_gap(Z)
    if gap > tol:
        raise NotReciprocal(f"reciprocity gap {gap:g} exceeds tolerance {tol:g}")


def _consistent_matrix(nu: np.ndarray, alpha: float) -> IntervalMatrix:
    diff = nu[:, None] - nu[None, :]
    return IntervalMatrix(diff - alpha, diff + alpha)


def objective_value(Z: IntervalMatrix, Zbar: IntervalMatrix) -> float:
    """Normalized squared bound-wise distance between two matrices."""
    if Z.lower.shape != Zbar.lower.shape:
        raise DimensionMismatch(
            f"shapes differ: {Z.lower.shape} vs {Zbar.lower.shape}"
        )
    n = Z.n
    dl = Z.lower - Zbar.lower
    dh = Z.upper - Zbar.upper
    return float((dl * dl + dh * dh).sum() / (2.0 * n * n))


def repair_full(Z: IntervalMatrix, mu: float = 0.0, tol: float = DEFAULT_TOL) -> RepairSolution:
    """Closed-form nearest consistent matrix, with the neutral free.

    The optimal half-width is half the mean entry length, so it is always
    nonnegative and the alpha >= 0 constraint never binds.
    """
    _require_reciprocal(Z, tol)
    n = Z.n
    nu = mu + Z.midpoints().mean(axis=1)
    alpha = float(Z.lengths().sum() / (2.0 * n * n))
    repaired = _consistent_matrix(nu, alpha)
    return RepairSolution(
        nu=tuple(float(x) for x in nu),
        alpha=alpha,
        repaired=repaired,
        objective=objective_value(Z, repaired),
        mu=mu,
    )


def repair_fixed_neutral(
    Z: IntervalMatrix, alpha: float, mu: float = 0.0, tol: float = DEFAULT_TOL
) -> RepairSolution:
    """Nearest consistent matrix for a caller-chosen neutral half-width.

    Useful when the half-width must be meaningful in context (e.g. an
    integer number of units): sweep a few alphas and show the results.
    The priority part of the optimum does not depend on alpha.
    """
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be nonnegative, got {alpha:g}")
    _require_reciprocal(Z, tol)
    nu = mu + Z.midpoints().mean(axis=1)
    repaired = _consistent_matrix(nu, float(alpha))
    return RepairSolution(
        nu=tuple(float(x) for x in nu),
        alpha=float(alpha),
        repaired=repaired,
        objective=objective_value(Z, repaired),
        mu=mu,
    )


def repair_chain(chain: ConsecutiveChain) -> ChainRepairSolution:
    """Closest equal-length chain: midpoints kept, common half-width alpha.

    alpha is the mean half-length of the steps, so total uncertainty is
    conserved. The ordering constraint (adjusted steps at or above the
    neutral) never binds when all step midpoints are nonnegative, which
    always holds for unit chains built from card counts.
    """
    m = len(chain.steps)
    alpha = sum(length(s) for s in chain.steps) / (2.0 * m)
    adjusted = []
    objective = 0.0
    for s in chain.steps:
        c = midpoint(s)
        adj = Interval(c - alpha, c + alpha)
        adjusted.append(adj)
        objective += (s.upper - adj.upper) ** 2 + (s.lower - adj.lower) ** 2
    return ChainRepairSolution(
        alpha=alpha,
        adjusted_steps=tuple(adjusted),
        objective=objective / (2.0 * m),
    )


def oracle_repair(
    Z: IntervalMatrix,
    mu: float = 0.0,
    iterations: int = 10_000,
    step: float = 1e-2,
    tol: float = DEFAULT_TOL,
) -> RepairSolution:
    """Projected-gradient minimizer of the repair objective.

    Independent of the closed form: starts from (nu = mu, alpha = 0),
    clamps alpha at zero, re-centers the mean of nu to mu after every
    step, and halves the step size whenever the objective would increase.
    Deterministic; intended for cross-validation in tests.
    """
    _require_reciprocal(Z, tol)
    lo, hi, n = Z.lower, Z.upper, Z.n
    inv = 1.0 / (n * n)

    def objective(nu: np.ndarray, alpha: float) -> float:
        diff = nu[:, None] - nu[None, :]
        rl = lo - (diff - alpha)
        rh = hi - (diff + alpha)
        return float((rl * rl + rh * rh).sum() * inv / 2.0)

    nu = np.full(n, float(mu))
    alpha = 0.0
    current = objective(nu, alpha)
    for _ in range(iterations):
        diff = nu[:, None] - nu[None, :]
        rl = (diff - alpha) - lo
        rh = (diff + alpha) - hi
        s = rl + rh
        grad_nu = (s.sum(axis=1) - s.sum(axis=0)) * inv
        grad_alpha = float((rh - rl).sum()) * inv
        if max(float(np.abs(grad_nu).max()), abs(grad_alpha)) < 1e-12:
            break
        while True:
            cand_nu = nu - step * grad_nu
            cand_nu += mu - cand_nu.mean()
            cand_alpha = max(0.0, alpha - step * grad_alpha)
            cand = objective(cand_nu, cand_alpha)
            if cand <= current or step < 1e-18:
                break
            step /= 2.0
        nu, alpha, current = cand_nu, cand_alpha, cand
    repaired = _consistent_matrix(nu, alpha)
    return RepairSolution(
        nu=tuple(float(x) for x in nu),
        alpha=float(alpha),
        repaired=repaired,
        objective=objective_value(Z, repaired),
        mu=mu,
    )
