"""Shared fixtures: reference tables and seeded random generators."""

from __future__ import annotations

import numpy as np
import pytest

from ivalue.bridges import FuzzyRelation, SaatyRelation
from ivalue.intervals import Interval, NeutralElement
from ivalue.ipr import IntervalMatrix

# Four objects, unit chain [4,6], [1,3], [2,4], neutral [-1, 1]: the
# consistent deck-of-cards reference table used across the suite.
REFERENCE_ROWS = [
    [(-1, 1), (4, 6), (6, 8), (9, 11)],
    [(-6, -4), (-1, 1), (1, 3), (4, 6)],
    [(-8, -6), (-3, -1), (-1, 1), (2, 4)],
    [(-11, -9), (-6, -4), (-4, -2), (-1, 1)],
]

# Card configurations for the two end-to-end elicitation scenarios.
CARDS_EQUAL = [(3, 5), (0, 2), (1, 3)]
CARDS_MIXED = [(3, 5), (0, 2), (1, 4)]


@pytest.fixture
def reference_matrix() -> IntervalMatrix:
    return IntervalMatrix.from_rows(REFERENCE_ROWS)


def make_consistent(rng: np.random.Generator, n: int) -> tuple[IntervalMatrix, NeutralElement]:
    """Random consistent relation: crisp consistent core plus a halfwidth."""
    w = rng.uniform(-10.0, 10.0, size=n)
    eps = float(rng.uniform(0.0, 2.0))
    mids = w[:, None] - w[None, :]
    return IntervalMatrix.from_midpoints(mids, eps), NeutralElement(eps)


def make_reciprocal(
    rng: np.random.Generator,
    n: int,
    mid_range: float = 10.0,
    max_len: float = 4.0,
) -> IntervalMatrix:
    """Random reciprocal (generally inconsistent) matrix."""
    lo = np.zeros((n, n))
    hi = np.zeros((n, n))
    for i in range(n):
        half = rng.uniform(0.0, max_len) / 2.0
        lo[i, i], hi[i, i] = -half, half
        for j in range(i + 1, n):
            mid = rng.uniform(-mid_range, mid_range)
            half = rng.uniform(0.0, max_len) / 2.0
            lo[i, j], hi[i, j] = mid - half, mid + half
            lo[j, i], hi[j, i] = -mid - half, -mid + half
    return IntervalMatrix(lo, hi)


def random_interval(rng: np.random.Generator, span: float = 10.0) -> Interval:
    a, b = sorted(rng.uniform(-span, span, size=2))
    return Interval(float(a), float(b))


def make_crisp_fuzzy(rng: np.random.Generator, n: int, consistent: bool) -> FuzzyRelation:
    """Crisp membership relation; additively consistent unless perturbed."""
    w = rng.uniform(-0.2, 0.2, size=n)
    y = 0.5 + (w[:, None] - w[None, :])
    if not consistent:
        i, j = 0, n - 1
        delta = float(rng.uniform(0.02, 0.05)) * (1 if rng.uniform() < 0.5 else -1)
        y[i, j] = min(1.0, max(0.0, y[i, j] + delta))
        y[j, i] = 1.0 - y[i, j]
    return FuzzyRelation.from_crisp(y)


def make_crisp_saaty(rng: np.random.Generator, n: int, consistent: bool) -> SaatyRelation:
    """Crisp ratio relation; multiplicatively consistent unless perturbed."""
    x = rng.uniform(-0.4, 0.4, size=n)
    a = np.power(9.0, x[:, None] - x[None, :])
    if not consistent:
        i, j = 0, n - 1
        factor = float(np.exp(rng.uniform(0.05, 0.15) * (1 if rng.uniform() < 0.5 else -1)))
        a[i, j] = min(9.0, max(1.0 / 9.0, a[i, j] * factor))
        a[j, i] = 1.0 / a[i, j]
    return SaatyRelation.from_crisp(a)


def make_random_document(rng: np.random.Generator):
    """A valid random document of a random kind, for round-trip tests."""
    from ivalue.formats import KINDS, document_for
    from ivalue.ipr import consistency_report
    from ivalue.repair import repair_full
    from ivalue.scales import ConsecutiveChain
    from ivalue.session import start_session

    kind = KINDS[int(rng.integers(0, len(KINDS)))]
    if kind == "interval_matrix":
        n = int(rng.integers(1, 6))
        return document_for(
            IntervalMatrix.from_rows([[random_interval(rng) for _ in range(n)] for _ in range(n)])
        )
    if kind == "chain":
        m = int(rng.integers(1, 6))
        return document_for(ConsecutiveChain(tuple(random_interval(rng) for _ in range(m))))
    if kind == "value_scale":
        from ivalue.scales import ValueScale

        n = int(rng.integers(1, 6))
        eps = float(rng.uniform(0, 2))
        mids = np.sort(rng.uniform(-10, 10, size=n))[::-1]
        scale = ValueScale(
            tuple(Interval(m - eps, m + eps) for m in mids),
            NeutralElement(eps),
            normalization_constant=float(rng.uniform(0.5, 20)) if rng.uniform() < 0.5 else None,
        )
        return document_for(scale)
    if kind == "repair_solution":
        return document_for(
            repair_full(make_reciprocal(rng, int(rng.integers(2, 5))), mu=float(rng.uniform(-3, 3)))
        )
    if kind == "fuzzy_relation":
        n = int(rng.integers(1, 5))
        lo = rng.uniform(0, 1, size=(n, n))
        hi = lo + rng.uniform(0, 1 - lo)
        return document_for(FuzzyRelation(IntervalMatrix(lo, hi)))
    if kind == "saaty_relation":
        n = int(rng.integers(1, 5))
        lo = rng.uniform(1 / 9, 9, size=(n, n))
        hi = lo + rng.uniform(0, 9 - lo)
        return document_for(SaatyRelation(IntervalMatrix(lo, hi)))
    if kind == "consistency_report":
        n = int(rng.integers(2, 5))
        Z = make_reciprocal(rng, n) if rng.uniform() < 0.5 else make_consistent(rng, n)[0]
        return document_for(consistency_report(Z))
    # session and diagnosis: walk a real elicitation to a random stage
    n = int(rng.integers(2, 6))
    session = start_session([f"obj{i}" for i in range(n)], timestamp=float(rng.uniform(0, 1e6)))
    stage = int(rng.integers(0, 5))
    filled = n - 1 if stage > 0 else int(rng.integers(0, n))
    for slot in range(filled):
        session.set_blank_cards(
            slot, (int(rng.integers(0, 4)), int(rng.integers(4, 9))), timestamp=float(slot)
        )
    if stage >= 1:
        diagnosis = session.diagnose(timestamp=100.0)
        if kind == "diagnosis":
            return document_for(diagnosis)
    if stage >= 2 and session.phase.value == "ProposalPending":
        session.respond_to_proposal(bool(rng.uniform() < 0.7), timestamp=101.0)
    if stage >= 3 and session.phase.value == "Accepted":
        session.finalize(timestamp=102.0)
    if kind == "diagnosis":
        for slot in range(filled, n - 1):
            session.set_blank_cards(slot, (0, int(rng.integers(1, 5))), timestamp=float(slot))
        return document_for(session.diagnose(timestamp=103.0))
    return document_for(session)


def additive_consistency_gap(Y: FuzzyRelation) -> float:
    """Classical additive-transitivity residual, computed directly."""
    y = Y.entries.midpoints()
    n = y.shape[0]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                worst = max(worst, abs(y[i, k] + y[k, j] - y[i, j] - 0.5))
    return worst


def multiplicative_consistency_gap(A: SaatyRelation) -> float:
    """Classical multiplicative-transitivity residual, computed directly."""
    a = A.entries.midpoints()
    n = a.shape[0]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                worst = max(worst, abs(a[i, k] * a[k, j] - a[i, j]))
    return worst
