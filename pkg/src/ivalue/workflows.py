"""Small composed pipelines shared by the CLI and the HTTP service."""

from __future__ import annotations

from .bridges import FuzzyRelation, SaatyRelation, from_fuzzy, from_saaty, to_fuzzy, to_saaty
from .errors import SchemaViolation
from .intervals import DEFAULT_TOL, NeutralElement
from .ipr import IntervalMatrix
from .repair import repair_chain
from .scales import (
    ConsecutiveChain,
    ValueScale,
    cumulative_from_chain,
    derive_scale,
    normalization_constant,
    normalize,
)


def scale_from_chain(chain: ConsecutiveChain, do_normalize: bool = False) -> ValueScale:
    """Value scale from a consecutive-comparison chain.

    Unequal-length steps are first adjusted to the nearest equal-length
    chain (a no-op when the lengths already agree). Normalization uses the
    constant of the original chain, not the adjusted one.
    """
    fix = repair_chain(chain)
    u = NeutralElement(fix.alpha)
    scale = cumulative_from_chain(ConsecutiveChain(fix.adjusted_steps), u)
    if do_normalize:
        scale = normalize(scale, normalization_constant(chain))
    return scale


def scale_from_matrix(
    Z: IntervalMatrix, do_normalize: bool = False, tol: float = DEFAULT_TOL
) -> ValueScale:
    """Value scale from a consistent best-to-worst matrix."""
    scale = derive_scale(Z, None, tol)
    if do_normalize:
        chain = ConsecutiveChain(tuple(Z.entry(i, i + 1) for i in range(Z.n - 1)))
        scale = normalize(scale, normalization_constant(chain))
    return scale


def convert_relation(obj, to: str):
    """Convert between fuzzy, ratio (saaty), and interval representations."""
    if isinstance(obj, FuzzyRelation):
        hub = from_fuzzy(obj)
    elif isinstance(obj, SaatyRelation):
        hub = from_saaty(obj)
    elif isinstance(obj, IntervalMatrix):
        hub = obj
    else:
        raise SchemaViolation(f"cannot convert a {type(obj).__name__}")
    if to == "ipr":
        return hub
    if to == "fuzzy":
        return to_fuzzy(hub)
    if to == "saaty":
        return to_saaty(hub)
    raise SchemaViolation(f"unknown conversion target {to!r}")
