"""Interval-valued preference relations and value-scale elicitation.

The package derives interval-valued value scales from interval pairwise
judgments: it checks reciprocity and consistency, repairs inconsistent
tables by closed-form least squares, bridges to classical fuzzy and
ratio-scale preference models, and drives the deck-of-cards elicitation
workflow end to end.
"""

from .intervals import (
    DEFAULT_TOL,
    Interval,
    NeutralElement,
    add,
    is_neutral,
    length,
    leq0,
    midpoint,
    negate,
    scale,
    subtract,
)
from .ipr import (
    ConsistencyReport,
    IntervalMatrix,
    check_consistency,
    check_reciprocity,
    consistency_report,
    inconsistency_index,
    infer_neutral,
    matrix_from_values,
    midpoint_decomposition,
    values_from_reference,
)
from .scales import (
    ConsecutiveChain,
    ValueScale,
    check_monotone,
    cumulative_from_chain,
    derive_scale,
    normalization_constant,
    normalize,
)
from .repair import (
    ChainRepairSolution,
    RepairSolution,
    objective_value,
    oracle_repair,
    repair_chain,
    repair_fixed_neutral,
    repair_full,
)
from .bridges import (
    FuzzyRelation,
    SaatyRelation,
    consistency_transfer_check,
    from_fuzzy,
    from_saaty,
    to_fuzzy,
    to_saaty,
)
from .session import (
    Diagnosis,
    ElicitationSession,
    Phase,
    SessionResult,
    start_session,
)
from .formats import Document, canonical_json, document_for, dumps, parse, serialize
from . import errors

__all__ = [
    "DEFAULT_TOL",
    "Interval",
    "NeutralElement",
    "add",
    "negate",
    "subtract",
    "scale",
    "leq0",
    "length",
    "midpoint",
    "is_neutral",
    "IntervalMatrix",
    "ConsistencyReport",
    "check_reciprocity",
    "check_consistency",
    "consistency_report",
    "infer_neutral",
    "values_from_reference",
    "matrix_from_values",
    "midpoint_decomposition",
    "inconsistency_index",
    "ConsecutiveChain",
    "ValueScale",
    "derive_scale",
    "cumulative_from_chain",
    "normalization_constant",
    "normalize",
    "check_monotone",
    "RepairSolution",
    "ChainRepairSolution",
    "repair_full",
    "repair_fixed_neutral",
    "repair_chain",
    "objective_value",
    "oracle_repair",
    "FuzzyRelation",
    "SaatyRelation",
    "from_fuzzy",
    "to_fuzzy",
    "from_saaty",
    "to_saaty",
    "consistency_transfer_check",
    "ElicitationSession",
    "SessionResult",
    "Diagnosis",
    "Phase",
    "start_session",
    "Document",
    "serialize",
    "parse",
    "dumps",
    "document_for",
    "canonical_json",
    "errors",
]

__version__ = "0.1.0"
