"""Canonical JSON documents for matrices, chains, scales, and sessions.

One wire format serves the CLI, the HTTP service, the UI, and test
fixtures: a JSON object ``{"kind": ..., "payload": ..., "version": 1}``
with lexicographically sorted keys, compact separators, and
shortest-round-trip decimal numbers (integral doubles print without a
fractional part). Serialization is deterministic, so equal documents
produce byte-identical text, and ``parse(serialize(d)) == d``.

Files conventionally use the ``.ivpr.json`` extension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .bridges import SAATY_MAX, SAATY_MIN, FuzzyRelation, SaatyRelation
from .errors import InvariantViolation, IvalueError, Malformed, SchemaViolation
from .intervals import Interval, NeutralElement, length, leq0_within
from .ipr import ConsistencyReport, IntervalMatrix
from .repair import ChainRepairSolution, RepairSolution
from .scales import ConsecutiveChain, ValueScale
from .session import Diagnosis, ElicitationSession, HistoryEvent, Phase, SessionResult

FORMAT_VERSION = 1
FILE_EXTENSION = ".ivpr.json"

KINDS = (
    "interval_matrix",
    "chain",
    "value_scale",
    "session",
    "repair_solution",
    "fuzzy_relation",
    "saaty_relation",
    "consistency_report",
    "diagnosis",
)

_INVARIANT_TOL = 1e-9


@dataclass(frozen=True)
class Document:
    """A typed payload plus the format version it was written with."""

    kind: str
    payload: Any
    version: int = FORMAT_VERSION


# --------------------------------------------------------------------------
# canonical JSON text
# --------------------------------------------------------------------------

def _jsonable(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        # integral doubles print as integers; parsing restores the same bits
        if value.is_integer() and abs(value) < 1e15:
            return int(value)
        return value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def canonical_json(value) -> str:
    """Deterministic JSON text: sorted keys, compact, shortest decimals."""
    return json.dumps(
        _jsonable(value),
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=False,
        allow_nan=False,
    )


# --------------------------------------------------------------------------
# encoders: domain objects -> JSON-able payloads
# --------------------------------------------------------------------------

def _enc_interval(v: Interval) -> list:
    return [v.lower, v.upper]


def _enc_matrix(m: IntervalMatrix) -> list:
    return [[_enc_interval(m.entry(i, j)) for j in range(m.n)] for i in range(m.n)]


def _enc_scale(s: ValueScale) -> dict:
    payload = {
        "values": [_enc_interval(v) for v in s.values],
        "neutral": s.neutral.epsilon,
    }
    if s.normalization_constant is not None:
        payload["normalization_constant"] = s.normalization_constant
    return payload


def _enc_chain_repair(p: ChainRepairSolution) -> dict:
    return {
        "alpha": p.alpha,
        "adjusted_steps": [_enc_interval(s) for s in p.adjusted_steps],
        "objective": p.objective,
    }


def _enc_result(r: SessionResult) -> dict:
    return {
        "unit_chain": [_enc_interval(s) for s in r.unit_chain.steps],
        "neutral": r.neutral.epsilon,
        "full_table": _enc_matrix(r.full_table),
        "raw_scale": _enc_scale(r.raw_scale),
        "normalized_scale": _enc_scale(r.normalized_scale),
        "normalization_constant": r.normalization_constant,
    }


def session_payload(s: ElicitationSession) -> dict:
    payload: dict = {
        "session_id": s.session_id,
        "objects": list(s.objects),
        "phase": s.phase.value,
        "blank_cards": [list(c) if c is not None else None for c in s.blank_cards],
        "history": [{"ts": e.ts, "event": e.event, **e.data} for e in s.history],
    }
    if s.proposal is not None:
        payload["proposal"] = _enc_chain_repair(s.proposal)
    if s.result is not None:
        payload["result"] = _enc_result(s.result)
    return payload


def _encode_payload(kind: str, payload) -> Any:
    if kind == "interval_matrix":
        return {"entries": _enc_matrix(payload)}
    if kind == "chain":
        return {"steps": [_enc_interval(s) for s in payload.steps]}
    if kind == "value_scale":
        return _enc_scale(payload)
    if kind == "session":
        return session_payload(payload)
    if kind == "repair_solution":
        return {
            "nu": list(payload.nu),
            "alpha": payload.alpha,
            "mu": payload.mu,
            "objective": payload.objective,
            "repaired": _enc_matrix(payload.repaired),
        }
    if kind in ("fuzzy_relation", "saaty_relation"):
        return {"entries": _enc_matrix(payload.entries)}
    if kind == "consistency_report":
        out: dict = {
            "is_reciprocal": payload.is_reciprocal,
            "is_consistent": payload.is_consistent,
            "max_residual": payload.max_residual,
        }
        if payload.neutral is not None:
            out["neutral"] = payload.neutral.epsilon
        if payload.worst_triple is not None:
            out["worst_triple"] = list(payload.worst_triple)
        return out
    if kind == "diagnosis":
        out = _enc_chain_repair(payload.proposal)
        out["equal_lengths"] = payload.equal_lengths
        return out
    raise SchemaViolation(f"unknown document kind {kind!r}", path="kind")


_KIND_BY_TYPE = {
    IntervalMatrix: "interval_matrix",
    ConsecutiveChain: "chain",
    ValueScale: "value_scale",
    ElicitationSession: "session",
    RepairSolution: "repair_solution",
    FuzzyRelation: "fuzzy_relation",
    SaatyRelation: "saaty_relation",
    ConsistencyReport: "consistency_report",
    Diagnosis: "diagnosis",
}


def document_for(obj) -> Document:
    """Wrap a domain object in a Document, inferring its kind."""
    kind = _KIND_BY_TYPE.get(type(obj))
    if kind is None:
        raise SchemaViolation(f"no document kind for {type(obj).__name__}")
    return Document(kind=kind, payload=obj)


def serialize(doc: Document) -> str:
    """Canonical text for a document; deterministic and byte-stable."""
    return canonical_json(
        {
            "kind": doc.kind,
            "payload": _encode_payload(doc.kind, doc.payload),
            "version": doc.version,
        }
    )


def dumps(obj) -> str:
    """serialize(document_for(obj)): one-step canonical text for a domain object."""
    return serialize(document_for(obj))


# --------------------------------------------------------------------------
# decoders: validated JSON -> domain objects
# --------------------------------------------------------------------------

def _expect_object(node, path: str) -> dict:
    if not isinstance(node, dict):
        raise SchemaViolation(f"expected object at {path}", path=path)
    return node


def _expect_array(node, path: str) -> list:
    if not isinstance(node, list):
        raise SchemaViolation(f"expected array at {path}", path=path)
    return node


def _expect_number(node, path: str) -> float:
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise SchemaViolation(f"expected number at {path}", path=path)
    return float(node)


def _expect_int(node, path: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise SchemaViolation(f"expected integer at {path}", path=path)
    return node


def _expect_string(node, path: str) -> str:
    if not isinstance(node, str):
        raise SchemaViolation(f"expected string at {path}", path=path)
    return node


def _expect_bool(node, path: str) -> bool:
    if not isinstance(node, bool):
        raise SchemaViolation(f"expected boolean at {path}", path=path)
    return node


def _get(obj: dict, key: str, path: str):
    if key not in obj:
        raise SchemaViolation(f"missing field {key!r}", path=f"{path}.{key}" if path else key)
    return obj[key]


def _dec_interval(node, path: str) -> Interval:
    arr = _expect_array(node, path)
    if len(arr) != 2:
        raise SchemaViolation(f"interval at {path} must have exactly two bounds", path=path)
    lo = _expect_number(arr[0], f"{path}[0]")
    hi = _expect_number(arr[1], f"{path}[1]")
    try:
        return Interval(lo, hi)
    except InvariantViolation as exc:
        raise InvariantViolation(exc.detail, path=path) from None


def _dec_matrix(node, path: str) -> IntervalMatrix:
    rows = _expect_array(node, path)
    if not rows:
        raise InvariantViolation("matrix must be nonempty", path=path)
    n = len(rows)
    entries = []
    for i, row in enumerate(rows):
        cells = _expect_array(row, f"{path}[{i}]")
        if len(cells) != n:
            raise InvariantViolation(
                f"row {i} has {len(cells)} entries, expected {n} (square matrix)",
                path=f"{path}[{i}]",
            )
        entries.append([_dec_interval(c, f"{path}[{i}][{j}]") for j, c in enumerate(cells)])
    return IntervalMatrix.from_rows(entries)


def _dec_neutral(node, path: str) -> NeutralElement:
    eps = _expect_number(node, path)
    if eps < 0:
        raise InvariantViolation(f"neutral half-width must be nonnegative, got {eps}", path=path)
    return NeutralElement(eps)


def _dec_chain(node, path: str) -> ConsecutiveChain:
    steps = _expect_array(node, path)
    if not steps:
        raise InvariantViolation("chain must have at least one step", path=path)
    return ConsecutiveChain(
        tuple(_dec_interval(s, f"{path}[{i}]") for i, s in enumerate(steps))
    )


def _dec_scale(node, path: str) -> ValueScale:
    obj = _expect_object(node, path)
    values_node = _expect_array(_get(obj, "values", path), f"{path}.values")
    if not values_node:
        raise InvariantViolation("value scale must be nonempty", path=f"{path}.values")
    values = tuple(
        _dec_interval(v, f"{path}.values[{i}]") for i, v in enumerate(values_node)
    )
    neutral = _dec_neutral(_get(obj, "neutral", path), f"{path}.neutral")
    for i, v in enumerate(values):
        if abs(length(v) - neutral.width) > _INVARIANT_TOL:
            raise InvariantViolation(
                f"value {i} has length {length(v)!r}, expected {neutral.width!r}",
                path=f"{path}.values[{i}]",
            )
    for i in range(len(values) - 1):
        if not leq0_within(values[i + 1], values[i], _INVARIANT_TOL):
            raise InvariantViolation(
                "values must decrease under the bound-wise order",
                path=f"{path}.values[{i + 1}]",
            )
    c = None
    if "normalization_constant" in obj:
        c = _expect_number(obj["normalization_constant"], f"{path}.normalization_constant")
        if c <= 0:
            raise InvariantViolation(
                f"normalization constant must be positive, got {c}",
                path=f"{path}.normalization_constant",
            )
    return ValueScale(values, neutral, normalization_constant=c)


def _dec_chain_repair(obj: dict, path: str) -> ChainRepairSolution:
    alpha = _expect_number(_get(obj, "alpha", path), f"{path}.alpha")
    if alpha < 0:
        raise InvariantViolation(f"alpha must be nonnegative, got {alpha}", path=f"{path}.alpha")
    steps_node = _expect_array(_get(obj, "adjusted_steps", path), f"{path}.adjusted_steps")
    steps = tuple(
        _dec_interval(s, f"{path}.adjusted_steps[{i}]") for i, s in enumerate(steps_node)
    )
    for i, s in enumerate(steps):
        if abs(length(s) - 2.0 * alpha) > _INVARIANT_TOL:
            raise InvariantViolation(
                f"adjusted step {i} must have length 2*alpha",
                path=f"{path}.adjusted_steps[{i}]",
            )
    objective = _expect_number(_get(obj, "objective", path), f"{path}.objective")
    if objective < 0:
        raise InvariantViolation("objective must be nonnegative", path=f"{path}.objective")
    return ChainRepairSolution(alpha=alpha, adjusted_steps=steps, objective=objective)


def _dec_cards(node, path: str) -> tuple[int, int] | None:
    if node is None:
        return None
    arr = _expect_array(node, path)
    if len(arr) != 2:
        raise SchemaViolation(f"card range at {path} must have two entries", path=path)
    lo = _expect_int(arr[0], f"{path}[0]")
    hi = _expect_int(arr[1], f"{path}[1]")
    if lo < 0 or hi < 0:
        raise InvariantViolation("card counts must be nonnegative", path=path)
    if lo > hi:
        raise InvariantViolation("card count lower bound exceeds upper bound", path=path)
    return (lo, hi)


def _dec_result(node, path: str) -> SessionResult:
    obj = _expect_object(node, path)
    unit = _dec_chain(_get(obj, "unit_chain", path), f"{path}.unit_chain")
    neutral = _dec_neutral(_get(obj, "neutral", path), f"{path}.neutral")
    table = _dec_matrix(_get(obj, "full_table", path), f"{path}.full_table")
    raw = _dec_scale(_get(obj, "raw_scale", path), f"{path}.raw_scale")
    norm = _dec_scale(_get(obj, "normalized_scale", path), f"{path}.normalized_scale")
    c = _expect_number(_get(obj, "normalization_constant", path), f"{path}.normalization_constant")
    if c <= 0:
        raise InvariantViolation(
            "normalization constant must be positive", path=f"{path}.normalization_constant"
        )
    return SessionResult(
        unit_chain=unit,
        neutral=neutral,
        full_table=table,
        raw_scale=raw,
        normalized_scale=norm,
        normalization_constant=c,
    )


def _dec_session(node, path: str) -> ElicitationSession:
    obj = _expect_object(node, path)
    session_id = _expect_string(_get(obj, "session_id", path), f"{path}.session_id")
    objects_node = _expect_array(_get(obj, "objects", path), f"{path}.objects")
    objects = [
        _expect_string(o, f"{path}.objects[{i}]") for i, o in enumerate(objects_node)
    ]
    if len(objects) < 2:
        raise InvariantViolation("session needs at least two objects", path=f"{path}.objects")
    if len(set(objects)) != len(objects):
        raise InvariantViolation("object names must be distinct", path=f"{path}.objects")
    phase_str = _expect_string(_get(obj, "phase", path), f"{path}.phase")
    try:
        phase = Phase(phase_str)
    except ValueError:
        raise SchemaViolation(f"unknown phase {phase_str!r}", path=f"{path}.phase") from None
    cards_node = _expect_array(_get(obj, "blank_cards", path), f"{path}.blank_cards")
    if len(cards_node) != len(objects) - 1:
        raise InvariantViolation(
            f"expected {len(objects) - 1} card slots, got {len(cards_node)}",
            path=f"{path}.blank_cards",
        )
    cards = [
        _dec_cards(c, f"{path}.blank_cards[{i}]") for i, c in enumerate(cards_node)
    ]
    history_node = _expect_array(_get(obj, "history", path), f"{path}.history")
    history = []
    for i, ev in enumerate(history_node):
        ev_obj = _expect_object(ev, f"{path}.history[{i}]")
        ts = _expect_number(_get(ev_obj, "ts", f"{path}.history[{i}]"), f"{path}.history[{i}].ts")
        name = _expect_string(
            _get(ev_obj, "event", f"{path}.history[{i}]"), f"{path}.history[{i}].event"
        )
        data = {k: v for k, v in ev_obj.items() if k not in ("ts", "event")}
        history.append(HistoryEvent(ts=ts, event=name, data=data))
    proposal = None
    if "proposal" in obj:
        proposal = _dec_chain_repair(
            _expect_object(obj["proposal"], f"{path}.proposal"), f"{path}.proposal"
        )
    result = None
    if "result" in obj:
        result = _dec_result(obj["result"], f"{path}.result")
    if phase in (Phase.PROPOSAL_PENDING, Phase.ACCEPTED, Phase.FINALIZED) and proposal is None:
        raise InvariantViolation(
            f"phase {phase.value} requires a proposal", path=f"{path}.proposal"
        )
    if phase is Phase.FINALIZED and result is None:
        raise InvariantViolation("finalized session requires a result", path=f"{path}.result")
    if phase not in (Phase.CARDS_ENTRY, Phase.RANKING) and any(c is None for c in cards):
        raise InvariantViolation(
            f"phase {phase.value} requires all card slots filled", path=f"{path}.blank_cards"
        )
    return ElicitationSession.restore(
        session_id=session_id,
        objects=objects,
        blank_cards=cards,
        phase=phase,
        proposal=proposal,
        result=result,
        history=history,
    )


def _dec_repair_solution(obj: dict, path: str) -> RepairSolution:
    nu_node = _expect_array(_get(obj, "nu", path), f"{path}.nu")
    nu = tuple(_expect_number(x, f"{path}.nu[{i}]") for i, x in enumerate(nu_node))
    if not nu:
        raise InvariantViolation("nu must be nonempty", path=f"{path}.nu")
    alpha = _expect_number(_get(obj, "alpha", path), f"{path}.alpha")
    if alpha < 0:
        raise InvariantViolation("alpha must be nonnegative", path=f"{path}.alpha")
    mu = _expect_number(_get(obj, "mu", path), f"{path}.mu")
    objective = _expect_number(_get(obj, "objective", path), f"{path}.objective")
    if objective < 0:
        raise InvariantViolation("objective must be nonnegative", path=f"{path}.objective")
    repaired = _dec_matrix(_get(obj, "repaired", path), f"{path}.repaired")
    if repaired.n != len(nu):
        raise InvariantViolation(
            "repaired matrix size must match nu", path=f"{path}.repaired"
        )
    if abs(sum(nu) / len(nu) - mu) > _INVARIANT_TOL:
        raise InvariantViolation("mean of nu must equal mu", path=f"{path}.nu")
    for i in range(repaired.n):
        for j in range(repaired.n):
            d = nu[i] - nu[j]
            if (
                abs(repaired.lower[i, j] - (d - alpha)) > _INVARIANT_TOL
                or abs(repaired.upper[i, j] - (d + alpha)) > _INVARIANT_TOL
            ):
                raise InvariantViolation(
                    "repaired entries must equal [nu_i - nu_j -/+ alpha]",
                    path=f"{path}.repaired[{i}][{j}]",
                )
    return RepairSolution(nu=nu, alpha=alpha, repaired=repaired, objective=objective, mu=mu)


def _dec_report(obj: dict, path: str) -> ConsistencyReport:
    is_rec = _expect_bool(_get(obj, "is_reciprocal", path), f"{path}.is_reciprocal")
    is_con = _expect_bool(_get(obj, "is_consistent", path), f"{path}.is_consistent")
    if is_con and not is_rec:
        raise InvariantViolation(
            "a consistent relation is necessarily reciprocal", path=f"{path}.is_consistent"
        )
    max_residual = _expect_number(_get(obj, "max_residual", path), f"{path}.max_residual")
    if max_residual < 0:
        raise InvariantViolation("max_residual must be nonnegative", path=f"{path}.max_residual")
    neutral = None
    if "neutral" in obj:
        neutral = _dec_neutral(obj["neutral"], f"{path}.neutral")
    triple = None
    if "worst_triple" in obj:
        arr = _expect_array(obj["worst_triple"], f"{path}.worst_triple")
        if len(arr) != 3:
            raise SchemaViolation("worst_triple must have three indices", path=f"{path}.worst_triple")
        triple = tuple(_expect_int(x, f"{path}.worst_triple[{i}]") for i, x in enumerate(arr))
    return ConsistencyReport(
        is_reciprocal=is_rec,
        is_consistent=is_con,
        neutral=neutral,
        max_residual=max_residual,
        worst_triple=triple,  # type: ignore[arg-type]
    )


def _dec_fuzzy(obj: dict, path: str) -> FuzzyRelation:
    m = _dec_matrix(_get(obj, "entries", path), f"{path}.entries")
    if m.lower.min() < -1e-12 or m.upper.max() > 1.0 + 1e-12:
        raise InvariantViolation("fuzzy bounds must lie within [0, 1]", path=f"{path}.entries")
    return FuzzyRelation(m)


def _dec_saaty(obj: dict, path: str) -> SaatyRelation:
    m = _dec_matrix(_get(obj, "entries", path), f"{path}.entries")
    if m.lower.min() < SAATY_MIN - 1e-12 or m.upper.max() > SAATY_MAX + 1e-12:
        raise InvariantViolation("ratio bounds must lie within [1/9, 9]", path=f"{path}.entries")
    return SaatyRelation(m)


def _decode_payload(kind: str, node) -> Any:
    path = "payload"
    if kind == "interval_matrix":
        obj = _expect_object(node, path)
        return _dec_matrix(_get(obj, "entries", path), f"{path}.entries")
    if kind == "chain":
        obj = _expect_object(node, path)
        return _dec_chain(_get(obj, "steps", path), f"{path}.steps")
    if kind == "value_scale":
        return _dec_scale(node, path)
    if kind == "session":
        return _dec_session(node, path)
    if kind == "repair_solution":
        return _dec_repair_solution(_expect_object(node, path), path)
    if kind == "fuzzy_relation":
        return _dec_fuzzy(_expect_object(node, path), path)
    if kind == "saaty_relation":
        return _dec_saaty(_expect_object(node, path), path)
    if kind == "consistency_report":
        return _dec_report(_expect_object(node, path), path)
    if kind == "diagnosis":
        obj = _expect_object(node, path)
        equal = _expect_bool(_get(obj, "equal_lengths", path), f"{path}.equal_lengths")
        return Diagnosis(equal_lengths=equal, proposal=_dec_chain_repair(obj, path))
    raise SchemaViolation(f"unknown document kind {kind!r}", path="kind")


def parse(text: str) -> Document:
    """Validate canonical text and rebuild the domain object it encodes.

    Unknown extra fields are ignored; unknown kinds and versions are
    rejected. All structural checks raise SchemaViolation with the path of
    the offending field; domain invariants raise InvariantViolation.
    """
    try:
        root = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise Malformed(f"not valid JSON: {exc}") from None
    return parse_node(root)


def parse_node(root) -> Document:
    """Like parse, but starting from an already-decoded JSON value."""
    obj = _expect_object(root, "$")
    kind = _expect_string(_get(obj, "kind", ""), "kind")
    if kind not in KINDS:
        raise SchemaViolation(f"unknown document kind {kind!r}", path="kind")
    version = _expect_int(_get(obj, "version", ""), "version")
    if version != FORMAT_VERSION:
        raise SchemaViolation(f"unsupported format version {version}", path="version")
    payload = _decode_payload(kind, _get(obj, "payload", ""))
    return Document(kind=kind, payload=payload, version=version)


def load_path(path: str) -> Document:
    """Parse a document file, reporting I/O problems as Malformed."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise Malformed(f"cannot read {path}: {exc}") from None
    return parse(text)


def error_body(exc: IvalueError) -> dict:
    """The error payload shared by the CLI (--json) and the HTTP service."""
    body = {"error_name": exc.error_name, "detail": exc.detail or exc.error_name}
    if exc.path is not None:
        body["path"] = exc.path
    return body
