"""HTTP service exposing elicitation sessions and stateless computation.

Sessions live in memory behind an append-only event log (one canonical
JSON event per line). Replaying the log after a restart reconstructs the
exact state, byte for byte. Session mutations use optimistic concurrency:
every response carries the session's revision number, and every mutation
must present it in the ``If-Match`` header; a stale revision gets 409.

Configuration is two knobs only: the listen address (env ``IVALUE_ADDR``,
default 127.0.0.1:8080) and the log path (env ``IVALUE_LOG``, default
./sessions.log), both overridable by ``ivalue serve`` flags.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from typing import Any

from fastapi import FastAPI, Request, Response

from . import errors
from .errors import (
    Conflict,
    IvalueError,
    Malformed,
    RevisionRequired,
    SchemaViolation,
    UnknownSession,
)
from .formats import (
    FORMAT_VERSION,
    canonical_json,
    document_for,
    error_body,
    parse_node,
    serialize,
    session_payload,
)
from .intervals import DEFAULT_TOL, NeutralElement
from .ipr import IntervalMatrix, consistency_report
from .repair import repair_fixed_neutral, repair_full
from .scales import ConsecutiveChain
from .session import Diagnosis, ElicitationSession, start_session
from .workflows import convert_relation, scale_from_chain, scale_from_matrix

DEFAULT_ADDR = "127.0.0.1:8080"
DEFAULT_LOG = "./sessions.log"

_STATUS_BY_ERROR = {
    errors.TooFewObjects: 400,
    errors.DuplicateNames: 400,
    errors.NegativeCards: 400,
    errors.NonIntegerCards: 400,
    errors.Malformed: 400,
    errors.SchemaViolation: 400,
    errors.InvariantViolation: 400,
    errors.OutOfDomain: 400,
    errors.NotReciprocal: 400,
    errors.InconsistentInput: 400,
    errors.LengthMismatch: 400,
    errors.NotOrdered: 400,
    errors.DegenerateScale: 400,
    errors.DimensionMismatch: 400,
    errors.NegativeAlpha: 400,
    errors.RevisionRequired: 400,
    errors.BadSlot: 404,
    errors.UnknownSession: 404,
    errors.IncompleteCards: 409,
    errors.NoPendingProposal: 409,
    errors.NotAccepted: 409,
    errors.AlreadyFinalized: 409,
    errors.Conflict: 409,
}


class SessionStore:
    """Sessions plus revisions, persisted as an append-only event log."""

    def __init__(self, log_path: str):
        self._log_path = str(log_path)
        self._lock = threading.RLock()
        self._sessions: dict[str, ElicitationSession] = {}
        self._revisions: dict[str, int] = {}
        self._replay()
        self._log = open(self._log_path, "a", encoding="utf-8")

    # -- persistence ------------------------------------------------------

    def _replay(self) -> None:
        if not os.path.exists(self._log_path):
            return
        with open(self._log_path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    self._apply(json.loads(line), record=False)

    def _append(self, event: dict) -> None:
        self._log.write(canonical_json(event) + "\n")
        self._log.flush()
        os.fsync(self._log.fileno())

    def _apply(self, event: dict, record: bool) -> ElicitationSession:
        name = event["event"]
        ts = event["ts"]
        sid = event["session_id"]
        if name == "created":
            session = start_session(event["objects"], session_id=sid, timestamp=ts)
            self._sessions[sid] = session
            self._revisions[sid] = 0
        else:
            session = self._sessions[sid]
            if name == "cards_set":
                session.set_blank_cards(event["slot"], event["cards"], timestamp=ts)
                self._revisions[sid] += 1
            elif name == "diagnosed":
                session.diagnose(timestamp=ts)
            elif name == "responded":
                session.respond_to_proposal(event["accept"], timestamp=ts)
                self._revisions[sid] += 1
            elif name == "finalized":
                session.finalize(timestamp=ts)
                self._revisions[sid] += 1
            else:
                raise Malformed(f"unknown event {name!r} in log")
        if record:
            self._append(event)
        return session

    # -- operations ---------------------------------------------------------

    def _get(self, sid: str) -> ElicitationSession:
        session = self._sessions.get(sid)
        if session is None:
            raise UnknownSession(f"no session {sid!r}")
        return session

    def _check_revision(self, sid: str, expected: int | None) -> None:
        if expected is None:
            raise RevisionRequired("mutations must carry the session revision in If-Match")
        current = self._revisions[sid]
        if expected != current:
            raise Conflict(f"revision {expected} is stale, session is at {current}")

    def create(self, objects) -> tuple[ElicitationSession, int]:
        with self._lock:
            sid = secrets.token_urlsafe(16)
            # validate before logging so the log only holds applied events
            start_session(objects, session_id=sid, timestamp=0.0)
            session = self._apply(
                {"event": "created", "ts": time.time(), "session_id": sid,
                 "objects": [str(o) for o in objects]},
                record=True,
            )
            return session, self._revisions[sid]

    def get(self, sid: str) -> tuple[ElicitationSession, int]:
        with self._lock:
            return self._get(sid), self._revisions[sid]

    def set_cards(self, sid, slot, cards, revision) -> tuple[ElicitationSession, int]:
        with self._lock:
            session = self._get(sid)
            self._check_revision(sid, revision)
            session.set_blank_cards(slot, cards)
            self._revisions[sid] += 1
            self._append(
                {"event": "cards_set", "ts": session.history[-1].ts, "session_id": sid,
                 "slot": slot, "cards": list(session.blank_cards[slot])}
            )
            return session, self._revisions[sid]

    def diagnose(self, sid) -> tuple[ElicitationSession, int, Diagnosis]:
        with self._lock:
            session = self._get(sid)
            before = session.phase
            diagnosis = session.diagnose()
            if session.phase is not before:
                self._append(
                    {"event": "diagnosed", "ts": session.history[-1].ts, "session_id": sid}
                )
            return session, self._revisions[sid], diagnosis

    def respond(self, sid, accept: bool, revision) -> tuple[ElicitationSession, int]:
        with self._lock:
            session = self._get(sid)
            self._check_revision(sid, revision)
            session.respond_to_proposal(accept)
            self._revisions[sid] += 1
            self._append(
                {"event": "responded", "ts": session.history[-1].ts, "session_id": sid,
                 "accept": bool(accept)}
            )
            return session, self._revisions[sid]

    def finalize(self, sid, revision) -> tuple[ElicitationSession, int]:
        with self._lock:
            session = self._get(sid)
            self._check_revision(sid, revision)
            session.finalize()
            self._revisions[sid] += 1
            self._append(
                {"event": "finalized", "ts": session.history[-1].ts, "session_id": sid}
            )
            return session, self._revisions[sid]

    def close(self) -> None:
        self._log.close()


# --------------------------------------------------------------------------
# HTTP layer
# --------------------------------------------------------------------------

def _doc_response(doc: dict, status: int = 200) -> Response:
    return Response(content=canonical_json(doc), status_code=status, media_type="application/json")


def _session_doc(session: ElicitationSession, revision: int) -> dict:
    payload = session_payload(session)
    payload["revision"] = revision
    return {"kind": "session", "payload": payload, "version": FORMAT_VERSION}


def _error_response(exc: IvalueError) -> Response:
    status = _STATUS_BY_ERROR.get(type(exc), 400)
    return Response(
        content=canonical_json(error_body(exc)),
        status_code=status,
        media_type="application/json",
    )


async def _json_body(request: Request) -> Any:
    raw = await request.body()
    try:
        return json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise Malformed(f"request body is not valid JSON: {exc}") from None


def _revision_header(request: Request) -> int | None:
    value = request.headers.get("If-Match")
    if value is None:
        return None
    try:
        return int(value.strip().strip('"'))
    except ValueError:
        raise RevisionRequired(f"If-Match must be a revision number, got {value!r}") from None


def _field(body: Any, key: str, default=None):
    if not isinstance(body, dict):
        raise SchemaViolation("request body must be a JSON object")
    return body.get(key, default)


def _document_field(body: Any):
    node = _field(body, "document")
    if node is None:
        raise SchemaViolation("request body must carry a 'document' field", path="document")
    return parse_node(node)


def create_app(log_path: str | None = None, ui_dir: str | None = None) -> FastAPI:
    """Build the application around a session store at the given log path."""
    store = SessionStore(log_path if log_path is not None else DEFAULT_LOG)
    app = FastAPI(title="ivalue", docs_url=None, redoc_url=None, openapi_url=None)
    app.state.store = store

    @app.exception_handler(IvalueError)
    async def _handle_domain_error(request: Request, exc: IvalueError):  # noqa: ANN202
        return _error_response(exc)

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await _json_body(request)
        objects = _field(body, "objects")
        if objects is None:
            raise SchemaViolation("body must carry an 'objects' list", path="objects")
        session, rev = store.create(objects)
        return _doc_response(_session_doc(session, rev), status=201)

    @app.get("/sessions/{sid}")
    async def get_session(sid: str):
        session, rev = store.get(sid)
        return _doc_response(_session_doc(session, rev))

    @app.put("/sessions/{sid}/cards/{slot}")
    async def put_cards(sid: str, slot: str, request: Request):
        body = await _json_body(request)
        revision = _revision_header(request)
        try:
            slot_index = int(slot)
        except ValueError:
            raise errors.BadSlot(f"slot {slot!r} is not an index") from None
        session, rev = store.set_cards(sid, slot_index, body, revision)
        return _doc_response(_session_doc(session, rev))

    @app.get("/sessions/{sid}/diagnosis")
    async def get_diagnosis(sid: str):
        session, rev, diagnosis = store.diagnose(sid)
        payload = {
            "equal_lengths": diagnosis.equal_lengths,
            "alpha": diagnosis.proposal.alpha,
            "adjusted_steps": [[s.lower, s.upper] for s in diagnosis.proposal.adjusted_steps],
            "objective": diagnosis.proposal.objective,
            "phase": session.phase.value,
            "revision": rev,
        }
        return _doc_response({"kind": "diagnosis", "payload": payload, "version": FORMAT_VERSION})

    @app.post("/sessions/{sid}/respond")
    async def respond(sid: str, request: Request):
        body = await _json_body(request)
        revision = _revision_header(request)
        if isinstance(body, str):
            if body not in ("accept", "reject"):
                raise SchemaViolation("response must be 'accept' or 'reject'")
            accept = body == "accept"
        else:
            accept = _field(body, "accept")
            if not isinstance(accept, bool):
                raise SchemaViolation("body must carry boolean 'accept'", path="accept")
        session, rev = store.respond(sid, accept, revision)
        return _doc_response(_session_doc(session, rev))

    @app.post("/sessions/{sid}/finalize")
    async def finalize(sid: str, request: Request):
        revision = _revision_header(request)
        session, rev = store.finalize(sid, revision)
        return _doc_response(_session_doc(session, rev))

    # -- stateless computation (never touches the store) --------------------

    @app.post("/compute/check")
    async def compute_check(request: Request):
        body = await _json_body(request)
        doc = _document_field(body)
        if doc.kind != "interval_matrix":
            raise SchemaViolation(f"check expects an interval_matrix, got {doc.kind}")
        eps = _field(body, "neutral")
        u = NeutralElement(float(eps)) if eps is not None else None
        tol = float(_field(body, "tol", DEFAULT_TOL))
        report = consistency_report(doc.payload, u, tol)
        return _doc_response(json.loads(serialize(document_for(report))))

    @app.post("/compute/repair")
    async def compute_repair(request: Request):
        body = await _json_body(request)
        doc = _document_field(body)
        if doc.kind != "interval_matrix":
            raise SchemaViolation(f"repair expects an interval_matrix, got {doc.kind}")
        mu = float(_field(body, "mu", 0.0))
        alpha = _field(body, "alpha")
        if alpha is None:
            solution = repair_full(doc.payload, mu)
        else:
            solution = repair_fixed_neutral(doc.payload, float(alpha), mu)
        return _doc_response(json.loads(serialize(document_for(solution))))

    @app.post("/compute/scale")
    async def compute_scale(request: Request):
        body = await _json_body(request)
        doc = _document_field(body)
        do_normalize = bool(_field(body, "normalize", False))
        if doc.kind == "chain":
            scale = scale_from_chain(doc.payload, do_normalize)
        elif doc.kind == "interval_matrix":
            scale = scale_from_matrix(doc.payload, do_normalize)
        else:
            raise SchemaViolation(f"scale expects a chain or interval_matrix, got {doc.kind}")
        return _doc_response(json.loads(serialize(document_for(scale))))

    @app.post("/compute/convert")
    async def compute_convert(request: Request):
        body = await _json_body(request)
        doc = _document_field(body)
        to = _field(body, "to")
        if to not in ("fuzzy", "saaty", "ipr"):
            raise SchemaViolation("conversion target must be fuzzy, saaty, or ipr", path="to")
        converted = convert_relation(doc.payload, to)
        return _doc_response(json.loads(serialize(document_for(converted))))

    if ui_dir is not None and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def resolve_addr(addr: str | None = None) -> tuple[str, int]:
    """Split host:port, honoring the IVALUE_ADDR environment variable."""
    value = addr or os.environ.get("IVALUE_ADDR") or DEFAULT_ADDR
    host, sep, port = value.rpartition(":")
    if not sep or not host:
        raise Malformed(f"listen address must be host:port, got {value!r}")
    try:
        port_num = int(port)
    except ValueError:
        raise Malformed(f"listen address port must be an integer, got {port!r}") from None
    if not 0 <= port_num <= 65535:
        raise Malformed(f"listen address port out of range: {port_num}")
    return host, port_num


def resolve_log(log: str | None = None) -> str:
    return log or os.environ.get("IVALUE_LOG") or DEFAULT_LOG
