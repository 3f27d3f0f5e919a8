"""Deck-of-cards elicitation sessions.

The decision-maker ranks objects best to worst, then inserts an uncertain
number of blank cards between consecutive objects; zero cards means the
difference is minimal (one unit), so the unit chain adds one to every
count. If the resulting intervals share a length the table is already
consistent; otherwise the session proposes the nearest equal-length
adjustment, which the decision-maker accepts or rejects (rejecting
reopens the card entry). Finalizing propagates the accepted chain into a
full consistent table and produces the raw and normalized value scales.

Sessions are mutable state machines; mutations on one session must be
serialized by the caller (the HTTP service does this with per-session
revisions).
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .errors import (
    AlreadyFinalized,
    BadSlot,
    DuplicateNames,
    IncompleteCards,
    NegativeCards,
    NoPendingProposal,
    NonIntegerCards,
    NotAccepted,
    TooFewObjects,
)
from .intervals import Interval, NeutralElement
from .ipr import IntervalMatrix, matrix_from_values
from .repair import ChainRepairSolution, repair_chain
from .scales import (
    ConsecutiveChain,
    ValueScale,
    cumulative_from_chain,
    normalization_constant,
    normalize,
)

CardRange = tuple[int, int]


class Phase(str, Enum):
    RANKING = "Ranking"
    CARDS_ENTRY = "CardsEntry"
    DIAGNOSED = "Diagnosed"  # transitional; sessions land on the two below
    PROPOSAL_PENDING = "ProposalPending"
    ACCEPTED = "Accepted"
    FINALIZED = "Finalized"


class Diagnosis(NamedTuple):
    equal_lengths: bool
    proposal: ChainRepairSolution


@dataclass(frozen=True)
class HistoryEvent:
    ts: float
    event: str
    data: dict


@dataclass(frozen=True)
class SessionResult:
    unit_chain: ConsecutiveChain
    neutral: NeutralElement
    full_table: IntervalMatrix
    raw_scale: ValueScale
    normalized_scale: ValueScale
    normalization_constant: float


def _validate_cards(cards) -> CardRange:
    if isinstance(cards, Interval):
        pair = (cards.lower, cards.upper)
    else:
        pair = tuple(cards)
        if len(pair) != 2:
            raise NonIntegerCards("card counts must be a [min, max] pair")
    out = []
    for x in pair:
        if isinstance(x, bool) or not (
            isinstance(x, int) or (isinstance(x, float) and float(x).is_integer())
        ):
            raise NonIntegerCards(f"card counts must be integers, got {x!r}")
        out.append(int(x))
    lo, hi = out
    if lo < 0 or hi < 0:
        raise NegativeCards(f"card counts must be nonnegative, got [{lo}, {hi}]")
    if lo > hi:
        raise NegativeCards(f"card count lower bound {lo} exceeds upper bound {hi}")
    return (lo, hi)


class ElicitationSession:
    """State machine for one deck-of-cards interaction."""

    def __init__(
        self,
        objects: Sequence[str],
        session_id: str | None = None,
        timestamp: float | None = None,
    ):
        names = [str(o) for o in objects]
        if len(names) < 2:
            raise TooFewObjects(f"need at least two objects, got {len(names)}")
        if len(set(names)) != len(names):
            raise DuplicateNames("object names must be distinct")
        self._session_id = session_id if session_id is not None else uuid.uuid4().hex
        self._objects: tuple[str, ...] = tuple(names)
        self._blank_cards: list[CardRange | None] = [None] * (len(names) - 1)
        self._phase = Phase.CARDS_ENTRY
        self._proposal: ChainRepairSolution | None = None
        self._result: SessionResult | None = None
        self._history: list[HistoryEvent] = []
        self._record("created", timestamp, objects=list(names))

    # -- read-only views -----------------------------------------------

    @property
    def session_id(self) -> str:
        return self._session_id

    @property
    def objects(self) -> tuple[str, ...]:
        return self._objects

    @property
    def blank_cards(self) -> tuple[CardRange | None, ...]:
        return tuple(self._blank_cards)

    @property
    def phase(self) -> Phase:
        return self._phase

    @property
    def proposal(self) -> ChainRepairSolution | None:
        return self._proposal

    @property
    def result(self) -> SessionResult | None:
        return self._result

    @property
    def history(self) -> tuple[HistoryEvent, ...]:
        return tuple(self._history)

    def cards_complete(self) -> bool:
        return all(c is not None for c in self._blank_cards)

    # -- state machine ----------------------------------------------------

    def set_blank_cards(self, slot: int, cards, timestamp: float | None = None) -> None:
        """Record the [min, max] blank-card count for one gap.

        Allowed until the session is finalized; changing cards after a
        diagnosis reopens the entry phase and discards the stale proposal.
        """
        if self._phase is Phase.FINALIZED:
            raise AlreadyFinalized("cannot change cards on a finalized session")
        if not isinstance(slot, int) or isinstance(slot, bool) or not 0 <= slot < len(self._blank_cards):
            raise BadSlot(f"slot {slot!r} out of range for {len(self._blank_cards)} gaps")
        rng = _validate_cards(cards)
        self._blank_cards[slot] = rng
        self._phase = Phase.CARDS_ENTRY
        self._proposal = None
        self._record("cards_set", timestamp, slot=slot, cards=[rng[0], rng[1]])

    def unit_chain(self) -> ConsecutiveChain:
        """Consecutive comparisons in units: each card count plus one."""
        if not self.cards_complete():
            missing = [i for i, c in enumerate(self._blank_cards) if c is None]
            raise IncompleteCards(f"slots {missing} are still empty")
        return ConsecutiveChain(
            tuple(Interval(lo + 1, hi + 1) for lo, hi in self._blank_cards)  # type: ignore[misc]
        )

    def diagnose(self, timestamp: float | None = None) -> Diagnosis:
        """Check whether the unit chain has equal lengths; propose a fix if not.

        Idempotent: once diagnosed, repeated calls recompute the same
        proposal without touching the session state.
        """
        chain = self.unit_chain()
        lengths = [s.upper - s.lower for s in chain.steps]
        equal = max(lengths) - min(lengths) <= 1e-9
        proposal = repair_chain(chain)
        if self._phase is Phase.CARDS_ENTRY:
            self._proposal = proposal
            self._phase = Phase.ACCEPTED if equal else Phase.PROPOSAL_PENDING
            self._record("diagnosed", timestamp, equal_lengths=equal, alpha=proposal.alpha)
        return Diagnosis(equal_lengths=equal, proposal=proposal)

    def respond_to_proposal(self, accept: bool, timestamp: float | None = None) -> None:
        """Accept the proposed adjustment, or reject it to revise the cards."""
        if self._phase is not Phase.PROPOSAL_PENDING:
            raise NoPendingProposal(f"no proposal pending in phase {self._phase.value}")
        if accept:
            self._phase = Phase.ACCEPTED
            self._record("proposal_accepted", timestamp)
        else:
            self._phase = Phase.CARDS_ENTRY
            self._proposal = None
            self._record("proposal_rejected", timestamp)

    def finalize(self, timestamp: float | None = None) -> SessionResult:
        """Propagate the accepted chain into the full table and value scales.

        The normalization constant is computed from the original unit
        chain (the counts the decision-maker actually gave), not from the
        adjusted one.
        """
        if self._phase is not Phase.ACCEPTED or self._proposal is None:
            raise NotAccepted(f"cannot finalize in phase {self._phase.value}")
        unit = self.unit_chain()
        accepted = ConsecutiveChain(self._proposal.adjusted_steps)
        neutral = NeutralElement(self._proposal.alpha)
        raw = cumulative_from_chain(accepted, neutral)
        table = matrix_from_values(raw.values, neutral)
        c = normalization_constant(unit)
        result = SessionResult(
            unit_chain=unit,
            neutral=neutral,
            full_table=table,
            raw_scale=raw,
            normalized_scale=normalize(raw, c),
            normalization_constant=c,
        )
        self._result = result
        self._phase = Phase.FINALIZED
        self._record("finalized", timestamp)
        return result

    # -- internals --------------------------------------------------------

    def _record(self, event: str, timestamp: float | None, **data) -> None:
        ts = time.time() if timestamp is None else float(timestamp)
        self._history.append(HistoryEvent(ts=ts, event=event, data=data))

    @classmethod
    def restore(
        cls,
        session_id: str,
        objects: Sequence[str],
        blank_cards: Sequence[CardRange | None],
        phase: Phase,
        proposal: ChainRepairSolution | None,
        result: SessionResult | None,
        history: Sequence[HistoryEvent],
    ) -> "ElicitationSession":
        """Rebuild a session from serialized state (document parser only)."""
        s = cls.__new__(cls)
        s._session_id = session_id
        s._objects = tuple(str(o) for o in objects)
        s._blank_cards = list(blank_cards)
        s._phase = phase
        s._proposal = proposal
        s._result = result
        s._history = list(history)
        return s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElicitationSession):
            return NotImplemented
        return (
            self._session_id == other._session_id
            and self._objects == other._objects
            and self._blank_cards == other._blank_cards
            and self._phase == other._phase
            and self._proposal == other._proposal
            and self._result == other._result
            and self._history == other._history
        )

    def __repr__(self) -> str:
        return (
            f"ElicitationSession(id={self._session_id!r}, objects={self._objects}, "
            f"phase={self._phase.value})"
        )


def start_session(
    objects: Sequence[str],
    session_id: str | None = None,
    timestamp: float | None = None,
) -> ElicitationSession:
    """Open a session for objects already ranked best to worst."""
    return ElicitationSession(objects, session_id=session_id, timestamp=timestamp)
