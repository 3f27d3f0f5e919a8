"""Deck-of-cards elicitation with uneven card spreads.

Blank cards [3,5], [0,2], [1,4]: the last gap is more uncertain than the
others, so the unit chain cannot be consistent as given. The session
proposes the nearest equal-length adjustment (half-width 7/6), which the
decision-maker first rejects (to show the revision path) and then, after
re-entering the same counts, accepts.
"""

from __future__ import annotations

from ivalue.session import Phase, start_session


def print_steps(label, steps):
    print(label, " ".join(f"[{s.lower:.3f}, {s.upper:.3f}]" for s in steps))


def main() -> None:
    session = start_session(["l1", "l2", "l3", "l4"])
    cards = [(3, 5), (0, 2), (1, 4)]
    for slot, rng in enumerate(cards):
        session.set_blank_cards(slot, rng)

    diagnosis = session.diagnose()
    print("equal lengths:", diagnosis.equal_lengths)
    print(f"proposed common half-width: {diagnosis.proposal.alpha:.4f}")
    print_steps("entered steps: ", session.unit_chain().steps)
    print_steps("proposed steps:", diagnosis.proposal.adjusted_steps)

    session.respond_to_proposal(False)
    print("after rejection the session is back to", session.phase.value)

    for slot, rng in enumerate(cards):
        session.set_blank_cards(slot, rng)
    diagnosis = session.diagnose()
    session.respond_to_proposal(True)
    assert session.phase is Phase.ACCEPTED

    result = session.finalize()
    print("normalization constant:", result.normalization_constant)
    print("full consistent table:")
    for row in result.full_table.rows():
        print("  " + "  ".join(f"[{v.lower:7.3f}, {v.upper:7.3f}]" for v in row))
    print("normalized scale:")
    for v in result.normalized_scale.values:
        print(f"  [{v.lower:.3f}, {v.upper:.3f}]")
    print("history:")
    for event in session.history:
        print(f"  {event.event} {event.data}")


if __name__ == "__main__":
    main()
