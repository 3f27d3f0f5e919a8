"""Deck-of-cards elicitation where every card count has the same spread.

Four objects ranked best to worst, blank cards [3,5], [0,2], [1,3]
between consecutive pairs. The unit chain already has equal lengths, so
the diagnosis accepts it unchanged and finalizing yields the normalized
interval value scale directly.
"""

from __future__ import annotations

from ivalue import check_monotone
from ivalue.session import start_session


def show_scale(label, scale):
    print(label)
    for name, v in scale:
        print(f"  {name}: [{v.lower:.3f}, {v.upper:.3f}]")


def main() -> None:
    objects = ["l1", "l2", "l3", "l4"]
    session = start_session(objects)
    print("objects (best to worst):", ", ".join(objects))

    for slot, cards in enumerate([(3, 5), (0, 2), (1, 3)]):
        session.set_blank_cards(slot, cards)
        print(f"gap {slot}: between {cards[0]} and {cards[1]} blank cards")

    chain = session.unit_chain()
    print("unit chain (cards + 1):", [(s.lower, s.upper) for s in chain.steps])

    diagnosis = session.diagnose()
    print("equal lengths:", diagnosis.equal_lengths, "| half-width:", diagnosis.proposal.alpha)

    result = session.finalize()
    print("normalization constant:", result.normalization_constant)
    show_scale("raw scale:", zip(objects, result.raw_scale.values))
    show_scale("normalized scale:", zip(objects, result.normalized_scale.values))
    print("monotone:", check_monotone(result.normalized_scale))


if __name__ == "__main__":
    main()
