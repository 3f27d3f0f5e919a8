import pytest

from ivalue.errors import (
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
from ivalue.intervals import Interval, NeutralElement
from ivalue.ipr import check_consistency
from ivalue.scales import check_monotone
from ivalue.session import Phase, start_session

from conftest import CARDS_EQUAL, CARDS_MIXED


def session_with_cards(cards, names=("l1", "l2", "l3", "l4")):
    s = start_session(names, timestamp=0.0)
    for slot, rng in enumerate(cards):
        s.set_blank_cards(slot, rng, timestamp=float(slot + 1))
    return s


class TestStart:
    def test_four_objects_three_slots(self):
        s = start_session(["l1", "l2", "l3", "l4"])
        assert s.phase is Phase.CARDS_ENTRY
        assert s.blank_cards == (None, None, None)

    def test_two_objects_one_slot(self):
        assert start_session(["A", "B"]).blank_cards == (None,)

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateNames):
            start_session(["A", "A"])

    def test_too_few_rejected(self):
        with pytest.raises(TooFewObjects):
            start_session(["A"])


class TestSetBlankCards:
    def test_equal_configuration(self):
        s = session_with_cards(CARDS_EQUAL)
        assert s.blank_cards == ((3, 5), (0, 2), (1, 3))

    def test_mixed_configuration(self):
        s = session_with_cards(CARDS_MIXED)
        assert s.blank_cards == ((3, 5), (0, 2), (1, 4))

    def test_zero_cards_allowed(self):
        s = start_session(["A", "B"])
        s.set_blank_cards(0, (0, 0))
        assert s.blank_cards == ((0, 0),)

    def test_accepts_interval_input(self):
        s = start_session(["A", "B"])
        s.set_blank_cards(0, Interval(2, 4))
        assert s.blank_cards == ((2, 4),)

    def test_negative_rejected(self):
        s = start_session(["A", "B"])
        with pytest.raises(NegativeCards):
            s.set_blank_cards(0, (-1, 2))

    def test_non_integer_rejected(self):
        s = start_session(["A", "B"])
        with pytest.raises(NonIntegerCards):
            s.set_blank_cards(0, (0.5, 2))

    def test_bad_slot(self):
        s = start_session(["A", "B"])
        with pytest.raises(BadSlot):
            s.set_blank_cards(3, (0, 1))


class TestUnitChain:
    def test_equal_configuration(self):
        chain = session_with_cards(CARDS_EQUAL).unit_chain()
        assert chain.steps == (Interval(4, 6), Interval(1, 3), Interval(2, 4))

    def test_mixed_configuration(self):
        chain = session_with_cards(CARDS_MIXED).unit_chain()
        assert chain.steps == (Interval(4, 6), Interval(1, 3), Interval(2, 5))

    def test_zero_cards_is_one_unit(self):
        s = start_session(["A", "B"])
        s.set_blank_cards(0, (0, 0))
        assert s.unit_chain().steps == (Interval(1, 1),)

    def test_incomplete(self):
        s = start_session(["A", "B", "C"])
        s.set_blank_cards(0, (1, 2))
        with pytest.raises(IncompleteCards):
            s.unit_chain()


class TestDiagnose:
    def test_equal_lengths_accepts_directly(self):
        s = session_with_cards(CARDS_EQUAL)
        d = s.diagnose(timestamp=10.0)
        assert d.equal_lengths
        assert d.proposal.alpha == 1.0
        assert d.proposal.adjusted_steps == s.unit_chain().steps
        assert s.phase is Phase.ACCEPTED

    def test_mixed_lengths_goes_pending(self):
        s = session_with_cards(CARDS_MIXED)
        d = s.diagnose(timestamp=10.0)
        assert not d.equal_lengths
        assert d.proposal.alpha == pytest.approx(7 / 6, abs=1e-15)
        assert s.phase is Phase.PROPOSAL_PENDING

    def test_crisp_chain_alpha_zero(self):
        s = start_session(["A", "B"])
        s.set_blank_cards(0, (2, 2))
        d = s.diagnose()
        assert d.equal_lengths and d.proposal.alpha == 0.0

    def test_idempotent(self):
        s = session_with_cards(CARDS_MIXED)
        first = s.diagnose(timestamp=10.0)
        events = len(s.history)
        second = s.diagnose(timestamp=11.0)
        assert first == second
        assert len(s.history) == events

    def test_incomplete(self):
        s = start_session(["A", "B", "C"])
        with pytest.raises(IncompleteCards):
            s.diagnose()


class TestRespond:
    def test_accept(self):
        s = session_with_cards(CARDS_MIXED)
        d = s.diagnose()
        s.respond_to_proposal(True)
        assert s.phase is Phase.ACCEPTED
        expected = [(3.833, 6.166), (0.833, 3.166), (2.333, 4.666)]
        for got, (lo, hi) in zip(s.proposal.adjusted_steps, expected):
            assert got.lower == pytest.approx(lo, abs=1e-3)
            assert got.upper == pytest.approx(hi, abs=1e-3)
        assert s.proposal == d.proposal

    def test_reject_returns_to_cards_entry(self):
        s = session_with_cards(CARDS_MIXED)
        s.diagnose()
        before = s.blank_cards
        s.respond_to_proposal(False)
        assert s.phase is Phase.CARDS_ENTRY
        assert s.blank_cards == before
        assert s.proposal is None

    def test_no_pending_in_finalized(self):
        s = session_with_cards(CARDS_EQUAL)
        s.diagnose()
        s.finalize()
        with pytest.raises(NoPendingProposal):
            s.respond_to_proposal(True)

    def test_no_pending_before_diagnosis(self):
        s = session_with_cards(CARDS_EQUAL)
        with pytest.raises(NoPendingProposal):
            s.respond_to_proposal(True)


class TestFinalize:
    def test_equal_flow(self, reference_matrix):
        s = session_with_cards(CARDS_EQUAL)
        s.diagnose()
        result = s.finalize()
        assert s.phase is Phase.FINALIZED
        assert result.full_table == reference_matrix
        assert result.normalization_constant == 10.0
        expected = [(0.9, 1.1), (0.4, 0.6), (0.2, 0.4), (-0.1, 0.1)]
        for got, (lo, hi) in zip(result.normalized_scale.values, expected):
            assert got.lower == pytest.approx(lo, abs=1e-9)
            assert got.upper == pytest.approx(hi, abs=1e-9)

    def test_mixed_flow(self):
        s = session_with_cards(CARDS_MIXED)
        s.diagnose()
        s.respond_to_proposal(True)
        result = s.finalize()
        assert result.normalization_constant == 10.5
        assert result.neutral.epsilon == pytest.approx(7 / 6, abs=1e-15)
        report = check_consistency(result.full_table, result.neutral, 1e-9)
        assert report.is_consistent
        # first row of the propagated table
        row = result.full_table.row(0)
        expected = [(-7 / 6, 7 / 6), (5 - 7 / 6, 5 + 7 / 6), (7 - 7 / 6, 7 + 7 / 6),
                    (10.5 - 7 / 6, 10.5 + 7 / 6)]
        for got, (lo, hi) in zip(row, expected):
            assert got.lower == pytest.approx(lo, abs=1e-12)
            assert got.upper == pytest.approx(hi, abs=1e-12)
        assert check_monotone(result.normalized_scale)

    def test_two_object_minimal_session(self):
        s = start_session(["A", "B"])
        s.set_blank_cards(0, (0, 0))
        s.diagnose()
        result = s.finalize()
        assert result.neutral.epsilon == 0.0
        assert result.normalization_constant == 1.0
        assert result.normalized_scale.values == (Interval(1, 1), Interval(0, 0))

    def test_not_accepted(self):
        s = session_with_cards(CARDS_MIXED)
        s.diagnose()
        with pytest.raises(NotAccepted):
            s.finalize()


class TestStateMachineRules:
    def test_history_is_append_only(self):
        s = session_with_cards(CARDS_MIXED)
        seen = list(s.history)
        s.diagnose()
        assert list(s.history)[: len(seen)] == seen
        seen = list(s.history)
        s.respond_to_proposal(False)
        assert list(s.history)[: len(seen)] == seen
        kinds = [e.event for e in s.history]
        assert kinds[0] == "created"
        assert kinds[-1] == "proposal_rejected"

    def test_revising_cards_resets_phase_and_proposal(self):
        s = session_with_cards(CARDS_MIXED)
        s.diagnose()
        s.set_blank_cards(2, (1, 3))
        assert s.phase is Phase.CARDS_ENTRY
        assert s.proposal is None
        d = s.diagnose()
        assert d.equal_lengths

    def test_no_mutation_after_finalize(self):
        s = session_with_cards(CARDS_EQUAL)
        s.diagnose()
        s.finalize()
        with pytest.raises(AlreadyFinalized):
            s.set_blank_cards(0, (1, 1))

    def test_equal_length_chain_is_used_verbatim(self):
        s = session_with_cards(CARDS_EQUAL)
        s.diagnose()
        result = s.finalize()
        assert result.raw_scale.values[0] == Interval(9, 11)
        assert result.unit_chain.steps == s.proposal.adjusted_steps

    def test_timestamps_recorded(self):
        s = session_with_cards(CARDS_EQUAL)
        assert [e.ts for e in s.history] == [0.0, 1.0, 2.0, 3.0]
