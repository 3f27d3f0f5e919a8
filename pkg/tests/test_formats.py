import json
import os

import numpy as np
import pytest

from ivalue.errors import InvariantViolation, Malformed, SchemaViolation
from ivalue.formats import Document, canonical_json, document_for, dumps, parse, serialize
from ivalue.intervals import Interval
from ivalue.ipr import IntervalMatrix
from ivalue.scales import ConsecutiveChain
from ivalue.session import Phase

from conftest import make_random_document

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "data")


class TestSerialize:
    def test_chain_document_bytes(self):
        chain = ConsecutiveChain((Interval(4, 6), Interval(1, 3), Interval(2, 4)))
        assert dumps(chain) == '{"kind":"chain","payload":{"steps":[[4,6],[1,3],[2,4]]},"version":1}'

    def test_intervals_encode_as_pairs(self):
        Z = IntervalMatrix.from_rows([[(-1, 1)]])
        assert dumps(Z) == '{"kind":"interval_matrix","payload":{"entries":[[[-1,1]]]},"version":1}'

    def test_integral_doubles_print_without_fraction(self):
        assert canonical_json([4.0, 6.5, -0.0]) == "[4,6.5,0]"

    def test_deterministic(self):
        rng = np.random.default_rng(71)
        for _ in range(20):
            doc = make_random_document(rng)
            assert serialize(doc) == serialize(doc)

    def test_sorted_keys(self):
        rng = np.random.default_rng(73)
        for _ in range(10):
            data = json.loads(serialize(make_random_document(rng)))
            assert list(data.keys()) == sorted(data.keys())


class TestParseErrors:
    def test_inverted_interval(self):
        text = '{"kind":"chain","payload":{"steps":[[6,4]]},"version":1}'
        with pytest.raises(InvariantViolation) as err:
            parse(text)
        assert "payload.steps[0]" in err.value.path

    def test_missing_version(self):
        with pytest.raises(SchemaViolation) as err:
            parse('{"kind":"chain","payload":{"steps":[[4,6]]}}')
        assert err.value.path == "version"

    def test_unknown_version(self):
        with pytest.raises(SchemaViolation):
            parse('{"kind":"chain","payload":{"steps":[[4,6]]},"version":2}')

    def test_unknown_kind(self):
        with pytest.raises(SchemaViolation):
            parse('{"kind":"mystery","payload":{},"version":1}')

    def test_not_json(self):
        with pytest.raises(Malformed):
            parse("{not json")

    def test_non_square_matrix(self):
        text = '{"kind":"interval_matrix","payload":{"entries":[[[0,1]],[[0,1]]]},"version":1}'
        with pytest.raises(InvariantViolation):
            parse(text)

    def test_negative_cards(self):
        text = (
            '{"kind":"session","payload":{"blank_cards":[[-1,2]],"history":[],'
            '"objects":["A","B"],"phase":"CardsEntry","session_id":"x"},"version":1}'
        )
        with pytest.raises(InvariantViolation) as err:
            parse(text)
        assert "blank_cards" in err.value.path

    def test_non_integer_cards(self):
        text = (
            '{"kind":"session","payload":{"blank_cards":[[0.5,2]],"history":[],'
            '"objects":["A","B"],"phase":"CardsEntry","session_id":"x"},"version":1}'
        )
        with pytest.raises(SchemaViolation):
            parse(text)

    def test_unsorted_scale_rejected(self):
        text = (
            '{"kind":"value_scale","payload":{"neutral":0,'
            '"values":[[0,0],[1,1]]},"version":1}'
        )
        with pytest.raises(InvariantViolation):
            parse(text)

    def test_unknown_extra_fields_ignored(self):
        text = '{"kind":"chain","payload":{"steps":[[4,6]],"note":"hi"},"version":1,"x":2}'
        doc = parse(text)
        assert doc.payload.steps == (Interval(4, 6),)
        assert serialize(doc) == '{"kind":"chain","payload":{"steps":[[4,6]]},"version":1}'


class TestRoundTrip:
    def test_random_documents(self):
        rng = np.random.default_rng(77)
        for _ in range(120):
            doc = make_random_document(rng)
            text = serialize(doc)
            again = parse(text)
            assert again == doc
            assert serialize(again) == text

    def test_document_equality_covers_payload(self):
        chain = ConsecutiveChain((Interval(4, 6),))
        assert document_for(chain) == Document("chain", chain)


class TestGoldenFixture:
    def test_mixed_session_fixture_finalizes_to_known_result(self):
        with open(os.path.join(FIXTURE_DIR, "mixed_session.ivpr.json"), encoding="utf-8") as fh:
            text = fh.read().strip()
        doc = parse(text)
        session = doc.payload
        assert session.phase is Phase.ACCEPTED
        assert serialize(doc) == text
        result = session.finalize(timestamp=1700000006.0)
        assert result.normalization_constant == 10.5
        assert result.neutral.epsilon == pytest.approx(7 / 6, abs=1e-12)
        v = result.normalized_scale.values
        assert v[0].lower == pytest.approx(0.8889, abs=1e-3)
        assert v[1].lower == pytest.approx(0.41270, abs=1e-5)
        assert v[3].upper == pytest.approx(0.1111, abs=1e-3)
