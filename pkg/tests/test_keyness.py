import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import log_likelihood_contingency
from vietext.errors import InvalidInput, MixedLanguage
from vietext.keyness import (
    FrequencyTable,
    ReferenceCorpus,
    WordcloudMode,
    build_frequency_table,
    keyness_table,
    log_likelihood,
    payload_csv_bytes,
    payload_json_bytes,
    wordcloud_payload,
)
from vietext.langid import Language
from vietext.segment import SegmenterDictionary, segment_vietnamese, tokenize_english


def en_table(counts: dict[str, int], total: int | None = None) -> FrequencyTable:
    return FrequencyTable(counts=counts, total=total or sum(counts.values()),
                          language=Language.ENGLISH)


def reference(counts: dict[str, int], total: int, name="ref") -> ReferenceCorpus:
    return ReferenceCorpus(counts=counts, total=total, name=name)


class TestBuildFrequencyTable:
    def test_counts_word_tokens(self):
        seg = tokenize_english("a b a")
        table = build_frequency_table([seg])
        assert table.counts == {"a": 2, "b": 1}
        assert table.total == 3

    def test_stopwords_excluded_from_total(self):
        table = build_frequency_table([tokenize_english("a b a")], stopwords={"a"})
        assert table.counts == {"b": 1}
        assert table.total == 1

    def test_multi_syllable_token_is_one_term(self):
        d = SegmenterDictionary.from_words(["học sinh"])
        seg = segment_vietnamese("Học sinh là học sinh", d)
        table = build_frequency_table([seg])
        assert table.counts["học sinh"] == 2

    def test_case_folding(self):
        table = build_frequency_table([tokenize_english("The THE the")])
        assert table.counts == {"the": 3}

    def test_punctuation_never_counted(self):
        table = build_frequency_table([tokenize_english("wait, what!?")])
        assert set(table.counts) == {"wait", "what"}

    def test_mixed_language_rejected(self):
        with pytest.raises(MixedLanguage):
            build_frequency_table([
                tokenize_english("hello"),
                segment_vietnamese("xin chào", SegmenterDictionary.empty()),
            ])


class TestLogLikelihood:
    def test_equal_relative_frequency_is_zero(self):
        e1, e2, ll = log_likelihood(10, 10, 1000, 1000)
        assert (e1, e2) == (10.0, 10.0)
        assert ll == 0.0

    def test_one_sided_term(self):
        # frozen closed form: 2 * 10 * ln 2
        e1, e2, ll = log_likelihood(10, 0, 1000, 1000)
        assert (e1, e2) == (5.0, 5.0)
        assert ll == pytest.approx(13.862943611198906, abs=1e-12)

    def test_symmetry_500_random_tuples(self):
        rng = random.Random(11)
        for _ in range(500):
            n1 = rng.randint(1, 5000)
            n2 = rng.randint(1, 5000)
            a = rng.randint(0, n1)
            b = rng.randint(0, n2)
            if a + b == 0:
                continue
            assert log_likelihood(a, b, n1, n2)[2] == pytest.approx(
                log_likelihood(b, a, n2, n1)[2], abs=1e-9)

    def test_oracle_equivalence_spot(self):
        for a, b, n1, n2 in [(3, 7, 50, 70), (0, 5, 10, 100), (50, 1, 1000, 333)]:
            mine = log_likelihood(a, b, n1, n2)
            theirs = log_likelihood_contingency(a, b, n1, n2)
            assert mine == pytest.approx(theirs, abs=1e-9)

    def test_preconditions(self):
        with pytest.raises(InvalidInput):
            log_likelihood(0, 0, 10, 10)
        with pytest.raises(InvalidInput):
            log_likelihood(11, 0, 10, 10)
        with pytest.raises(InvalidInput):
            log_likelihood(1, 1, 0, 10)

    @given(st.integers(1, 500), st.integers(1, 50), st.integers(1, 20))
    @settings(max_examples=200)
    def test_proportional_tables_are_zero(self, b, n2_factor, k):
        n2 = b * n2_factor
        a, n1 = k * b, k * n2
        assert log_likelihood(a, b, n1, n2)[2] == 0.0

    def test_nonnegative(self):
        rng = random.Random(13)
        for _ in range(300):
            n1, n2 = rng.randint(1, 400), rng.randint(1, 400)
            a, b = rng.randint(0, n1), rng.randint(0, n2)
            if a + b == 0:
                continue
            assert log_likelihood(a, b, n1, n2)[2] >= 0.0


class TestKeynessTable:
    def test_scaled_study_has_zero_ll(self):
        ref = reference({"x": 3, "y": 7}, 100)
        study = en_table({"x": 6, "y": 14}, total=200)
        rows = keyness_table(study, ref)
        assert all(r.ll == 0.0 for r in rows)
        assert all(r.signed_keyness == 0.0 for r in rows)

    def test_pct_diff_hand_value(self):
        study = en_table({"x": 10}, total=100)
        ref = reference({"x": 1}, 1000)
        (row,) = keyness_table(study, ref)
        assert row.pct_diff == pytest.approx(9900.0)

    def test_absent_from_reference_is_finite(self):
        study = en_table({"novel": 5}, total=50)
        ref = reference({"other": 10}, 1000)
        (row,) = keyness_table(study, ref)
        assert row.b == 0
        assert math.isfinite(row.pct_diff)
        assert row.pct_diff > 0

    def test_min_count_filter(self):
        study = en_table({"x": 5, "once": 1}, total=6)
        ref = reference({}, 100)
        assert [r.term for r in keyness_table(study, ref, min_count=2)] == ["x"]

    def test_deterministic_total_order(self):
        study = en_table({"a": 4, "b": 4, "c": 2}, total=10)
        ref = reference({"a": 1, "b": 1, "c": 1}, 1000)
        first = [(r.term, r.signed_keyness) for r in keyness_table(study, ref)]
        second = [(r.term, r.signed_keyness) for r in keyness_table(study, ref)]
        assert first == second
        assert first[0][0] == "a"  # tie with b broken alphabetically

    def test_underused_terms_negative(self):
        study = en_table({"rare": 2}, total=10000)
        ref = reference({"rare": 900}, 1000)
        (row,) = keyness_table(study, ref)
        assert row.signed_keyness < 0

    def test_empty_totals_rejected(self):
        with pytest.raises(InvalidInput):
            keyness_table(en_table({}, total=0), reference({"x": 1}, 10))


class TestWordcloudPayload:
    def test_frequency_max_normalised(self):
        payload = wordcloud_payload(WordcloudMode.FREQUENCY, en_table({"a": 4, "b": 2}))
        assert [(e.term, e.weight) for e in payload] == [("a", 1.0), ("b", 0.5)]

    def test_proportional_study_gives_empty_ll_payload(self):
        ref = reference({"x": 3, "y": 7}, 100)
        study = en_table({"x": 6, "y": 14}, total=200)
        payload = wordcloud_payload(WordcloudMode.LOG_LIKELIHOOD, study, ref,
                                    min_count=1)
        assert payload == []

    def test_top_k_one(self):
        payload = wordcloud_payload(WordcloudMode.FREQUENCY,
                                    en_table({"a": 4, "b": 2}), top_k=1)
        assert len(payload) == 1

    def test_weights_monotone_in_statistic(self):
        study = en_table({"a": 30, "b": 10, "c": 2}, total=60)
        ref = reference({"a": 1, "b": 1, "c": 1}, 6000)
        payload = wordcloud_payload(WordcloudMode.KEYNESS, study, ref, min_count=1)
        stats = [e.statistic for e in payload]
        weights = [e.weight for e in payload]
        assert stats == sorted(stats, reverse=True)
        assert weights == sorted(weights, reverse=True)
        assert weights[0] == 1.0

    def test_keyness_mode_carries_pct_diff(self):
        study = en_table({"a": 30}, total=60)
        ref = reference({"a": 1}, 6000)
        (entry,) = wordcloud_payload(WordcloudMode.KEYNESS, study, ref, min_count=1)
        assert entry.pct_diff is not None

    def test_ll_mode_requires_reference(self):
        with pytest.raises(InvalidInput):
            wordcloud_payload(WordcloudMode.LOG_LIKELIHOOD, en_table({"a": 1}))

    def test_exports(self):
        payload = wordcloud_payload(WordcloudMode.FREQUENCY, en_table({"a": 4, "b": 2}))
        csv_out = payload_csv_bytes(payload).decode("utf-8")
        assert csv_out.splitlines()[0] == "term,weight,statistic,count_study,count_reference"
        assert len(csv_out.splitlines()) == 3
        json_out = payload_json_bytes(payload)
        assert json_out.startswith(b'[{"term":"a"')


class TestReferenceCorpusFile:
    def test_parse_round_trip(self):
        text = "refcorpus-v1 demo 1000\nxin\t30\nchào\t20\n"
        ref = ReferenceCorpus.parse(text)
        assert ref.name == "demo"
        assert ref.total == 1000
        assert ref.counts == {"xin": 30, "chào": 20}

    def test_total_can_exceed_sum(self):
        ref = ReferenceCorpus.parse("refcorpus-v1 truncated 10\na\t1\n")
        assert ref.total == 10

    def test_total_below_sum_rejected(self):
        with pytest.raises(InvalidInput):
            ReferenceCorpus.parse("refcorpus-v1 bad 1\na\t5\n")

    def test_bundled_fixtures_load(self):
        for language in (Language.VIETNAMESE, Language.ENGLISH):
            ref = ReferenceCorpus.load(language=language)
            assert len(ref.counts) == 5000
            assert ref.total >= sum(ref.counts.values())
