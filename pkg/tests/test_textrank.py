import math
import random

import numpy as np
import pytest

from oracles import textrank_fixed_point
from vietext.errors import EmptyInput
from vietext.langid import Language
from vietext.segment import SegmenterDictionary
from vietext.textrank import (
    DAMPING,
    MAX_ITERATIONS,
    Sentence,
    SentenceGraph,
    build_sentence_graph,
    prepare_sentences,
    sentence_similarity,
    summarise_extractive,
    summary_json_bytes,
    textrank_iterate,
    textrank_scores,
)


def make_sentence(words: list[str], text: str = "") -> Sentence:
    return Sentence(text=text or " ".join(words),
                    content_words=frozenset(words), raw_length=len(words))


def graph_from_weights(weights) -> SentenceGraph:
    n = len(weights)
    sentences = tuple(make_sentence([f"w{i}"]) for i in range(n))
    return SentenceGraph(sentences=sentences,
                         weights=np.asarray(weights, dtype=np.float64))


class TestSimilarity:
    def test_identical_ten_token_sets(self):
        words = [f"w{i}" for i in range(10)]
        s = make_sentence(words)
        # frozen hand value: 10 / (2 ln 10)
        assert sentence_similarity(s, s) == pytest.approx(2.1714724095162588)

    def test_disjoint_sets(self):
        assert sentence_similarity(make_sentence(["a", "b"]),
                                   make_sentence(["c", "d"])) == 0.0

    def test_short_sentence_guard(self):
        assert sentence_similarity(make_sentence(["a"]),
                                   make_sentence(["a", "b"])) == 0.0


class TestScores:
    def test_single_sentence_fixed_point(self):
        (score,), _ = textrank_iterate(graph_from_weights([[0.0]]))
        assert score == pytest.approx(1.0 - DAMPING)

    def test_two_symmetric_sentences_equal(self):
        scores = textrank_scores(graph_from_weights([[0, 1], [1, 0]]))
        assert scores[0] == pytest.approx(scores[1])

    def test_three_node_toy_matches_oracle(self):
        weights = [[0, 1, 0], [1, 0, 2], [0, 2, 0]]
        scores = textrank_scores(graph_from_weights(weights))
        expected = textrank_fixed_point(weights)
        for mine, ref in zip(scores, expected):
            assert mine == pytest.approx(ref, abs=1e-3)

    def test_random_graphs_match_oracle(self):
        rng = random.Random(3)
        for _ in range(10):
            w = [[0.0] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(i + 1, 3):
                    v = round(rng.uniform(0, 2), 3)
                    w[i][j] = w[j][i] = v
            scores = textrank_scores(graph_from_weights(w))
            for mine, ref in zip(scores, textrank_fixed_point(w)):
                assert mine == pytest.approx(ref, abs=1e-3)

    def test_convergence_under_iteration_cap(self):
        rng = random.Random(5)
        for n in (2, 5, 12):
            w = [[0.0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    v = rng.uniform(0, 1)
                    w[i][j] = w[j][i] = v
            _, iterations = textrank_iterate(graph_from_weights(w))
            assert iterations < MAX_ITERATIONS

    def test_scores_at_least_one_minus_damping(self):
        scores = textrank_scores(graph_from_weights(
            [[0, 1, 0], [1, 0, 0], [0, 0, 0]]))
        assert all(s >= (1.0 - DAMPING) - 1e-12 for s in scores)

    def test_permutation_consistency(self):
        w = np.array([[0, 1, 0.5], [1, 0, 2], [0.5, 2, 0]])
        perm = [2, 0, 1]
        permuted = w[np.ix_(perm, perm)]
        base = textrank_scores(graph_from_weights(w.tolist()))
        shuffled = textrank_scores(graph_from_weights(permuted.tolist()))
        for new_pos, old_pos in enumerate(perm):
            assert shuffled[new_pos] == pytest.approx(base[old_pos], abs=1e-9)


DICT = SegmenterDictionary.empty()


class TestSummarise:
    def test_single_sentence(self):
        summary = summarise_extractive("Only one sentence here.",
                                       Language.ENGLISH, 3, DICT)
        assert [s.text for s in summary.selected] == ["Only one sentence here."]

    def test_full_fraction_returns_everything_in_order(self):
        text = "First thing. Second thing. Third thing."
        summary = summarise_extractive(text, Language.ENGLISH, 1.0, DICT)
        assert [s.index for s in summary.selected] == [0, 1, 2]

    def test_identical_pair_beats_outlier_earlier_wins(self):
        text = ("Students study lessons together daily. "
                "Students study lessons together daily. "
                "Bananas ripen quickly.")
        summary = summarise_extractive(text, Language.ENGLISH, 1, DICT,
                                       stopwords=set())
        (chosen,) = summary.selected
        assert chosen.index == 0
        assert chosen.text.startswith("Students")

    def test_fraction_rounds_up(self):
        text = "A alpha one. B beta two. C gamma three."
        summary = summarise_extractive(text, Language.ENGLISH, 0.34, DICT)
        assert len(summary.selected) == 2  # ceil(0.34 * 3)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            summarise_extractive("   ", Language.ENGLISH, 1, DICT)

    def test_json_export_shape(self):
        summary = summarise_extractive("One two three. Four five six.",
                                       Language.ENGLISH, 1, DICT)
        body = summary_json_bytes(summary)
        assert body.startswith(b'{"summary":[{"index":')
        assert b'"method":"textrank"' in body

    def test_vietnamese_segmentation_aware(self, bundled_dictionary):
        text = ("Học sinh chăm chỉ học tập tại trường. "
                "Học sinh chăm chỉ học tập tại trường. "
                "Thời tiết hôm nay đẹp.")
        sentences = prepare_sentences(text, Language.VIETNAMESE, bundled_dictionary)
        assert "học sinh" in sentences[0].content_words
        summary = summarise_extractive(text, Language.VIETNAMESE, 1,
                                       bundled_dictionary)
        assert summary.selected[0].index == 0

    def test_permutation_of_documents_permutes_scores(self):
        base = ["Cats chase mice quickly.", "Dogs chase cats quickly.",
                "Mice eat cheese happily."]
        t1 = " ".join(base)
        t2 = " ".join([base[2], base[0], base[1]])
        s1 = summarise_extractive(t1, Language.ENGLISH, 1.0, DICT)
        s2 = summarise_extractive(t2, Language.ENGLISH, 1.0, DICT)
        scores1 = {s.text: s.score for s in s1.selected}
        scores2 = {s.text: s.score for s in s2.selected}
        for text in scores1:
            assert scores1[text] == pytest.approx(scores2[text], abs=1e-9)
