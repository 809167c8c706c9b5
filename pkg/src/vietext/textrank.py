"""Extractive summarisation by damped centrality over a sentence graph.

Sentences are nodes; edge weights are content-word overlap normalised by
the log sentence lengths.  Scores come from the weighted PageRank update
    WS(i) = (1-d) + d * sum_j  w_ji / sum_k w_jk * WS(j)
iterated from 1.0 until the largest per-node change drops below epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from vietext.errors import EmptyInput, InvalidInput
from vietext.keyness import load_stopword_set
from vietext.langid import Language
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.hybrid import segment_words
from vietext.segment.sentences import split_sentences
from vietext.serialize import json_bytes

DAMPING = 0.85
EPSILON = 1e-4
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class Sentence:
    text: str
    content_words: frozenset[str]
    raw_length: int        # word-token count before dedup/stopword removal


@dataclass(frozen=True)
class SentenceGraph:
    sentences: tuple[Sentence, ...]
    weights: np.ndarray    # symmetric, zero diagonal
    damping: float = DAMPING
    epsilon: float = EPSILON


@dataclass(frozen=True)
class RankedSentence:
    index: int
    score: float
    text: str


@dataclass(frozen=True)
class ExtractiveSummary:
    selected: tuple[RankedSentence, ...]   # in original document order
    target: float | int


def sentence_similarity(s1: Sentence, s2: Sentence) -> float:
    """Shared-content-word count over summed log lengths; 0 when either
    sentence has at most one token (the log-denominator guard)."""
    if s1.raw_length <= 1 or s2.raw_length <= 1:
        return 0.0
    overlap = len(s1.content_words & s2.content_words)
    if overlap == 0:
        return 0.0
    return overlap / (math.log(s1.raw_length) + math.log(s2.raw_length))


def build_sentence_graph(sentences: list[Sentence], damping: float = DAMPING,
                         epsilon: float = EPSILON) -> SentenceGraph:
    n = len(sentences)
    weights = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            w = sentence_similarity(sentences[i], sentences[j])
            weights[i, j] = w
            weights[j, i] = w
    return SentenceGraph(sentences=tuple(sentences), weights=weights,
                         damping=damping, epsilon=epsilon)


def textrank_iterate(graph: SentenceGraph) -> tuple[list[float], int]:
    """Converged centrality scores plus the iteration count.

    Isolated nodes (no incident edges) sit at exactly (1 - damping)."""
    n = len(graph.sentences)
    if n == 0:
        raise InvalidInput("graph has no sentences")
    weights = graph.weights
    out_sums = weights.sum(axis=1)
    # transition[i, j] = w_ji / out_sum(j); columns with no edges stay zero.
    with np.errstate(divide="ignore", invalid="ignore"):
        transition = np.where(out_sums > 0.0, weights.T / out_sums, 0.0)
    d = graph.damping
    scores = np.ones(n, dtype=np.float64)
    iterations = 0
    for iterations in range(1, MAX_ITERATIONS + 1):
        updated = (1.0 - d) + d * transition @ scores
        delta = float(np.max(np.abs(updated - scores)))
        scores = updated
        if delta < graph.epsilon:
            break
    return scores.tolist(), iterations


def textrank_scores(graph: SentenceGraph) -> list[float]:
    return textrank_iterate(graph)[0]


def _resolve_target(target: float | int, n_sentences: int) -> int:
    if isinstance(target, float):
        if not 0.0 < target <= 1.0:
            raise InvalidInput("fractional target must be in (0, 1]")
        return max(1, math.ceil(target * n_sentences))
    if target < 1:
        raise InvalidInput("sentence-count target must be >= 1")
    return min(target, n_sentences)


def prepare_sentences(text: str, language: Language,
                      dictionary: SegmenterDictionary,
                      stopwords: set[str] | None = None) -> list[Sentence]:
    if stopwords is None:
        stopwords = load_stopword_set(language) if language in (
            Language.VIETNAMESE, Language.ENGLISH) else set()
    sentences = []
    for sent_text, _ in split_sentences(text, language):
        seg = segment_words(sent_text, language, dictionary)
        words = [t.surface.casefold() for t in seg.word_tokens()]
        content = frozenset(w for w in words if w not in stopwords)
        sentences.append(Sentence(text=sent_text, content_words=content,
                                  raw_length=len(words)))
    return sentences


def summarise_extractive(text: str, language: Language,
                         target: float | int,
                         dictionary: SegmenterDictionary,
                         stopwords: set[str] | None = None) -> ExtractiveSummary:
    """Rank sentences by centrality and keep the top `target`, returned in
    document order.  Equal scores prefer the earlier sentence."""
    return summarise_extractive_corpus([(text, language)], target,
                                       dictionary, stopwords)


def summarise_extractive_corpus(texts: list[tuple[str, Language]],
                                target: float | int,
                                dictionary: SegmenterDictionary,
                                stopwords: set[str] | None = None,
                                ) -> ExtractiveSummary:
    """Extractive summary over several texts: sentences are split per text,
    ranked on one shared graph, and indexed in reading order."""
    sentences: list[Sentence] = []
    for text, language in texts:
        sentences.extend(prepare_sentences(text, language, dictionary, stopwords))
    if not sentences:
        raise EmptyInput("no sentences in any input text")
    graph = build_sentence_graph(sentences)
    scores = textrank_scores(graph)
    count = _resolve_target(target, len(sentences))
    ranked = sorted(range(len(sentences)), key=lambda i: (-scores[i], i))
    chosen = sorted(ranked[:count])
    selected = tuple(RankedSentence(index=i, score=scores[i],
                                    text=sentences[i].text)
                     for i in chosen)
    return ExtractiveSummary(selected=selected, target=target)


def summary_json_bytes(summary: ExtractiveSummary) -> bytes:
    return json_bytes({
        "summary": [{"index": s.index, "score": s.score, "text": s.text}
                    for s in summary.selected],
        "method": "textrank",
    })
