"""Sentence- and document-level sentiment with coarse and fine labels.

Two backends share one result contract: a transparent lexicon scorer
(polarity sums with negation and intensifier rules) and a client for an
external classifier service speaking a small JSON protocol.  The 3-class
label is always the projection of the 5-class label; there is no separate
3-class path.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import requests

from vietext import resources
from vietext.errors import BackendUnavailable, InvalidInput, InvalidThresholds, SchemaError
from vietext.ingest import Document
from vietext.langid import Language
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.hybrid import segment_words
from vietext.segment.sentences import split_sentences
from vietext.serialize import json_bytes


class Label5(str, Enum):
    VERY_NEGATIVE = "very_negative"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"
    VERY_POSITIVE = "very_positive"


class Label3(str, Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


LABEL5_ORDER = (Label5.VERY_NEGATIVE, Label5.NEGATIVE, Label5.NEUTRAL,
                Label5.POSITIVE, Label5.VERY_POSITIVE)


def label5_rank(label: Label5) -> int:
    return LABEL5_ORDER.index(label)


def project_label(label5: Label5) -> Label3:
    """The one and only 5-to-3 mapping: VeryX -> X, Neutral -> Neutral."""
    return {
        Label5.VERY_NEGATIVE: Label3.NEGATIVE,
        Label5.NEGATIVE: Label3.NEGATIVE,
        Label5.NEUTRAL: Label3.NEUTRAL,
        Label5.POSITIVE: Label3.POSITIVE,
        Label5.VERY_POSITIVE: Label3.POSITIVE,
    }[label5]


DEFAULT_THRESHOLDS = (-1.0, -0.25, 0.25, 1.0)
SATURATION = 2.0          # |score| at which lexicon confidence reaches 1
NEGATION_WINDOW = 3       # word tokens a negator reaches


class Granularity(str, Enum):
    PER_SENTENCE = "PerSentence"
    PER_DOCUMENT = "PerDocument"


class Backend(str, Enum):
    LEXICON = "Lexicon"
    EXTERNAL_CLIENT = "ExternalClient"


@dataclass(frozen=True)
class SentimentLexicon:
    polarity: dict[str, float]       # casefolded term -> value in [-1, 1]
    negators: frozenset[str]
    intensifiers: dict[str, float]   # casefolded term -> multiplier > 0
    language: Language = Language.UNKNOWN

    @classmethod
    def load(cls, language: Language, path: str | Path | None = None) -> "SentimentLexicon":
        code = {"Vietnamese": "vi", "English": "en"}[language.value]
        return cls.parse(resources.read_text(path, f"lexicon_{code}.txt"), language)

    @classmethod
    def parse(cls, text: str, language: Language = Language.UNKNOWN) -> "SentimentLexicon":
        polarity: dict[str, float] = {}
        negators: set[str] = set()
        intensifiers: dict[str, float] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            cells = line.split("\t")
            if cells[0] == "NEG" and len(cells) == 2:
                negators.add(cells[1].casefold())
            elif cells[0] == "INT" and len(cells) == 3:
                mult = float(cells[2])
                if mult <= 0:
                    raise InvalidInput(f"line {lineno}: multiplier must be > 0")
                intensifiers[cells[1].casefold()] = mult
            elif len(cells) == 2:
                polarity[cells[0].casefold()] = float(cells[1])
            else:
                raise InvalidInput(f"line {lineno}: unrecognised lexicon line {line!r}")
        return cls(polarity=polarity, negators=frozenset(negators),
                   intensifiers=intensifiers, language=language)


@dataclass(frozen=True)
class SentimentResult:
    unit_text: str
    raw_score: float
    label5: Label5
    label3: Label3
    confidence: float


@dataclass(frozen=True)
class SentimentDistribution:
    counts: dict[Label5, int]
    fractions: dict[Label5, float]

    @classmethod
    def from_results(cls, results: Sequence[SentimentResult]) -> "SentimentDistribution":
        counts = Counter(r.label5 for r in results)
        full = {label: counts.get(label, 0) for label in LABEL5_ORDER}
        total = sum(full.values())
        fractions = {label: (c / total if total else 0.0) for label, c in full.items()}
        return cls(counts=full, fractions=fractions)


def score_word_sequence(words: Sequence[str], lexicon: SentimentLexicon) -> float:
    """Apply the scoring rules to casefolded word tokens of one sentence.

    Negators flip the sign of polarity hits within the next
    NEGATION_WINDOW word tokens; intensifiers multiply the next hit and
    stack until it lands.
    """
    score = 0.0
    negate_remaining = 0
    multiplier = 1.0
    for word in words:
        if word in lexicon.negators:
            negate_remaining = NEGATION_WINDOW
            continue
        if word in lexicon.intensifiers:
            multiplier *= lexicon.intensifiers[word]
        else:
            value = lexicon.polarity.get(word)
            if value is not None:
                if negate_remaining > 0:
                    value = -value
                score += value * multiplier
                multiplier = 1.0
        if negate_remaining > 0:
            negate_remaining -= 1
    return score


def score_lexicon(tokens, lexicon: SentimentLexicon) -> float:
    """Raw lexicon score of a SegmentedText unit."""
    words = [t.surface.casefold() for t in tokens.word_tokens()]
    return score_word_sequence(words, lexicon)


def classify(raw_score: float,
             thresholds: tuple[float, float, float, float] = DEFAULT_THRESHOLDS,
             saturation: float = SATURATION) -> tuple[Label5, Label3, float]:
    """Label a raw score.  Interval boundaries belong to the more neutral
    side, so a score exactly at a cut point takes the label nearer Neutral."""
    t0, t1, t2, t3 = thresholds
    if not (t0 < t1 < t2 < t3):
        raise InvalidThresholds(f"thresholds must be strictly ascending: {thresholds}")
    if raw_score < t0:
        label5 = Label5.VERY_NEGATIVE
    elif raw_score < t1:
        label5 = Label5.NEGATIVE
    elif raw_score <= t2:
        label5 = Label5.NEUTRAL
    elif raw_score <= t3:
        label5 = Label5.POSITIVE
    else:
        label5 = Label5.VERY_POSITIVE
    confidence = min(1.0, abs(raw_score) / saturation)
    return label5, project_label(label5), confidence


_WIRE_LABELS = {label.value: label for label in Label5}


class ExternalSentimentClient:
    """Client for a classifier service: POST {texts:[...]} ->
    {results:[{label, confidence}]} with labels from the 5-class set."""

    def __init__(self, endpoint: str, timeout: float = 30.0, max_in_flight: int = 4):
        self.endpoint = endpoint
        self.timeout = timeout
        self._slots = threading.Semaphore(max_in_flight)

    def classify_texts(self, texts: Sequence[str]) -> list[tuple[Label5, float]]:
        with self._slots:
            try:
                response = requests.post(self.endpoint, json={"texts": list(texts)},
                                         timeout=self.timeout)
            except requests.RequestException as exc:
                raise BackendUnavailable(f"classifier at {self.endpoint}: {exc}") from exc
        if response.status_code != 200:
            raise BackendUnavailable(
                f"classifier returned HTTP {response.status_code}")
        try:
            results = response.json()["results"]
            if len(results) != len(texts):
                raise SchemaError(
                    f"expected {len(texts)} results, got {len(results)}")
            parsed = []
            for item in results:
                label = item["label"]
                if label not in _WIRE_LABELS:
                    raise SchemaError(f"unknown sentiment label {label!r}")
                confidence = float(item["confidence"])
                if not 0.0 <= confidence <= 1.0:
                    raise SchemaError(f"confidence {confidence} outside [0, 1]")
                parsed.append((_WIRE_LABELS[label], confidence))
        except (ValueError, KeyError, TypeError) as exc:
            raise SchemaError(f"malformed classifier response: {exc}") from exc
        return parsed


def external_classify(units: Sequence[str],
                      client: ExternalSentimentClient) -> list[SentimentResult]:
    """Classify units atomically via the external service.

    raw_score for external results is a display ordinal (label rank offset
    from Neutral, scaled by confidence); the service supplies no score.
    """
    labelled = client.classify_texts(units)
    results = []
    for text, (label5, confidence) in zip(units, labelled):
        ordinal = float(label5_rank(label5) - 2)
        results.append(SentimentResult(
            unit_text=text, raw_score=ordinal * confidence, label5=label5,
            label3=project_label(label5), confidence=confidence))
    return results


def _units_for(doc: Document, granularity: Granularity) -> list[str]:
    if granularity is Granularity.PER_DOCUMENT:
        return [doc.raw_text] if doc.raw_text.strip() else []
    return [s for s, _ in split_sentences(doc.raw_text, doc.language)]


def analyse_sentiment(docs: Sequence[Document],
                      granularity: Granularity = Granularity.PER_SENTENCE,
                      backend: Backend = Backend.LEXICON,
                      *,
                      dictionary: SegmenterDictionary,
                      lexicons: dict[Language, SentimentLexicon] | None = None,
                      thresholds: tuple[float, float, float, float] = DEFAULT_THRESHOLDS,
                      saturation: float = SATURATION,
                      client: ExternalSentimentClient | None = None,
                      ) -> tuple[list[SentimentResult], SentimentDistribution]:
    """Route every document through its language's segmentation and score
    each unit.  Fails atomically: an unreachable backend yields no results."""
    units: list[tuple[str, Language]] = []
    for doc in docs:
        for unit in _units_for(doc, granularity):
            units.append((unit, doc.language))

    if backend is Backend.EXTERNAL_CLIENT:
        if client is None:
            raise BackendUnavailable("no external classifier configured")
        results = external_classify([u for u, _ in units], client)
        return results, SentimentDistribution.from_results(results)

    if lexicons is None:
        lexicons = {
            Language.VIETNAMESE: SentimentLexicon.load(Language.VIETNAMESE),
            Language.ENGLISH: SentimentLexicon.load(Language.ENGLISH),
        }
    results = []
    for unit, language in units:
        lang = language if language in lexicons else Language.ENGLISH
        lexicon = lexicons[lang]
        score = 0.0
        # Sentence-by-sentence so negation windows never cross boundaries.
        for sent_text, _ in split_sentences(unit, lang) or [(unit, (0, len(unit)))]:
            seg = segment_words(sent_text, lang, dictionary)
            score += score_lexicon(seg, lexicon)
        label5, label3, confidence = classify(score, thresholds, saturation)
        results.append(SentimentResult(unit_text=unit, raw_score=score,
                                       label5=label5, label3=label3,
                                       confidence=confidence))
    return results, SentimentDistribution.from_results(results)


def sentiment_json_bytes(results: Sequence[SentimentResult],
                         distribution: SentimentDistribution,
                         classes: int = 5) -> bytes:
    if classes not in (3, 5):
        raise InvalidInput("classes must be 3 or 5")
    rows = []
    for r in results:
        label = r.label5.value if classes == 5 else r.label3.value
        rows.append({"text": r.unit_text, "label": label,
                     "label5": r.label5.value, "label3": r.label3.value,
                     "score": r.raw_score, "confidence": r.confidence})
    return json_bytes({
        "classes": classes,
        "results": rows,
        "distribution": {
            "counts": {label.value: c for label, c in distribution.counts.items()},
            "fractions": {label.value: f for label, f in distribution.fractions.items()},
        },
    })
