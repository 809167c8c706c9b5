"""Boundary-span segmentation scoring.

Both segmentations are converted to sets of (start, end) syllable-index
intervals; precision and recall are exact-interval intersection rates.
"""

from __future__ import annotations

from vietext.errors import SpanMismatch
from vietext.segment.tokens import SegmentedText


def word_spans(words: list[str]) -> set[tuple[int, int]]:
    spans = set()
    pos = 0
    for word in words:
        k = word.count(" ") + 1
        spans.add((pos, pos + k))
        pos += k
    return spans


def _flatten(words: list[str]) -> list[str]:
    return [s for w in words for s in w.split(" ")]


def span_match_counts(predicted_words: list[str],
                      gold_words: list[str]) -> tuple[int, int, int]:
    """(matched, predicted, gold) span counts; SpanMismatch if texts differ."""
    if _flatten(predicted_words) != _flatten(gold_words):
        raise SpanMismatch("gold words do not tile the predicted text")
    p = word_spans(predicted_words)
    g = word_spans(gold_words)
    return len(p & g), len(p), len(g)


def prf_from_counts(matched: int, predicted: int, gold: int) -> tuple[float, float, float]:
    if predicted == 0 and gold == 0:
        return 1.0, 1.0, 1.0  # empty vs empty: perfect by convention
    precision = matched / predicted if predicted else 0.0
    recall = matched / gold if gold else 0.0
    if precision + recall == 0.0:
        return precision, recall, 0.0
    return precision, recall, 2 * precision * recall / (precision + recall)


def score_segmentation_f1(predicted: SegmentedText,
                          gold: list[str]) -> tuple[float, float, float]:
    """Precision/recall/F1 of a segmentation against a gold word list."""
    counts = span_match_counts(predicted.surfaces(), gold)
    return prf_from_counts(*counts)
