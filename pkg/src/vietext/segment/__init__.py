"""Word segmentation, BPE subwords, sentence splitting, and F1 scoring."""

from vietext.segment.bpe import (
    END_OF_WORD,
    BpeModel,
    bpe_encode,
    bpe_train,
    strip_marker,
)
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.english import tokenize_english
from vietext.segment.f1 import score_segmentation_f1, span_match_counts, word_spans
from vietext.segment.hybrid import segment_hybrid, segment_words, train_corpus_bpe
from vietext.segment.maxmatch import segment_vietnamese
from vietext.segment.sentences import split_sentences
from vietext.segment.tokens import SegmentedText, Token

__all__ = [
    "END_OF_WORD",
    "BpeModel",
    "SegmenterDictionary",
    "SegmentedText",
    "Token",
    "bpe_encode",
    "bpe_train",
    "score_segmentation_f1",
    "segment_hybrid",
    "segment_vietnamese",
    "segment_words",
    "span_match_counts",
    "split_sentences",
    "strip_marker",
    "tokenize_english",
    "train_corpus_bpe",
    "word_spans",
]
