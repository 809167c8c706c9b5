"""The hybrid pipeline: word-level segmentation plus a BPE subword layer.

Word tokens are produced by the language's word segmenter and left
untouched; the subword pass only attaches the BPE split of each word's
space-removed surface.  Both languages therefore share one
segmentation-tokenisation contract.
"""

from __future__ import annotations

from vietext.errors import InvalidInput
from vietext.langid import Language
from vietext.segment.bpe import BpeModel, bpe_encode, bpe_train
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.english import tokenize_english
from vietext.segment.maxmatch import segment_vietnamese
from vietext.segment.tokens import SegmentedText


def segment_words(text: str, language: Language,
                  dictionary: SegmenterDictionary) -> SegmentedText:
    """Word-level segmentation routed by language (no subwords)."""
    if language is Language.VIETNAMESE:
        return segment_vietnamese(text, dictionary)
    if language is Language.ENGLISH:
        return tokenize_english(text)
    raise InvalidInput(f"cannot segment language {language.value}")


def segment_hybrid(text: str, language: Language,
                   dictionary: SegmenterDictionary,
                   model: BpeModel) -> SegmentedText:
    """Word segmentation with BPE subwords attached to every word token."""
    segmented = segment_words(text, language, dictionary)
    tokens = tuple(
        tok.with_subwords(tuple(bpe_encode(tok.surface.replace(" ", ""), model)))
        if tok.is_word else tok
        for tok in segmented.tokens
    )
    return SegmentedText(tokens=tokens, language=segmented.language,
                         source=segmented.source)


def train_corpus_bpe(texts: list[SegmentedText], num_merges: int = 2000) -> BpeModel:
    """Train a BPE model on the word tokens of an already-segmented corpus."""
    words = [tok.surface.replace(" ", "")
             for seg in texts for tok in seg.word_tokens()]
    if not words:
        raise InvalidInput("no word tokens to train on")
    return bpe_train(words, num_merges)
