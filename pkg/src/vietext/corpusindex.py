"""Segmentation cache over a corpus snapshot.

Analysis modules (concordance, statistics, sentiment) share one
SegmentedCorpus per snapshot: per-document segmentations, sentence
assignment, and a token -> positions inverted index, all built lazily
under a lock and then read concurrently.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from vietext.ingest import CorpusSnapshot, Document
from vietext.langid import Language
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.hybrid import segment_words
from vietext.segment.sentences import split_sentences
from vietext.segment.tokens import SegmentedText


@dataclass(frozen=True)
class IndexedDocument:
    document: Document
    segmented: SegmentedText
    token_sentence: tuple[int, ...]      # sentence index per token, -1 if outside


def _effective_language(doc: Document) -> Language:
    return doc.language if doc.language in (
        Language.VIETNAMESE, Language.ENGLISH) else Language.ENGLISH


class SegmentedCorpus:
    def __init__(self, snapshot: CorpusSnapshot, dictionary: SegmenterDictionary):
        self.snapshot = snapshot
        self.dictionary = dictionary
        self._lock = threading.Lock()
        self._docs: list[IndexedDocument] | None = None
        self._inverted: dict[str, list[tuple[int, int]]] | None = None

    def _build_doc(self, doc: Document) -> IndexedDocument:
        language = _effective_language(doc)
        segmented = segment_words(doc.raw_text, language, self.dictionary)
        spans = [span for _, span in split_sentences(doc.raw_text, language)]
        sentence_of = []
        sentence_idx = 0
        for tok in segmented.tokens:
            start = tok.span[0]
            while sentence_idx < len(spans) and start >= spans[sentence_idx][1]:
                sentence_idx += 1
            if sentence_idx < len(spans) and spans[sentence_idx][0] <= start:
                sentence_of.append(sentence_idx)
            else:
                sentence_of.append(-1)
        return IndexedDocument(document=doc, segmented=segmented,
                               token_sentence=tuple(sentence_of))

    def documents(self) -> list[IndexedDocument]:
        if self._docs is None:
            with self._lock:
                if self._docs is None:
                    self._docs = [self._build_doc(d) for d in self.snapshot.documents]
        return self._docs

    def inverted_index(self) -> dict[str, list[tuple[int, int]]]:
        """Casefolded word-token surface -> [(doc index, token index)]."""
        if self._inverted is None:
            docs = self.documents()
            with self._lock:
                if self._inverted is None:
                    index: dict[str, list[tuple[int, int]]] = {}
                    for di, idoc in enumerate(docs):
                        for ti, tok in enumerate(idoc.segmented.tokens):
                            if tok.is_word:
                                index.setdefault(tok.surface.casefold(), []).append((di, ti))
                    self._inverted = index
        return self._inverted

    def segments_for(self, language: Language) -> list[SegmentedText]:
        return [d.segmented for d in self.documents()
                if _effective_language(d.document) is language]

    def dominant_language(self) -> Language:
        counts: dict[Language, int] = {}
        for doc in self.snapshot.documents:
            lang = _effective_language(doc)
            counts[lang] = counts.get(lang, 0) + 1
        if not counts:
            return Language.ENGLISH
        return max(counts.items(), key=lambda kv: kv[1])[0]
