"""Bilingual Vietnamese/English free-text analytics.

Word segmentation (dictionary maximum matching + BPE subwords), corpus
keyness statistics, TextRank summarisation, lexicon sentiment, KWIC
concordancing and word trees, a benchmark harness, and an HTTP service.
"""

__version__ = "0.1.0"

from vietext.langid import Language, detect_language_text
from vietext.ingest import Corpus, CorpusSnapshot, Document, load_csv, load_plain_text

__all__ = [
    "Corpus",
    "CorpusSnapshot",
    "Document",
    "Language",
    "__version__",
    "detect_language_text",
    "load_csv",
    "load_plain_text",
]
