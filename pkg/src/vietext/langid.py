"""Lightweight Vietnamese/English language detection.

Scoring: Vietnamese evidence is the count of Vietnamese-specific characters
(letters that exist in Vietnamese orthography but not in plain English)
plus twice the number of Vietnamese stopword occurrences; English evidence
is twice the number of English stopword occurrences.  The higher score
wins.  Vietnamese-specific characters are near-conclusive, so nonzero ties
resolve to Vietnamese.
"""

from __future__ import annotations

import re
from enum import Enum
from functools import lru_cache

from vietext import resources


class Language(str, Enum):
    VIETNAMESE = "Vietnamese"
    ENGLISH = "English"
    UNKNOWN = "Unknown"


# ă â đ ê ô ơ ư and every tone-marked vowel (NFC composed forms).
VIETNAMESE_SPECIFIC = (
    "ăâđêôơư"
    "àảãáạằẳẵắặầẩẫấậ"
    "èẻẽéẹềểễếệ"
    "ìỉĩíị"
    "òỏõóọồổỗốộờởỡớợ"
    "ùủũúụừửữứự"
    "ỳỷỹýỵ"
)
_SPECIFIC_SET = frozenset(VIETNAMESE_SPECIFIC)

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


@lru_cache(maxsize=None)
def _stopword_set(language: Language) -> frozenset[str]:
    return frozenset(resources.load_stopwords(language))


def detection_scores(text: str) -> tuple[int, int]:
    """Return (vietnamese_score, english_score) for NFC text."""
    folded = text.casefold()
    vi_score = sum(1 for ch in folded if ch in _SPECIFIC_SET)
    words = _WORD_RE.findall(folded)
    vi_stop = _stopword_set(Language.VIETNAMESE)
    en_stop = _stopword_set(Language.ENGLISH)
    vi_score += 2 * sum(1 for w in words if w in vi_stop)
    en_score = 2 * sum(1 for w in words if w in en_stop)
    return vi_score, en_score


def detect_language_text(text: str) -> Language:
    """Classify a string; Unknown only when it has no alphabetic characters."""
    if not _WORD_RE.search(text):
        return Language.UNKNOWN
    vi_score, en_score = detection_scores(text)
    if vi_score > en_score:
        return Language.VIETNAMESE
    if en_score > vi_score:
        return Language.ENGLISH
    # Tied: Vietnamese-specific evidence is conclusive; otherwise the text is
    # plain Latin with no signal either way and English is the safer default.
    return Language.VIETNAMESE if vi_score > 0 else Language.ENGLISH
