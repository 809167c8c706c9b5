"""Sentence splitting with an abbreviation guard.

A sentence ends at . ! ? or … when followed by whitespace and an
uppercase letter (Vietnamese capitals included) or by end of text.
Known abbreviations ("Dr.", "TS.", ...) never end a sentence.
"""

from __future__ import annotations

from functools import lru_cache

from vietext import resources
from vietext.langid import Language

TERMINATORS = frozenset(".!?…")

Span = tuple[int, int]


@lru_cache(maxsize=None)
def _default_guard(language: Language) -> frozenset[str]:
    if language in (Language.VIETNAMESE, Language.ENGLISH):
        return frozenset(resources.load_abbreviations(language))
    return frozenset(resources.load_abbreviations(Language.VIETNAMESE)) | frozenset(
        resources.load_abbreviations(Language.ENGLISH))


def _abbrev_before(text: str, dot_index: int) -> str:
    """The maximal word-and-dot run ending at dot_index (inclusive)."""
    j = dot_index
    while j > 0 and (text[j - 1].isalnum() or text[j - 1] == "."):
        j -= 1
    return text[j:dot_index + 1]


def split_sentences(text: str, language: Language = Language.UNKNOWN,
                    abbreviations: frozenset[str] | None = None) -> list[tuple[str, Span]]:
    """Return (sentence, (start, end)) pairs; spans tile the text losslessly."""
    if abbreviations is None:
        abbreviations = _default_guard(language)
    n = len(text)
    sentences: list[tuple[str, Span]] = []
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch not in TERMINATORS:
            i += 1
            continue
        # Absorb a terminator run ("?!", "...").
        j = i
        while j + 1 < n and text[j + 1] in TERMINATORS:
            j += 1
        if i == j and ch == "." and _abbrev_before(text, i) in abbreviations:
            i = j + 1
            continue
        # Look ahead: end of text, or whitespace then an uppercase letter.
        k = j + 1
        while k < n and text[k].isspace():
            k += 1
        at_end = k >= n
        if not at_end and not (k > j + 1 and text[k].isupper()):
            i = j + 1
            continue
        first = start
        while first <= j and text[first].isspace():
            first += 1
        if first <= j:
            sentences.append((text[first:j + 1], (first, j + 1)))
        start = j + 1
        i = j + 1
    # Trailing material without a terminator.
    first = start
    while first < n and text[first].isspace():
        first += 1
    if first < n:
        end = n
        while end > first and text[end - 1].isspace():
            end -= 1
        sentences.append((text[first:end], (first, end)))
    return sentences
