"""Greedy maximum-matching word segmentation for Vietnamese.

At each syllable the longest dictionary entry starting there wins; with no
match the syllable stands alone.  Unknown syllables therefore degrade to
single-syllable tokens and the segmenter never fails.
"""

from __future__ import annotations

from vietext.langid import Language
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.tokens import LETTERS, SegmentedText, Token, scan_atoms


def segment_vietnamese(text: str, dictionary: SegmenterDictionary) -> SegmentedText:
    atoms = scan_atoms(text)
    entries = dictionary.entries
    firsts = dictionary.first_syllables
    max_len = dictionary.max_word_syllables
    tokens: list[Token] = []
    append = tokens.append
    n = len(atoms)
    i = 0
    while i < n:
        kind, surface, start, end = atoms[i]
        if kind != LETTERS:
            append(Token(surface=surface, span=(start, end), is_word=False))
            i += 1
            continue
        folded = surface.casefold()
        if folded not in firsts:
            append(Token(surface=surface, span=(start, end), is_word=True))
            i += 1
            continue
        matched = 0
        limit = min(max_len, n - i)
        for k in range(limit, 1, -1):
            window = atoms[i:i + k]
            if any(a[0] != LETTERS for a in window):
                continue
            candidate = " ".join(a[1] for a in window).casefold()
            if candidate in entries:
                matched = k
                break
        if matched:
            window = atoms[i:i + matched]
            append(Token(surface=" ".join(a[1] for a in window),
                         span=(window[0][2], window[-1][3]),
                         is_word=True))
            i += matched
        else:
            append(Token(surface=surface, span=(start, end), is_word=True))
            i += 1
    return SegmentedText(tokens=tuple(tokens), language=Language.VIETNAMESE,
                         source=text)
