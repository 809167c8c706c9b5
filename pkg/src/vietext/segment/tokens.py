"""Token and segmented-text types shared by all segmenters.

Segmentation is lossless: token spans are strictly increasing character
intervals into the source, and the only characters outside spans are the
whitespace between them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterator

from vietext.langid import Language


@dataclass(frozen=True)
class Token:
    surface: str              # syllables joined by single spaces for multi-syllable words
    span: tuple[int, int]     # character offsets into the source text
    is_word: bool
    subwords: tuple[str, ...] | None = None

    def with_subwords(self, subwords: tuple[str, ...]) -> "Token":
        return replace(self, subwords=subwords)


@dataclass(frozen=True)
class SegmentedText:
    tokens: tuple[Token, ...]
    language: Language
    source: str

    def word_tokens(self) -> Iterator[Token]:
        return (t for t in self.tokens if t.is_word)

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]

    def reconstruct(self) -> str:
        """Rebuild the source from spans plus the inter-span characters."""
        parts = []
        pos = 0
        for tok in self.tokens:
            start, end = tok.span
            parts.append(self.source[pos:start])
            parts.append(self.source[start:end])
            pos = end
        parts.append(self.source[pos:])
        return "".join(parts)


# Atom scanner for syllable-based segmentation: a letter run, a digit run,
# or a single non-space character, in source order.
_ATOM_RE = re.compile(r"[^\W\d_]+|\d+|\S", re.UNICODE)

LETTERS, DIGITS, OTHER = 0, 1, 2


def scan_atoms(text: str) -> list[tuple[int, str, int, int]]:
    """Return (kind, text, start, end) atoms covering all non-space characters."""
    atoms = []
    for m in _ATOM_RE.finditer(text):
        s = m.group()
        if s[0].isdigit():
            kind = DIGITS
        elif s[0].isalpha():
            kind = LETTERS
        else:
            kind = OTHER
        atoms.append((kind, s, m.start(), m.end()))
    return atoms
