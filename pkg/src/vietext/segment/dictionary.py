"""Plain-text dictionary backing the Vietnamese word segmenter.

File format: one word per line, syllables separated by single spaces,
lines starting with # ignored.  Entries are stored casefolded; matching
is case-insensitive while token surfaces keep the source casing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from vietext.errors import InvalidInput


@dataclass(frozen=True)
class SegmenterDictionary:
    entries: frozenset[str]            # casefolded, space-joined syllables
    max_word_syllables: int
    first_syllables: frozenset[str] = field(repr=False, default=frozenset())

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "SegmenterDictionary":
        entries = set()
        for word in words:
            folded = " ".join(word.casefold().split())
            n = folded.count(" ") + 1
            if n < 2:
                raise InvalidInput(f"dictionary entry {word!r} has a single syllable")
            entries.add(folded)
        max_len = max((e.count(" ") + 1 for e in entries), default=2)
        firsts = frozenset(e.split(" ", 1)[0] for e in entries)
        return cls(entries=frozenset(entries), max_word_syllables=max_len,
                   first_syllables=firsts)

    @classmethod
    def empty(cls) -> "SegmenterDictionary":
        return cls(entries=frozenset(), max_word_syllables=2)

    @classmethod
    def load(cls, path: str | Path) -> "SegmenterDictionary":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def parse(cls, text: str) -> "SegmenterDictionary":
        words = [line.strip() for line in text.splitlines()
                 if line.strip() and not line.lstrip().startswith("#")]
        return cls.from_words(words)

    def save(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(sorted(self.entries)) + "\n", encoding="utf-8")

    def __contains__(self, word: str) -> bool:
        return " ".join(word.casefold().split()) in self.entries

    def __len__(self) -> int:
        return len(self.entries)
