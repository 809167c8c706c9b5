"""Rule-based English tokenisation.

Whitespace-delimited words with leading/trailing punctuation split off;
internal apostrophes and hyphens stay inside the token ("it's",
"state-of-the-art").  Digit runs are non-word tokens.
"""

from __future__ import annotations

import re

from vietext.langid import Language
from vietext.segment.tokens import SegmentedText, Token

_LETTER_RE = re.compile(r"[^\W\d_]", re.UNICODE)
# A word (possibly with internal 'or - joints), or any single non-space char.
_TOKEN_RE = re.compile(r"\w+(?:['’-]\w+)*|\S", re.UNICODE)


def tokenize_english(text: str) -> SegmentedText:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        surface = m.group()
        is_word = bool(_LETTER_RE.search(surface))
        tokens.append(Token(surface=surface, span=(m.start(), m.end()),
                            is_word=is_word))
    return SegmentedText(tokens=tuple(tokens), language=Language.ENGLISH,
                         source=text)
