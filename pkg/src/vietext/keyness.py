"""Frequency tables, log-likelihood significance, and keyness ranking.

The significance statistic is the G2 log-likelihood over the term row of
the 2x2 contingency (study corpus vs reference corpus), the standard
keyword-extraction form: expected counts come from the marginals,
ll = 2*(a*ln(a/e1) + b*ln(b/e2)), zero cells contributing zero.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from vietext import resources
from vietext.errors import InvalidInput, MixedLanguage
from vietext.langid import Language
from vietext.segment.tokens import SegmentedText
from vietext.serialize import csv_bytes, json_bytes

# Relative-frequency agreement below this is treated as exact equality
# (integer counts cannot produce a genuine LL anywhere near it).
LL_ZERO_TOLERANCE = 1e-12

# b = 0 is smoothed to b' = PCT_DIFF_SMOOTHING * n2 so %DIFF stays finite.
PCT_DIFF_SMOOTHING = 1e-12

DEFAULT_MIN_COUNT = 2


@dataclass(frozen=True)
class FrequencyTable:
    counts: dict[str, int]
    total: int
    language: Language


@dataclass(frozen=True)
class ReferenceCorpus:
    counts: dict[str, int]
    total: int
    name: str

    @classmethod
    def load(cls, path: str | Path | None = None,
             language: Language | str | None = None) -> "ReferenceCorpus":
        """Load a refcorpus-v1 file; with no path, the bundled fixture list."""
        if path is None and language is None:
            raise InvalidInput("need a path or a language")
        code = {"Vietnamese": "vi", "English": "en"}.get(
            getattr(language, "value", language), None)
        text = resources.read_text(path, f"refcorpus_{code}.txt" if code else "")
        return cls.parse(text)

    @classmethod
    def parse(cls, text: str) -> "ReferenceCorpus":
        lines = text.splitlines()
        if not lines:
            raise InvalidInput("empty reference corpus file")
        header = lines[0].split(" ")
        if len(header) != 3 or header[0] != "refcorpus-v1":
            raise InvalidInput("expected header 'refcorpus-v1 <name> <total>'")
        name, total = header[1], int(header[2])
        counts: dict[str, int] = {}
        for line in lines[1:]:
            if not line.strip():
                continue
            term, _, count = line.partition("\t")
            counts[term] = int(count)
        if total < sum(counts.values()):
            raise InvalidInput("reference total below the sum of term counts")
        return cls(counts=counts, total=total, name=name)


@dataclass(frozen=True)
class KeynessRow:
    term: str
    a: int                 # study count
    b: int                 # reference count
    e1: float
    e2: float
    ll: float
    signed_keyness: float  # ll signed by over/under-use in the study corpus
    pct_diff: float


def build_frequency_table(texts: Sequence[SegmentedText],
                          stopwords: set[str] | None = None) -> FrequencyTable:
    """Case-folded word-token counts; subwords never enter statistics."""
    languages = {t.language for t in texts}
    if len(languages) > 1:
        raise MixedLanguage(f"inputs span languages {sorted(l.value for l in languages)}")
    language = languages.pop() if languages else Language.UNKNOWN
    counts: Counter = Counter()
    for seg in texts:
        for tok in seg.word_tokens():
            term = tok.surface.casefold()
            if stopwords and term in stopwords:
                continue
            counts[term] += 1
    return FrequencyTable(counts=dict(counts), total=sum(counts.values()),
                          language=language)


def log_likelihood(a: int, b: int, n1: int, n2: int) -> tuple[float, float, float]:
    """Expected counts and G2 for one term; see the module docstring."""
    if n1 <= 0 or n2 <= 0:
        raise InvalidInput("corpus totals must be positive")
    if not (0 <= a <= n1) or not (0 <= b <= n2):
        raise InvalidInput("term counts must lie within corpus totals")
    if a + b == 0:
        raise InvalidInput("term must occur in at least one corpus")
    combined = a + b
    grand = n1 + n2
    e1 = n1 * combined / grand
    e2 = n2 * combined / grand
    ll = 0.0
    if a > 0:
        ll += a * math.log(a / e1)
    if b > 0:
        ll += b * math.log(b / e2)
    ll *= 2.0
    if ll < LL_ZERO_TOLERANCE:
        ll = 0.0  # equal relative frequency up to float rounding
    return e1, e2, ll


def _signed(a: int, b: int, n1: int, n2: int, ll: float) -> float:
    diff = a / n1 - b / n2
    if abs(diff) <= LL_ZERO_TOLERANCE:
        return 0.0
    return ll if diff > 0 else -ll


def _pct_diff(a: int, b: int, n1: int, n2: int) -> float:
    ref_rate = b / n2 if b > 0 else PCT_DIFF_SMOOTHING
    return 100.0 * ((a / n1 - ref_rate) / ref_rate)


def keyness_table(study: FrequencyTable, reference: ReferenceCorpus,
                  min_count: int = DEFAULT_MIN_COUNT) -> list[KeynessRow]:
    """One row per study term with count >= min_count, sorted by
    signed keyness descending, ties broken alphabetically."""
    if study.total <= 0:
        raise InvalidInput("study corpus is empty")
    if reference.total <= 0:
        raise InvalidInput("reference corpus is empty")
    n1, n2 = study.total, reference.total
    rows = []
    for term, a in study.counts.items():
        if a < min_count:
            continue
        b = reference.counts.get(term, 0)
        e1, e2, ll = log_likelihood(a, b, n1, n2)
        rows.append(KeynessRow(term=term, a=a, b=b, e1=e1, e2=e2, ll=ll,
                               signed_keyness=_signed(a, b, n1, n2, ll),
                               pct_diff=_pct_diff(a, b, n1, n2)))
    rows.sort(key=lambda r: (-r.signed_keyness, r.term))
    return rows


class WordcloudMode(str, Enum):
    FREQUENCY = "Frequency"
    LOG_LIKELIHOOD = "LogLikelihood"
    KEYNESS = "Keyness"


@dataclass(frozen=True)
class WordcloudEntry:
    term: str
    weight: float          # max-normalised, top term = 1.0
    statistic: float       # raw count, LL, or signed keyness
    count_study: int
    count_reference: int
    pct_diff: float | None = None


def wordcloud_payload(mode: WordcloudMode,
                      study: FrequencyTable,
                      reference: ReferenceCorpus | None = None,
                      top_k: int = 50,
                      stopwords: set[str] | None = None,
                      min_count: int = DEFAULT_MIN_COUNT) -> list[WordcloudEntry]:
    """Ranked (term, weight) payload for one of the three cloud modes."""
    if top_k < 1:
        raise InvalidInput("top_k must be >= 1")
    stopwords = stopwords or set()
    entries: list[WordcloudEntry] = []
    if mode is WordcloudMode.FREQUENCY:
        ranked = sorted(((term, count) for term, count in study.counts.items()
                         if term not in stopwords),
                        key=lambda tc: (-tc[1], tc[0]))[:top_k]
        if not ranked:
            return []
        top = ranked[0][1]
        return [WordcloudEntry(term=t, weight=c / top, statistic=float(c),
                               count_study=c, count_reference=0)
                for t, c in ranked]
    if reference is None:
        raise InvalidInput(f"{mode.value} mode requires a reference corpus")
    rows = [r for r in keyness_table(study, reference, min_count=min_count)
            if r.term not in stopwords and r.signed_keyness > 0.0]
    rows = rows[:top_k]
    if not rows:
        return []
    top_stat = rows[0].ll if mode is WordcloudMode.LOG_LIKELIHOOD else rows[0].signed_keyness
    for r in rows:
        stat = r.ll if mode is WordcloudMode.LOG_LIKELIHOOD else r.signed_keyness
        entries.append(WordcloudEntry(
            term=r.term, weight=stat / top_stat, statistic=stat,
            count_study=r.a, count_reference=r.b,
            pct_diff=r.pct_diff if mode is WordcloudMode.KEYNESS else None))
    return entries


def payload_json_bytes(payload: Iterable[WordcloudEntry]) -> bytes:
    rows = []
    for e in payload:
        row = {"term": e.term, "weight": e.weight, "statistic": e.statistic,
               "count_study": e.count_study, "count_reference": e.count_reference}
        if e.pct_diff is not None:
            row["pct_diff"] = e.pct_diff
        rows.append(row)
    return json_bytes(rows)


def payload_csv_bytes(payload: Iterable[WordcloudEntry]) -> bytes:
    return csv_bytes(
        ["term", "weight", "statistic", "count_study", "count_reference"],
        [[e.term, repr(e.weight), repr(e.statistic), e.count_study, e.count_reference]
         for e in payload],
    )


def load_stopword_set(language: Language, path: str | Path | None = None) -> set[str]:
    return {w.casefold() for w in resources.load_stopwords(language, path)}
