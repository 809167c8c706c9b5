"""Client-backed abstractive summarisation with aspect guidance.

Aspect detection is a transparent keyword-catalogue scorer with a
saturating confidence (hits / (hits + k)); prompt assembly is a pure,
golden-file-stable template; generation goes to an external completion
endpoint, or to a deterministic offline stub (top TextRank sentences)
so the full request path is testable without a model.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import requests

from vietext import resources
from vietext.errors import (
    BackendUnavailable,
    GenerationTimeout,
    InvalidInput,
    UnknownAspect,
)
from vietext.langid import Language
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.tokens import SegmentedText
from vietext.serialize import json_bytes
from vietext.textrank import summarise_extractive_corpus

ASPECT_SATURATION = 5            # k in hits / (hits + k)
STUB_MARKER = "[offline-stub]"
STUB_SENTENCES = 3
DEFAULT_TEMPERATURE = 0.2
DEFAULT_MAX_TOKENS = 256
GENERATION_TIMEOUT = 120.0


class GenerationBackend(str, Enum):
    EXTERNAL_LLM = "ExternalLLM"
    OFFLINE_STUB = "OfflineStub"


@dataclass(frozen=True)
class Aspect:
    name: str
    labels: dict[Language, str]          # localised display labels
    keywords: dict[Language, tuple[str, ...]]


@dataclass(frozen=True)
class AspectCatalogue:
    aspects: dict[str, Aspect]

    @classmethod
    def load(cls, path: str | Path | None = None) -> "AspectCatalogue":
        return cls.parse(resources.read_text(path, "aspects.txt"))

    @classmethod
    def parse(cls, text: str) -> "AspectCatalogue":
        sections = {"[vi]": Language.VIETNAMESE, "[en]": Language.ENGLISH}
        aspects: dict[str, Aspect] = {}
        language: Language | None = None
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line in sections:
                language = sections[line]
                continue
            if language is None:
                raise InvalidInput(f"line {lineno}: keyword line before a "
                                   "[vi]/[en] section header")
            cells = line.split("\t")
            if len(cells) != 3:
                raise InvalidInput(f"line {lineno}: expected name, label, keywords")
            name, label, kw_cell = cells
            keywords = tuple(k.strip().casefold() for k in kw_cell.split(",") if k.strip())
            if not keywords:
                raise InvalidInput(f"line {lineno}: aspect {name!r} has no keywords")
            if name in aspects:
                old = aspects[name]
                aspects[name] = Aspect(
                    name=name,
                    labels={**old.labels, language: label},
                    keywords={**old.keywords, language: keywords},
                )
            else:
                aspects[name] = Aspect(name=name, labels={language: label},
                                       keywords={language: keywords})
        return cls(aspects=aspects)

    def get(self, name: str) -> Aspect:
        try:
            return self.aspects[name]
        except KeyError:
            raise UnknownAspect(f"aspect {name!r} not in catalogue "
                                f"{sorted(self.aspects)}") from None


@dataclass(frozen=True)
class AspectScore:
    aspect: str
    confidence: float
    matched_terms: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class GenerationRequest:
    source_text: str
    instruction: str = ""
    language: Language = Language.ENGLISH
    max_length: int = DEFAULT_MAX_TOKENS
    aspect: str | None = None


@dataclass(frozen=True)
class Summary:
    text: str
    backend: GenerationBackend
    prompt_used: str


def detect_aspects(docs: Sequence[SegmentedText],
                   catalogue: AspectCatalogue,
                   k: int = ASPECT_SATURATION) -> list[AspectScore]:
    """Keyword-hit scoring per aspect; confidence saturates as hits grow.

    Aspects with zero hits are omitted; ordering is confidence descending,
    ties alphabetical by aspect name."""
    token_counts: dict[str, int] = {}
    for seg in docs:
        for tok in seg.word_tokens():
            term = tok.surface.casefold()
            token_counts[term] = token_counts.get(term, 0) + 1
    scores = []
    for name in sorted(catalogue.aspects):
        aspect = catalogue.aspects[name]
        matched = []
        hits = 0
        seen = set()
        for keywords in aspect.keywords.values():
            for kw in keywords:
                if kw in seen:
                    continue
                seen.add(kw)
                count = token_counts.get(kw, 0)
                if count:
                    matched.append((kw, count))
                    hits += count
        if hits == 0:
            continue
        matched.sort(key=lambda tc: (-tc[1], tc[0]))
        scores.append(AspectScore(aspect=name, confidence=hits / (hits + k),
                                  matched_terms=tuple(matched)))
    scores.sort(key=lambda s: (-s.confidence, s.aspect))
    return scores


_LANGUAGE_DIRECTIVE = {
    Language.VIETNAMESE: "Respond in Vietnamese.",
    Language.ENGLISH: "Respond in English.",
}


def build_prompt(request: GenerationRequest, catalogue: AspectCatalogue) -> str:
    """Deterministic prompt template; identical requests give identical bytes."""
    lines = [
        "You are a careful analyst summarising survey feedback.",
        _LANGUAGE_DIRECTIVE.get(request.language, _LANGUAGE_DIRECTIVE[Language.ENGLISH]),
    ]
    if request.aspect is not None:
        aspect = catalogue.get(request.aspect)
        label_vi = aspect.labels.get(Language.VIETNAMESE, aspect.name)
        label_en = aspect.labels.get(Language.ENGLISH, aspect.name)
        keywords = aspect.keywords.get(request.language) or next(
            iter(aspect.keywords.values()))
        lines.append(
            f"Focus only on the aspect: {label_vi} / {label_en} "
            f"(keywords: {', '.join(keywords)}). Ignore unrelated content."
        )
    if request.instruction:
        lines.append(f"Instruction: {request.instruction}")
    lines.append(f"Write a concise summary of at most {request.max_length} tokens.")
    lines.append("--- TEXT START ---")
    lines.append(request.source_text)
    lines.append("--- TEXT END ---")
    return "\n".join(lines)


class GenerationClient:
    """Client for a completion endpoint:
    POST {prompt, max_tokens, temperature} -> {completion}."""

    def __init__(self, endpoint: str, timeout: float = GENERATION_TIMEOUT,
                 temperature: float = DEFAULT_TEMPERATURE, retries: int = 1):
        self.endpoint = endpoint
        self.timeout = timeout
        self.temperature = temperature
        self.retries = retries

    def complete(self, prompt: str, max_tokens: int) -> str:
        payload = {"prompt": prompt, "max_tokens": max_tokens,
                   "temperature": self.temperature}
        last_error: Exception | None = None
        for _ in range(self.retries + 1):
            try:
                response = requests.post(self.endpoint, json=payload,
                                         timeout=self.timeout)
            except requests.Timeout as exc:
                raise GenerationTimeout(f"generation endpoint timed out: {exc}") from exc
            except requests.RequestException as exc:
                last_error = exc       # transport failure: retry once
                continue
            if response.status_code != 200:
                raise BackendUnavailable(
                    f"generation endpoint returned HTTP {response.status_code}")
            try:
                return str(response.json()["completion"])
            except (ValueError, KeyError, TypeError) as exc:
                raise BackendUnavailable(
                    f"malformed generation response: {exc}") from exc
        raise BackendUnavailable(f"generation endpoint unreachable: {last_error}")


def _stub_summary(request: GenerationRequest,
                  dictionary: SegmenterDictionary) -> str:
    language = request.language if request.language in (
        Language.VIETNAMESE, Language.ENGLISH) else Language.ENGLISH
    # Blank-line blocks are separate texts so sentences without trailing
    # punctuation (common in survey cells) do not run together.
    blocks = [b.strip() for b in request.source_text.split("\n\n") if b.strip()]
    extract = summarise_extractive_corpus([(b, language) for b in blocks],
                                          STUB_SENTENCES, dictionary)
    body = " ".join(s.text for s in extract.selected)
    return f"{STUB_MARKER} {body}"


def generate_summary(request: GenerationRequest,
                     backend: GenerationBackend,
                     catalogue: AspectCatalogue,
                     *,
                     client: GenerationClient | None = None,
                     dictionary: SegmenterDictionary | None = None) -> Summary:
    """Produce an abstractive summary; prompt_used records the exact prompt
    for auditability regardless of backend."""
    prompt = build_prompt(request, catalogue)
    if backend is GenerationBackend.OFFLINE_STUB:
        if dictionary is None:
            dictionary = SegmenterDictionary.empty()
        return Summary(text=_stub_summary(request, dictionary),
                       backend=backend, prompt_used=prompt)
    if client is None:
        raise BackendUnavailable("no generation endpoint configured")
    completion = client.complete(prompt, request.max_length)
    return Summary(text=completion, backend=backend, prompt_used=prompt)


@dataclass(frozen=True)
class Thesaurus:
    entries: dict[str, tuple[tuple[str, str], ...]]   # keyword -> ((term, gloss), ...)

    @classmethod
    def load(cls, language: Language, path: str | Path | None = None) -> "Thesaurus":
        code = {"Vietnamese": "vi", "English": "en"}[language.value]
        return cls.parse(resources.read_text(path, f"thesaurus_{code}.txt"))

    @classmethod
    def parse(cls, text: str) -> "Thesaurus":
        entries: dict[str, tuple[tuple[str, str], ...]] = {}
        for line in text.splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            cells = line.split("\t")
            related = []
            for cell in cells[1:]:
                term, _, gloss = cell.partition("|")
                if term:
                    related.append((term, gloss))
            entries[cells[0].casefold()] = tuple(related)
        return cls(entries=entries)


MAX_SUGGESTIONS = 5

_SUGGEST_PROMPT = (
    "List up to {n} terms semantically related to the {language} word "
    '"{keyword}" (synonyms or close paraphrases). '
    "Answer with one term per line in the form: term\tshort gloss."
)


def suggest_related_terms(keyword: str, language: Language,
                          backend: GenerationBackend,
                          *,
                          thesaurus: Thesaurus | None = None,
                          client: GenerationClient | None = None,
                          ) -> list[tuple[str, str]]:
    """Related terms with glosses; never echoes the query keyword back."""
    if not keyword.strip():
        raise InvalidInput("keyword must be non-empty")
    key = keyword.strip().casefold()
    if backend is GenerationBackend.OFFLINE_STUB:
        if thesaurus is None:
            thesaurus = Thesaurus.load(language if language in (
                Language.VIETNAMESE, Language.ENGLISH) else Language.ENGLISH)
        related = thesaurus.entries.get(key, ())
    else:
        if client is None:
            raise BackendUnavailable("no generation endpoint configured")
        prompt = _SUGGEST_PROMPT.format(n=MAX_SUGGESTIONS, language=language.value,
                                        keyword=keyword.strip())
        completion = client.complete(prompt, max_tokens=128)
        related = []
        for line in completion.splitlines():
            term, _, gloss = line.partition("\t")
            if term.strip():
                related.append((term.strip(), gloss.strip()))
    out = []
    seen = {key}
    for term, gloss in related:
        folded = term.casefold()
        if folded in seen:
            continue
        seen.add(folded)
        out.append((term, gloss))
    return out[:MAX_SUGGESTIONS]


def aspects_json_bytes(scores: Sequence[AspectScore],
                       catalogue: AspectCatalogue) -> bytes:
    rows = []
    for s in scores:
        aspect = catalogue.aspects.get(s.aspect)
        labels = ({lang.value: label for lang, label in aspect.labels.items()}
                  if aspect else {})
        rows.append({"aspect": s.aspect, "labels": labels,
                     "confidence": s.confidence,
                     "matched_terms": [{"term": t, "count": c}
                                       for t, c in s.matched_terms]})
    return json_bytes(rows)


def summary_json_bytes(summary: Summary) -> bytes:
    return json_bytes({"text": summary.text, "backend": summary.backend.value,
                       "prompt_used": summary.prompt_used})


def suggestions_json_bytes(terms: Sequence[tuple[str, str]]) -> bytes:
    return json_bytes([{"term": t, "gloss": g} for t, g in terms])
