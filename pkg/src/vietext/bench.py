"""Benchmark harness: segmentation F1 against gold files and throughput.

Gold file format: one sentence per line, words separated by `|`,
syllables within a word by single spaces ("học sinh|đi|học").  The raw
sentence is the flattened syllables joined by single spaces, so every
gold line tiles its own text by construction; the loader still validates
the fields.

Timing deliberately excludes input loading: the corpus is materialised
in memory before the clock starts.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from vietext.errors import GoldFormatError, InvalidInput
from vietext.langid import Language
from vietext.segment.bpe import BpeModel
from vietext.segment.dictionary import SegmenterDictionary
from vietext.segment.f1 import prf_from_counts, span_match_counts
from vietext.segment.hybrid import segment_hybrid, train_corpus_bpe
from vietext.segment.maxmatch import segment_vietnamese
from vietext.segment.tokens import SegmentedText, Token, scan_atoms
from vietext.serialize import csv_bytes

Segmenter = Callable[[str], SegmentedText]

SEGMENTER_KINDS = ("maxmatch", "hybrid", "whitespace")


@dataclass(frozen=True)
class GoldCorpus:
    sentences: tuple[tuple[str, tuple[str, ...]], ...]   # (raw text, gold words)
    name: str

    @classmethod
    def load(cls, path: str | Path) -> "GoldCorpus":
        return cls.parse(Path(path).read_text(encoding="utf-8"), name=Path(path).stem)

    @classmethod
    def parse(cls, text: str, name: str = "gold") -> "GoldCorpus":
        sentences = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words = tuple(line.split("|"))
            for word in words:
                if not word or word != " ".join(word.split(" ")) or word.strip() != word:
                    raise GoldFormatError(
                        f"line {lineno}: malformed word {word!r}")
            raw = " ".join(s for w in words for s in w.split(" "))
            sentences.append((raw, words))
        return cls(sentences=tuple(sentences), name=name)


@dataclass(frozen=True)
class BenchReport:
    system: str
    f1: float | None = None            # percent
    precision: float | None = None     # percent
    recall: float | None = None        # percent
    throughput: float | None = None
    unit: str = "sentences/sec"
    wall_time: float | None = None     # seconds (median pass for speed runs)
    input_size: int = 0


def whitespace_segment(text: str) -> SegmentedText:
    """Baseline: every syllable/digit/punctuation atom is its own token."""
    tokens = tuple(
        Token(surface=s, span=(start, end), is_word=(kind == 0))
        for kind, s, start, end in scan_atoms(text)
    )
    return SegmentedText(tokens=tokens, language=Language.VIETNAMESE, source=text)


def make_segmenter(kind: str, dictionary: SegmenterDictionary | None = None,
                   model: BpeModel | None = None,
                   training_sentences: Sequence[str] | None = None,
                   num_merges: int = 2000) -> Segmenter:
    """Build a segmentation callable for one of the benchmarkable systems.

    `hybrid` without an explicit BPE model trains one from
    training_sentences (word tokens of the maxmatch segmentation); that
    happens here, in configuration, never inside a timed region.
    """
    if kind == "whitespace":
        return whitespace_segment
    if dictionary is None:
        raise InvalidInput(f"segmenter {kind!r} requires a dictionary")
    if kind == "maxmatch":
        return lambda text: segment_vietnamese(text, dictionary)
    if kind == "hybrid":
        if model is None:
            if not training_sentences:
                raise InvalidInput("hybrid needs a BPE model or training sentences")
            segmented = [segment_vietnamese(s, dictionary) for s in training_sentences]
            model = train_corpus_bpe(segmented, num_merges=num_merges)
        return lambda text: segment_hybrid(text, Language.VIETNAMESE, dictionary, model)
    raise InvalidInput(f"unknown segmenter kind {kind!r}; choose from {SEGMENTER_KINDS}")


def run_f1_benchmark(segmenter: Segmenter, gold: GoldCorpus,
                     system: str = "segmenter") -> BenchReport:
    """Micro-averaged boundary-span F1 over the gold corpus."""
    start = time.perf_counter()
    matched = predicted = gold_total = 0
    for raw, words in gold.sentences:
        seg = segmenter(raw)
        m, p, g = span_match_counts(seg.surfaces(), list(words))
        matched += m
        predicted += p
        gold_total += g
    wall = time.perf_counter() - start
    precision, recall, f1 = prf_from_counts(matched, predicted, gold_total)
    return BenchReport(system=system, f1=100.0 * f1, precision=100.0 * precision,
                       recall=100.0 * recall, wall_time=wall,
                       input_size=len(gold.sentences))


def run_throughput_benchmark(segmenter: Segmenter,
                             corpus: Sequence[str] | Callable[[], Sequence[str]],
                             warmup: int = 2, repeats: int = 5,
                             system: str = "segmenter",
                             timer: Callable[[], float] = time.perf_counter,
                             ) -> BenchReport:
    """Median-pass throughput over `repeats` timed passes.

    `corpus` may be a loader callable; it runs (and the result is held in
    memory) before any timing, so I/O never leaks into the measurement.
    """
    if repeats < 1:
        raise InvalidInput("repeats must be >= 1")
    sentences = list(corpus() if callable(corpus) else corpus)
    for _ in range(warmup):
        for sentence in sentences:
            segmenter(sentence)
    durations = []
    for _ in range(repeats):
        t0 = timer()
        for sentence in sentences:
            segmenter(sentence)
        durations.append(timer() - t0)
    median = statistics.median(durations)
    throughput = len(sentences) / median if median > 0 else float("inf")
    return BenchReport(system=system, throughput=throughput,
                       unit="sentences/sec", wall_time=median,
                       input_size=len(sentences))


def _fmt(value: float | None, digits: int = 1) -> str:
    return "" if value is None else f"{value:.{digits}f}"


def _sorted_reports(reports: Sequence[BenchReport]) -> list[BenchReport]:
    return sorted(reports, key=lambda r: (
        -(r.f1 if r.f1 is not None else float("-inf")),
        -(r.throughput if r.throughput is not None else float("-inf")),
        r.system,
    ))


def emit_table(reports: Sequence[BenchReport], format: str = "md") -> bytes:
    """Render reports as Markdown or CSV, ordered by F1 descending."""
    header = ["System", "F1 (%)", "Precision (%)", "Recall (%)",
              "Speed", "Unit", "Wall time (s)", "Inputs"]
    rows = [[r.system, _fmt(r.f1), _fmt(r.precision), _fmt(r.recall),
             _fmt(r.throughput), r.unit if r.throughput is not None else "",
             _fmt(r.wall_time, 4), str(r.input_size)]
            for r in _sorted_reports(reports)]
    if format == "csv":
        return csv_bytes(header, rows)
    if format != "md":
        raise InvalidInput("format must be 'md' or 'csv'")
    widths = [max(len(header[i]), *(len(row[i]) for row in rows), 1) if rows
              else len(header[i]) for i in range(len(header))]
    lines = [
        "| " + " | ".join(h.ljust(widths[i]) for i, h in enumerate(header)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(c.ljust(widths[i])
                                       for i, c in enumerate(row)) + " |")
    return ("\n".join(lines) + "\n").encode("utf-8")
