"""Corpus ingestion: plain-text and CSV loading, language detection,
an in-memory corpus store with immutable snapshots, and JSON export.

All ingested text is normalised to NFC before anything else sees it;
Vietnamese diacritics have two common byte encodings and the segmentation
dictionary assumes the composed form.
"""

from __future__ import annotations

import csv
import io
import threading
import unicodedata
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum

from vietext.errors import ColumnNotFound, CsvParseError, DecodeError
from vietext.langid import Language, detect_language_text
from vietext.serialize import json_bytes


class Source(str, Enum):
    PLAIN_TEXT_FILE = "PlainTextFile"
    CSV_CELL = "CsvCell"
    DIRECT_INPUT = "DirectInput"


@dataclass(frozen=True)
class Document:
    raw_text: str
    language: Language = Language.UNKNOWN
    source: Source = Source.DIRECT_INPUT
    column_label: str | None = None
    id: str | None = None


def _normalise(text: str) -> str:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return unicodedata.normalize("NFC", text)


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8-sig")  # strips a BOM if present
    except UnicodeDecodeError as exc:
        raise DecodeError(f"input is not valid UTF-8: {exc}") from exc


def load_plain_text(data: bytes) -> Document:
    """Decode a UTF-8 text file into a single document.

    Raises DecodeError on invalid UTF-8.  Line endings are normalised
    to LF and a leading byte-order mark is dropped.
    """
    return Document(raw_text=_normalise(_decode(data)), source=Source.PLAIN_TEXT_FILE)


def load_direct_input(text: str) -> Document:
    return Document(raw_text=_normalise(text), source=Source.DIRECT_INPUT)


def load_csv(data: bytes, text_column: str | int) -> list[Document]:
    """Extract one document per non-empty cell of the selected column.

    The input must be RFC-4180 CSV with a header row; `text_column`
    selects by header name or zero-based index.  Row order is preserved.
    """
    text = _decode(data)
    reader = csv.reader(io.StringIO(text), strict=True)
    try:
        rows = list(reader)
    except csv.Error as exc:
        raise CsvParseError(f"malformed CSV: {exc}") from exc
    if not rows:
        raise ColumnNotFound("CSV input has no header row")
    header = rows[0]
    if isinstance(text_column, int):
        if not 0 <= text_column < len(header):
            raise ColumnNotFound(f"column index {text_column} out of range")
        index = text_column
        label = header[index]
    else:
        try:
            index = header.index(text_column)
        except ValueError:
            raise ColumnNotFound(
                f"column {text_column!r} not in header {header!r}") from None
        label = text_column
    documents = []
    for row in rows[1:]:
        if index >= len(row):
            continue
        cell = row[index]
        if not cell.strip():
            continue
        documents.append(Document(raw_text=_normalise(cell),
                                  source=Source.CSV_CELL,
                                  column_label=label))
    return documents


def detect_language(doc: Document) -> Language:
    """Deterministic per-document language decision (see vietext.langid)."""
    return detect_language_text(doc.raw_text)


@dataclass(frozen=True)
class CorpusSnapshot:
    """Immutable view of a corpus; analysis operations consume these."""

    documents: tuple[Document, ...]
    created_at: datetime

    def __len__(self) -> int:
        return len(self.documents)

    def document_ids(self) -> list[str]:
        return [d.id for d in self.documents if d.id is not None]


class Corpus:
    """In-memory document store: concurrent readers, exclusive writers."""

    def __init__(self) -> None:
        self._documents: list[Document] = []
        self._lock = threading.RLock()
        self._next_id = 1
        self._stats_cache: dict[Language, int] | None = None
        self.created_at = datetime.now(timezone.utc)

    def add(self, *docs: Document) -> list[Document]:
        """Assign ids, run language detection, and append. Returns the stored docs."""
        with self._lock:
            stored = []
            for doc in docs:
                language = doc.language
                if language is Language.UNKNOWN:
                    language = detect_language(doc)
                stored.append(replace(doc, id=f"d{self._next_id}", language=language))
                self._next_id += 1
            self._documents.extend(stored)
            self._stats_cache = None
            return stored

    def snapshot(self) -> CorpusSnapshot:
        with self._lock:
            return CorpusSnapshot(documents=tuple(self._documents),
                                  created_at=datetime.now(timezone.utc))

    def __len__(self) -> int:
        with self._lock:
            return len(self._documents)

    def token_counts(self) -> dict[Language, int]:
        """Whitespace-token counts per language, cached until the next write."""
        with self._lock:
            if self._stats_cache is None:
                self._stats_cache = self._recompute_stats(self._documents)
            return dict(self._stats_cache)

    @staticmethod
    def _recompute_stats(documents: list[Document]) -> dict[Language, int]:
        stats: dict[Language, int] = {}
        for doc in documents:
            stats[doc.language] = stats.get(doc.language, 0) + len(doc.raw_text.split())
        return stats


def corpus_json_bytes(snapshot: CorpusSnapshot) -> bytes:
    """Stable-field-order JSON export: {documents:[{id,language,source,text}]}."""
    return json_bytes({
        "documents": [
            {
                "id": d.id,
                "language": d.language.value,
                "source": d.source.value,
                "text": d.raw_text,
            }
            for d in snapshot.documents
        ]
    })
