"""Canonical byte-level serialisation.

Every export the HTTP service returns verbatim goes through these helpers,
so byte-for-byte equality between library exports and API responses is a
matter of calling the same function.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence


def json_bytes(obj: Any) -> bytes:
    """Compact UTF-8 JSON with stable (insertion) key order."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def csv_bytes(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> bytes:
    """RFC-4180 CSV (CRLF line endings, minimal quoting)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow(list(row))
    return buf.getvalue().encode("utf-8")
