"""Session-scoped corpora with idle expiry.

Sessions live only in memory; expiry (or an explicit delete) drops every
reference to the session's text, honouring the no-storage-beyond-session
rule.  The store sweeps lazily on each access, so no background thread
is needed and tests can drive time through an injected clock.
"""

from __future__ import annotations

import threading
import time
import uuid
from typing import Callable

from vietext.corpusindex import SegmentedCorpus
from vietext.ingest import Corpus
from vietext.segment.dictionary import SegmenterDictionary


class SessionState:
    def __init__(self, session_id: str, created_at: float):
        self.id = session_id
        self.corpus = Corpus()
        self.created_at = created_at
        self.last_used = created_at
        self._index: SegmentedCorpus | None = None
        self._index_size = -1
        self._lock = threading.RLock()

    def index(self, dictionary: SegmenterDictionary) -> SegmentedCorpus:
        """Segmentation cache for the current corpus state; rebuilt after uploads."""
        with self._lock:
            size = len(self.corpus)
            if self._index is None or self._index_size != size:
                self._index = SegmentedCorpus(self.corpus.snapshot(), dictionary)
                self._index_size = size
            return self._index


class SessionStore:
    def __init__(self, ttl_seconds: float,
                 clock: Callable[[], float] = time.monotonic):
        self.ttl = ttl_seconds
        self._clock = clock
        self._sessions: dict[str, SessionState] = {}
        self._lock = threading.RLock()

    def _sweep(self) -> None:
        now = self._clock()
        expired = [sid for sid, s in self._sessions.items()
                   if now - s.last_used > self.ttl]
        for sid in expired:
            del self._sessions[sid]

    def create(self) -> SessionState:
        with self._lock:
            self._sweep()
            session = SessionState(uuid.uuid4().hex, self._clock())
            self._sessions[session.id] = session
            return session

    def get(self, session_id: str) -> SessionState | None:
        with self._lock:
            self._sweep()
            session = self._sessions.get(session_id)
            if session is not None:
                session.last_used = self._clock()
            return session

    def delete(self, session_id: str) -> bool:
        with self._lock:
            self._sweep()
            return self._sessions.pop(session_id, None) is not None

    def live_count(self) -> int:
        with self._lock:
            self._sweep()
            return len(self._sessions)
