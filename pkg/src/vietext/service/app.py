"""HTTP JSON API over the analysis library.

Every analysis endpoint is a thin adapter: it resolves the session's
corpus snapshot, calls the corresponding library operation, and returns
that module's canonical export bytes unchanged.  Responses are therefore
byte-equal to what the library produces for the same inputs.
"""

from __future__ import annotations

import time
from typing import Callable, Union

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from pydantic import BaseModel, ConfigDict
from starlette.exceptions import HTTPException as StarletteHTTPException

from vietext import __version__, abstractive, resources
from vietext.concordance import (
    Direction,
    build_word_tree,
    expand_subtree,
    kwic,
    kwic_json_bytes,
    tree_json_bytes,
)
from vietext.errors import (
    BackendUnavailable,
    ConfigError,
    EmptyInput,
    GenerationTimeout,
    InvalidInput,
    InvalidThresholds,
    MixedLanguage,
    PathNotFound,
    QueryNotFound,
    SchemaError,
    UnknownAspect,
    VietextError,
)
from vietext.ingest import corpus_json_bytes, load_csv, load_direct_input, load_plain_text
from vietext.keyness import (
    ReferenceCorpus,
    WordcloudMode,
    build_frequency_table,
    payload_json_bytes,
    wordcloud_payload,
)
from vietext.langid import Language, detect_language_text
from vietext.segment.dictionary import SegmenterDictionary
from vietext.sentiment import (
    Backend,
    ExternalSentimentClient,
    Granularity,
    SentimentLexicon,
    analyse_sentiment,
    sentiment_json_bytes,
)
from vietext.service.config import ServiceConfig
from vietext.service.sessions import SessionStore
from vietext.textrank import summarise_extractive_corpus, summary_json_bytes

_ERROR_STATUS = {
    InvalidInput: 400,
    InvalidThresholds: 400,
    MixedLanguage: 400,
    EmptyInput: 400,
    UnknownAspect: 400,
    ConfigError: 400,
    QueryNotFound: 404,
    PathNotFound: 404,
    GenerationTimeout: 504,
    BackendUnavailable: 502,
    SchemaError: 502,
}


def _error_response(code: str, message: str, status: int) -> Response:
    from vietext.serialize import json_bytes
    return Response(content=json_bytes({"error": {"code": code, "message": message}}),
                    status_code=status, media_type="application/json")


class SessionNotFound(VietextError):
    pass


class PayloadTooLarge(VietextError):
    pass


class AppResources:
    """Dictionaries, lexicons, and reference lists loaded once at startup."""

    def __init__(self, config: ServiceConfig):
        paths = config.resources
        self.dictionary = SegmenterDictionary.parse(
            resources.read_text(paths.dictionary, "dictionary_vi.txt"))
        self.stopwords = {
            Language.VIETNAMESE: {w.casefold() for w in resources.load_stopwords(
                Language.VIETNAMESE, paths.stopwords_vi)},
            Language.ENGLISH: {w.casefold() for w in resources.load_stopwords(
                Language.ENGLISH, paths.stopwords_en)},
        }
        self.lexicons = {
            Language.VIETNAMESE: SentimentLexicon.load(Language.VIETNAMESE,
                                                       paths.lexicon_vi),
            Language.ENGLISH: SentimentLexicon.load(Language.ENGLISH,
                                                    paths.lexicon_en),
        }
        self.catalogue = abstractive.AspectCatalogue.load(paths.aspects)
        self.thesauri = {
            Language.VIETNAMESE: abstractive.Thesaurus.load(Language.VIETNAMESE,
                                                            paths.thesaurus_vi),
            Language.ENGLISH: abstractive.Thesaurus.load(Language.ENGLISH,
                                                         paths.thesaurus_en),
        }
        self.refcorpora = {
            Language.VIETNAMESE: ReferenceCorpus.parse(
                resources.read_text(paths.refcorpus_vi, "refcorpus_vi.txt")),
            Language.ENGLISH: ReferenceCorpus.parse(
                resources.read_text(paths.refcorpus_en, "refcorpus_en.txt")),
        }
        endpoints = config.endpoints
        self.sentiment_client = (
            ExternalSentimentClient(endpoints.classifier_url,
                                    timeout=endpoints.classifier_timeout)
            if endpoints.classifier_url else None)
        self.generation_client = (
            abstractive.GenerationClient(endpoints.generator_url,
                                         timeout=endpoints.generator_timeout)
            if endpoints.generator_url else None)


# --- request bodies ---------------------------------------------------------

class _Body(BaseModel):
    model_config = ConfigDict(extra="forbid")


class DocumentsBody(_Body):
    kind: str = "direct"                 # direct | text | csv
    content: str
    text_column: Union[str, int, None] = None


class WordcloudBody(_Body):
    mode: str = "Frequency"
    top_k: int | None = None
    stopwords: bool = True
    language: str | None = None


class KwicBody(_Body):
    query: str
    window: int | None = None
    case_sensitive: bool = False


class TreeBody(_Body):
    query: str
    direction: str = "Right"
    max_depth: int | None = None
    min_branch_count: int | None = None
    expand_path: list[str] | None = None
    additional_depth: int = 1


class SentimentBody(_Body):
    granularity: str = "PerSentence"
    backend: str = "Lexicon"
    classes: int = 5


class ExtractiveBody(_Body):
    target: Union[int, float] = 0.3


class AbstractiveBody(_Body):
    instruction: str = ""
    aspect: str | None = None
    backend: str = "OfflineStub"
    max_length: int = abstractive.DEFAULT_MAX_TOKENS


class SuggestBody(_Body):
    keyword: str
    language: str | None = None


_LANGS = {"Vietnamese": Language.VIETNAMESE, "vi": Language.VIETNAMESE,
          "English": Language.ENGLISH, "en": Language.ENGLISH}


def _parse_language(value: str | None) -> Language | None:
    if value is None:
        return None
    try:
        return _LANGS[value]
    except KeyError:
        raise InvalidInput(f"unknown language {value!r}") from None


def _parse_enum(enum_cls, value: str, what: str):
    try:
        return enum_cls(value)
    except ValueError:
        options = sorted(e.value for e in enum_cls)
        raise InvalidInput(f"unknown {what} {value!r}; expected one of {options}") from None


def create_app(config: ServiceConfig | None = None,
               clock: Callable[[], float] = time.monotonic) -> FastAPI:
    config = config or ServiceConfig()
    res = AppResources(config)
    store = SessionStore(ttl_seconds=config.limits.session_ttl_minutes * 60.0,
                         clock=clock)
    app = FastAPI(title="vietext", version=__version__, docs_url=None, redoc_url=None)
    app.state.store = store
    app.state.resources = res

    @app.exception_handler(VietextError)
    async def _vietext_error(_request: Request, exc: VietextError):
        if isinstance(exc, SessionNotFound):
            return _error_response("SessionNotFound", str(exc), 404)
        if isinstance(exc, PayloadTooLarge):
            return _error_response("PayloadTooLarge", str(exc), 413)
        status = 500
        for cls, code in _ERROR_STATUS.items():
            if isinstance(exc, cls):
                status = code
                break
        return _error_response(type(exc).__name__, str(exc), status)

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(_request: Request, exc: StarletteHTTPException):
        return _error_response("HTTPError", str(exc.detail), exc.status_code)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        return _error_response("ValidationError", str(exc.errors()), 400)

    def _session(session_id: str):
        session = store.get(session_id)
        if session is None:
            raise SessionNotFound(f"session {session_id!r} does not exist or expired")
        return session

    def _json(content: bytes) -> Response:
        return Response(content=content, media_type="application/json")

    # --- sessions ------------------------------------------------------

    @app.post("/v1/sessions")
    def create_session():
        return {"session_id": store.create().id}

    @app.get("/v1/sessions/{session_id}")
    def get_session(session_id: str):
        session = _session(session_id)
        return _json(corpus_json_bytes(session.corpus.snapshot()))

    @app.delete("/v1/sessions/{session_id}")
    def delete_session(session_id: str):
        if not store.delete(session_id):
            raise SessionNotFound(f"session {session_id!r} does not exist or expired")
        return {"deleted": True}

    @app.post("/v1/sessions/{session_id}/documents")
    def add_documents(session_id: str, body: DocumentsBody):
        session = _session(session_id)
        raw = body.content.encode("utf-8")
        if len(raw) > config.limits.max_document_bytes:
            raise PayloadTooLarge(
                f"upload of {len(raw)} bytes exceeds the per-document limit")
        if body.kind == "csv":
            if body.text_column is None:
                raise InvalidInput("CSV upload requires text_column")
            docs = load_csv(raw, body.text_column)
        elif body.kind == "text":
            docs = [load_plain_text(raw)]
        elif body.kind == "direct":
            docs = [load_direct_input(body.content)]
        else:
            raise InvalidInput(f"unknown upload kind {body.kind!r}")
        current = sum(len(d.raw_text.encode("utf-8"))
                      for d in session.corpus.snapshot().documents)
        added = sum(len(d.raw_text.encode("utf-8")) for d in docs)
        if current + added > config.limits.max_session_bytes:
            raise PayloadTooLarge("session text budget exhausted")
        stored = session.corpus.add(*docs)
        return {"documents": [
            {"id": d.id, "language": d.language.value, "source": d.source.value}
            for d in stored
        ]}

    # --- analyses ------------------------------------------------------

    @app.post("/v1/sessions/{session_id}/analyse/wordcloud")
    def analyse_wordcloud(session_id: str, body: WordcloudBody):
        session = _session(session_id)
        index = session.index(res.dictionary)
        mode = _parse_enum(WordcloudMode, body.mode, "wordcloud mode")
        language = _parse_language(body.language) or index.dominant_language()
        stopwords = res.stopwords.get(language, set()) if body.stopwords else None
        table = build_frequency_table(index.segments_for(language), stopwords)
        payload = wordcloud_payload(
            mode, table, reference=res.refcorpora.get(language),
            top_k=body.top_k or config.analysis.wordcloud_top_k,
            min_count=config.analysis.keyness_min_count)
        return _json(payload_json_bytes(payload))

    @app.post("/v1/sessions/{session_id}/analyse/kwic")
    def analyse_kwic(session_id: str, body: KwicBody):
        session = _session(session_id)
        index = session.index(res.dictionary)
        window = config.analysis.kwic_window if body.window is None else body.window
        lines = kwic(index, body.query, window=window,
                     case_sensitive=body.case_sensitive)
        return _json(kwic_json_bytes(lines))

    @app.post("/v1/sessions/{session_id}/analyse/tree")
    def analyse_tree(session_id: str, body: TreeBody):
        session = _session(session_id)
        index = session.index(res.dictionary)
        tree = build_word_tree(
            index, body.query,
            direction=_parse_enum(Direction, body.direction, "direction"),
            max_depth=body.max_depth or config.analysis.tree_max_depth,
            min_branch_count=(config.analysis.tree_min_branch_count
                              if body.min_branch_count is None
                              else body.min_branch_count))
        if body.expand_path is not None:
            node = expand_subtree(tree, body.expand_path, body.additional_depth)
            return _json(tree_json_bytes(node))
        return _json(tree_json_bytes(tree.root))

    @app.post("/v1/sessions/{session_id}/analyse/sentiment")
    def analyse_sentiment_route(session_id: str, body: SentimentBody):
        session = _session(session_id)
        docs = session.corpus.snapshot().documents
        results, distribution = analyse_sentiment(
            docs,
            granularity=_parse_enum(Granularity, body.granularity, "granularity"),
            backend=_parse_enum(Backend, body.backend, "backend"),
            dictionary=res.dictionary,
            lexicons=res.lexicons,
            thresholds=config.analysis.sentiment_thresholds,
            saturation=config.analysis.sentiment_saturation,
            client=res.sentiment_client,
        )
        return _json(sentiment_json_bytes(results, distribution, body.classes))

    @app.post("/v1/sessions/{session_id}/analyse/summary/extractive")
    def analyse_extractive(session_id: str, body: ExtractiveBody):
        session = _session(session_id)
        docs = session.corpus.snapshot().documents
        texts = [(d.raw_text, d.language if d.language in res.stopwords
                  else Language.ENGLISH) for d in docs]
        summary = summarise_extractive_corpus(texts, body.target, res.dictionary)
        return _json(summary_json_bytes(summary))

    @app.post("/v1/sessions/{session_id}/analyse/aspects")
    def analyse_aspects(session_id: str):
        session = _session(session_id)
        index = session.index(res.dictionary)
        segments = [d.segmented for d in index.documents()]
        scores = abstractive.detect_aspects(segments, res.catalogue)
        return _json(abstractive.aspects_json_bytes(scores, res.catalogue))

    @app.post("/v1/sessions/{session_id}/analyse/summary/abstractive")
    def analyse_abstractive(session_id: str, body: AbstractiveBody):
        session = _session(session_id)
        index = session.index(res.dictionary)
        docs = index.snapshot.documents
        if not docs:
            raise EmptyInput("session corpus is empty")
        source = "\n\n".join(d.raw_text for d in docs)
        request = abstractive.GenerationRequest(
            source_text=source, instruction=body.instruction,
            language=index.dominant_language(), max_length=body.max_length,
            aspect=body.aspect)
        summary = abstractive.generate_summary(
            request, _parse_enum(abstractive.GenerationBackend, body.backend, "backend"),
            res.catalogue, client=res.generation_client, dictionary=res.dictionary)
        return _json(abstractive.summary_json_bytes(summary))

    @app.post("/v1/sessions/{session_id}/analyse/suggest")
    def analyse_suggest(session_id: str, body: SuggestBody):
        _session(session_id)   # suggestions need a live session, not its text
        language = _parse_language(body.language)
        if language is None:
            detected = detect_language_text(body.keyword)
            language = detected if detected in res.thesauri else Language.ENGLISH
        backend = (abstractive.GenerationBackend.EXTERNAL_LLM
                   if res.generation_client is not None
                   else abstractive.GenerationBackend.OFFLINE_STUB)
        terms = abstractive.suggest_related_terms(
            body.keyword, language, backend,
            thesaurus=res.thesauri[language], client=res.generation_client)
        return _json(abstractive.suggestions_json_bytes(terms))

    # --- diagnostics -----------------------------------------------------

    @app.get("/v1/diagnostics")
    def diagnostics():
        return {"live_sessions": store.live_count(), "version": __version__}

    return app
