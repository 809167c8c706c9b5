"""Command-line interface.

Exit codes: 0 success, 1 runtime error (bad input file, unreachable
backend, invalid config), 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from vietext import __version__, abstractive, resources
from vietext.bench import (
    GoldCorpus,
    emit_table,
    make_segmenter,
    run_f1_benchmark,
    run_throughput_benchmark,
)
from vietext.concordance import (
    Direction,
    build_word_tree,
    export_concordance,
    kwic,
    kwic_json_bytes,
    tree_json_bytes,
)
from vietext.corpusindex import SegmentedCorpus
from vietext.errors import InvalidInput, VietextError
from vietext.ingest import Corpus, load_csv, load_plain_text
from vietext.keyness import (
    ReferenceCorpus,
    WordcloudMode,
    build_frequency_table,
    load_stopword_set,
    payload_csv_bytes,
    payload_json_bytes,
    wordcloud_payload,
)
from vietext.langid import Language
from vietext.segment import BpeModel, SegmenterDictionary, segment_hybrid, segment_words
from vietext.sentiment import (
    Backend,
    ExternalSentimentClient,
    Granularity,
    analyse_sentiment,
    sentiment_json_bytes,
)
from vietext.service.config import config_schema_json, load_config
from vietext.textrank import summarise_extractive_corpus, summary_json_bytes

CONFIG_ENV_VAR = "VIETEXT_CONFIG"

_LANGS = {"vi": Language.VIETNAMESE, "en": Language.ENGLISH}


def _load_dictionary(path: str | None) -> SegmenterDictionary:
    if path:
        return SegmenterDictionary.load(path)
    return SegmenterDictionary.parse(resources.data_text("dictionary_vi.txt"))


def _load_corpus(paths: list[str], csv_column: str | None) -> Corpus:
    corpus = Corpus()
    for path in paths:
        data = Path(path).read_bytes()
        if path.endswith(".csv"):
            if csv_column is None:
                raise InvalidInput(f"{path}: CSV input needs --csv-column")
            corpus.add(*load_csv(data, csv_column))
        else:
            corpus.add(load_plain_text(data))
    return corpus


def _write_out(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        if not data.endswith(b"\n"):
            sys.stdout.buffer.write(b"\n")
        sys.stdout.buffer.flush()


def _cmd_segment(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    import unicodedata
    text = unicodedata.normalize("NFC", text)
    language = _LANGS[args.lang]
    dictionary = _load_dictionary(args.dict)
    if args.bpe:
        seg = segment_hybrid(text, language, dictionary, BpeModel.load(args.bpe))
    else:
        seg = segment_words(text, language, dictionary)
    lines = []
    for tok in seg.tokens:
        kind = "word" if tok.is_word else "punct"
        cells = [tok.surface, str(tok.span[0]), str(tok.span[1]), kind]
        if tok.subwords:
            cells.append(" ".join(tok.subwords))
        lines.append("\t".join(cells))
    _write_out(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_keyness(args) -> int:
    corpus = _load_corpus(args.inputs, args.csv_column)
    language = _LANGS[args.lang]
    dictionary = _load_dictionary(args.dict)
    index = SegmentedCorpus(corpus.snapshot(), dictionary)
    stopwords = None if args.keep_stopwords else load_stopword_set(language)
    table = build_frequency_table(index.segments_for(language), stopwords)
    mode = WordcloudMode(args.mode)
    reference = None
    if mode is not WordcloudMode.FREQUENCY:
        reference = (ReferenceCorpus.load(args.reference) if args.reference
                     else ReferenceCorpus.load(language=language))
    payload = wordcloud_payload(mode, table, reference=reference,
                                top_k=args.top_k, min_count=args.min_count)
    exporter = payload_csv_bytes if args.format == "csv" else payload_json_bytes
    _write_out(exporter(payload), args.out)
    return 0


def _cmd_summarise(args) -> int:
    corpus = _load_corpus(args.inputs, args.csv_column)
    docs = corpus.snapshot().documents
    dictionary = _load_dictionary(args.dict)
    if args.method == "extractive":
        target: float | int = args.target
        if target == int(target) and target >= 1:
            target = int(target)
        texts = [(d.raw_text, d.language if d.language in _LANGS.values()
                  else Language.ENGLISH) for d in docs]
        summary = summarise_extractive_corpus(texts, target, dictionary)
        _write_out(summary_json_bytes(summary), args.out)
        return 0
    source = "\n\n".join(d.raw_text for d in docs)
    langs = [d.language for d in docs if d.language in _LANGS.values()]
    language = langs[0] if langs else Language.ENGLISH
    request = abstractive.GenerationRequest(
        source_text=source, instruction=args.instruction or "",
        language=language, aspect=args.aspect or None)
    backend = abstractive.GenerationBackend(args.backend)
    client = (abstractive.GenerationClient(args.endpoint)
              if args.endpoint else None)
    summary = abstractive.generate_summary(
        request, backend, abstractive.AspectCatalogue.load(),
        client=client, dictionary=dictionary)
    _write_out(abstractive.summary_json_bytes(summary), args.out)
    return 0


def _cmd_sentiment(args) -> int:
    corpus = _load_corpus(args.inputs, args.csv_column)
    dictionary = _load_dictionary(args.dict)
    client = ExternalSentimentClient(args.endpoint) if args.endpoint else None
    results, distribution = analyse_sentiment(
        corpus.snapshot().documents,
        granularity=Granularity(args.granularity),
        backend=Backend(args.backend),
        dictionary=dictionary,
        client=client,
    )
    _write_out(sentiment_json_bytes(results, distribution, args.classes), args.out)
    return 0


def _cmd_kwic(args) -> int:
    corpus = _load_corpus(args.inputs, args.csv_column)
    index = SegmentedCorpus(corpus.snapshot(), _load_dictionary(args.dict))
    lines = kwic(index, args.query, window=args.window,
                 case_sensitive=args.case_sensitive)
    exporter = kwic_json_bytes if args.format == "json" else export_concordance
    _write_out(exporter(lines), args.out)
    return 0


def _cmd_tree(args) -> int:
    corpus = _load_corpus(args.inputs, args.csv_column)
    index = SegmentedCorpus(corpus.snapshot(), _load_dictionary(args.dict))
    tree = build_word_tree(index, args.query, direction=Direction(args.direction),
                           max_depth=args.max_depth,
                           min_branch_count=args.min_branch_count)
    _write_out(tree_json_bytes(tree.root), args.out)
    return 0


def _bench_segmenter(args, training_sentences):
    dictionary = _load_dictionary(args.dict) if args.segmenter != "whitespace" else None
    model = BpeModel.load(args.bpe) if args.bpe else None
    return make_segmenter(args.segmenter, dictionary=dictionary, model=model,
                          training_sentences=training_sentences)


def _cmd_bench_f1(args) -> int:
    gold = GoldCorpus.load(args.gold)
    segmenter = _bench_segmenter(args, [raw for raw, _ in gold.sentences])
    report = run_f1_benchmark(segmenter, gold, system=args.segmenter)
    _write_out(emit_table([report], format=args.format), args.out)
    return 0


def _cmd_bench_speed(args) -> int:
    sentences = [line for line in
                 Path(args.corpus).read_text(encoding="utf-8").splitlines()
                 if line.strip()]
    segmenter = _bench_segmenter(args, sentences)
    report = run_throughput_benchmark(segmenter, sentences, warmup=args.warmup,
                                      repeats=args.repeats, system=args.segmenter)
    _write_out(emit_table([report], format=args.format), args.out)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from vietext.service.app import create_app

    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    config = load_config(config_path)
    app = create_app(config)
    host = args.host or config.server.host
    port = args.port or config.server.port
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def _cmd_config_schema(args) -> int:
    _write_out(config_schema_json().encode("utf-8"), args.out)
    return 0


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("inputs", nargs="+", metavar="INPUT",
                   help="text or CSV files to analyse")
    p.add_argument("--csv-column", help="column selector for CSV inputs")
    p.add_argument("--dict", help="segmentation dictionary file (default: bundled)")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vietext",
        description="Bilingual Vietnamese/English text analytics")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment a text file, one token per line")
    p.add_argument("input", metavar="INPUT")
    p.add_argument("--lang", choices=list(_LANGS), required=True)
    p.add_argument("--dict")
    p.add_argument("--bpe", help="BPE model file; adds subword column")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_segment)

    p = sub.add_parser("keyness", help="frequency / log-likelihood / keyness payloads")
    _add_corpus_args(p)
    p.add_argument("--lang", choices=list(_LANGS), required=True)
    p.add_argument("--mode", choices=[m.value for m in WordcloudMode],
                   default="Frequency")
    p.add_argument("--reference", help="reference corpus file (default: bundled)")
    p.add_argument("--top-k", type=int, default=50)
    p.add_argument("--min-count", type=int, default=2)
    p.add_argument("--keep-stopwords", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_keyness)

    p = sub.add_parser("summarise", help="extractive or abstractive summary")
    _add_corpus_args(p)
    p.add_argument("--method", choices=["extractive", "abstractive"],
                   default="extractive")
    p.add_argument("--target", type=float, default=0.3,
                   help="fraction in (0,1] or a sentence count")
    p.add_argument("--instruction", help="abstractive prompt instruction")
    p.add_argument("--aspect", help="abstractive aspect name")
    p.add_argument("--backend", choices=["OfflineStub", "ExternalLLM"],
                   default="OfflineStub")
    p.add_argument("--endpoint", help="generation endpoint URL")
    p.set_defaults(func=_cmd_summarise)

    p = sub.add_parser("sentiment", help="sentiment labels and distribution")
    _add_corpus_args(p)
    p.add_argument("--granularity", choices=[g.value for g in Granularity],
                   default="PerSentence")
    p.add_argument("--backend", choices=[b.value for b in Backend],
                   default="Lexicon")
    p.add_argument("--classes", type=int, choices=[3, 5], default=5)
    p.add_argument("--endpoint", help="external classifier URL")
    p.set_defaults(func=_cmd_sentiment)

    p = sub.add_parser("kwic", help="keyword-in-context concordance")
    _add_corpus_args(p)
    p.add_argument("--query", required=True)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--case-sensitive", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_kwic)

    p = sub.add_parser("tree", help="word tree as nested JSON")
    _add_corpus_args(p)
    p.add_argument("--query", required=True)
    p.add_argument("--direction", choices=[d.value for d in Direction],
                   default="Right")
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--min-branch-count", type=int, default=1)
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("bench", help="segmentation benchmarks")
    bench_sub = p.add_subparsers(dest="bench_command", required=True)

    b = bench_sub.add_parser("f1", help="F1 against a gold file")
    b.add_argument("--gold", required=True)
    b.add_argument("--segmenter", choices=["maxmatch", "hybrid", "whitespace"],
                   default="maxmatch")
    b.add_argument("--dict")
    b.add_argument("--bpe")
    b.add_argument("--format", choices=["md", "csv"], default="md")
    b.add_argument("--out")
    b.set_defaults(func=_cmd_bench_f1)

    b = bench_sub.add_parser("speed", help="segmentation throughput")
    b.add_argument("--corpus", required=True, help="one sentence per line")
    b.add_argument("--segmenter", choices=["maxmatch", "hybrid", "whitespace"],
                   default="hybrid")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--warmup", type=int, default=2)
    b.add_argument("--dict")
    b.add_argument("--bpe")
    b.add_argument("--format", choices=["md", "csv"], default="md")
    b.add_argument("--out")
    b.set_defaults(func=_cmd_bench_speed)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--config", help=f"TOML config (or ${CONFIG_ENV_VAR})")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("config-schema", help="print the config JSON schema")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_config_schema)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VietextError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
