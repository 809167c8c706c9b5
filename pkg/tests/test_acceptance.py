"""Acceptance suite: one test per criterion, each printing a pass/fail
line and enforcing its runtime budget.  Run with `pytest -s tests/test_acceptance.py`
to watch the lines appear; without -s they show in captured output."""

import json
import random
import threading
import time
from contextlib import contextmanager
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest
from fastapi.testclient import TestClient

from oracles import (
    bpe_train_bruteforce,
    f1_span_sets,
    log_likelihood_contingency,
    textrank_fixed_point,
    tree_counts_bruteforce,
)
from vietext.bench import GoldCorpus, make_segmenter, run_f1_benchmark, run_throughput_benchmark
from vietext.cli import main as cli_main
from vietext.concordance import Direction, WordTreeNode, build_word_tree, kwic
from vietext.corpusindex import SegmentedCorpus
from vietext.errors import BackendUnavailable, QueryNotFound, SchemaError
from vietext.ingest import Corpus, Document
from vietext.keyness import log_likelihood
from vietext.langid import Language
from vietext.resources import data_text
from vietext.segment import SegmenterDictionary, bpe_train, strip_marker
from vietext.segment.bpe import BpeModel, bpe_encode
from vietext.sentiment import (
    ExternalSentimentClient,
    SentimentDistribution,
    SentimentLexicon,
    SentimentResult,
    classify,
    external_classify,
    label5_rank,
    project_label,
    score_word_sequence,
)
from vietext.textrank import (
    MAX_ITERATIONS,
    Sentence,
    SentenceGraph,
    build_sentence_graph,
    textrank_iterate,
)


@contextmanager
def criterion(name: str, budget_seconds: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name} ({time.perf_counter() - start:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    print(f"[PASS] {name} ({elapsed:.2f}s, budget {budget_seconds:.0f}s)")
    assert elapsed < budget_seconds, f"{name} exceeded its runtime budget"


@pytest.fixture(scope="module")
def gold() -> GoldCorpus:
    return GoldCorpus.parse(data_text("gold_vi_200.txt"))


@pytest.fixture(scope="module")
def dictionary() -> SegmenterDictionary:
    return SegmenterDictionary.parse(data_text("dictionary_vi.txt"))


def test_segmentation_oracle_suite(gold, dictionary, capsys, tmp_path):
    with criterion("segmentation oracle suite", 5.0):
        # full dictionary through the real CLI: F1 must print as 100.0
        gold_path = tmp_path / "gold.txt"
        gold_path.write_text(data_text("gold_vi_200.txt"), encoding="utf-8")
        assert cli_main(["bench", "f1", "--gold", str(gold_path),
                         "--segmenter", "maxmatch"]) == 0
        out = capsys.readouterr().out
        assert "| 100.0" in out

        # remove every 10th entry, then harness F1 must match the
        # independent span-set oracle to within 0.05 percentage points
        entries = sorted(dictionary.entries)
        kept = [e for i, e in enumerate(entries) if i % 10 != 0]
        reduced = SegmenterDictionary.from_words(kept)
        segmenter = make_segmenter("maxmatch", reduced)
        report = run_f1_benchmark(segmenter, gold)
        pairs = [(segmenter(raw).surfaces(), list(words))
                 for raw, words in gold.sentences]
        _, _, oracle_f1 = f1_span_sets(pairs)
        assert report.f1 < 100.0    # the reduction must actually bite
        assert abs(report.f1 - 100.0 * oracle_f1) < 0.05


def test_bpe_correctness():
    with criterion("BPE merge-list and losslessness", 10.0):
        corpus = ["low"] * 5 + ["lower"] * 2 + ["newest"] * 6 + ["widest"] * 3
        for num_merges in (1, 5, 10):
            model = bpe_train(corpus, num_merges)
            expected = bpe_train_bruteforce(corpus, num_merges)
            mine = "\n".join(f"{a} {b}" for a, b in model.merges).encode()
            theirs = "\n".join(f"{a} {b}" for a, b in expected).encode()
            assert mine == theirs

        model = bpe_train(corpus, 10)
        rng = random.Random(20240915)
        for _ in range(10000):
            length = rng.randint(1, 16)
            word = ""
            while len(word) < length:
                ch = chr(rng.randint(33, 0xFFFF))
                if not ch.isspace() and not (0xD800 <= ord(ch) <= 0xDFFF):
                    word += ch
            assert strip_marker(bpe_encode(word, model)) == word


def test_log_likelihood_oracle():
    with criterion("log-likelihood contingency oracle", 5.0):
        n1 = n2 = 1000
        for a in range(51):
            for b in range(51):
                if a + b == 0:
                    continue
                e1, e2, ll = log_likelihood(a, b, n1, n2)
                oe1, oe2, oll = log_likelihood_contingency(a, b, n1, n2)
                assert abs(ll - oll) < 1e-9
                assert abs(e1 - oe1) < 1e-9 and abs(e2 - oe2) < 1e-9

        rng = random.Random(4242)
        for _ in range(1000):
            b = rng.randint(1, 500)
            n2 = b * rng.randint(1, 40)
            k = rng.randint(1, 25)
            a, n1 = k * b, k * n2
            assert log_likelihood(a, b, n1, n2)[2] == 0.0  # proportional -> 0
            # and perturbing the study count breaks the equality
            if a + 1 <= n1:
                assert log_likelihood(a + 1, b, n1, n2)[2] > 0.0


def _random_graph(rng: random.Random, n: int) -> list[list[float]]:
    w = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = round(rng.uniform(0, 2), 4)
            w[i][j] = w[j][i] = v
    return w


def test_textrank_oracle_and_properties():
    with criterion("TextRank fixed-point oracle", 10.0):
        import numpy as np

        rng = random.Random(777)
        for _ in range(10):
            weights = _random_graph(rng, 3)
            graph = SentenceGraph(
                sentences=tuple(Sentence(text=f"s{i}", content_words=frozenset(),
                                         raw_length=2) for i in range(3)),
                weights=np.asarray(weights))
            scores, iterations = textrank_iterate(graph)
            assert iterations < MAX_ITERATIONS
            for mine, ref in zip(scores, textrank_fixed_point(weights)):
                assert abs(mine - ref) < 1e-3

        # permutation consistency over 100 random documents
        vocab = ["sông", "núi", "trời", "biển", "cây", "hoa", "chim", "cá"]
        for _ in range(100):
            n = rng.randint(2, 8)
            doc = [Sentence(text=f"s{i}",
                            content_words=frozenset(rng.sample(vocab,
                                                               rng.randint(1, 5))),
                            raw_length=rng.randint(2, 9))
                   for i in range(n)]
            base, it1 = textrank_iterate(build_sentence_graph(doc))
            perm = list(range(n))
            rng.shuffle(perm)
            shuffled, it2 = textrank_iterate(
                build_sentence_graph([doc[p] for p in perm]))
            assert it1 < MAX_ITERATIONS and it2 < MAX_ITERATIONS
            for new_pos, old_pos in enumerate(perm):
                assert abs(shuffled[new_pos] - base[old_pos]) < 1e-9


def _collect_counts(node: WordTreeNode, prefix=()):
    out = {prefix: node.count}
    for child in node.children:
        out.update(_collect_counts(child, prefix + (child.token,)))
    return out


def test_concordance_wordtree_conservation():
    with criterion("concordance/word-tree conservation", 10.0):
        rng = random.Random(31337)
        vocab = ["an", "bo", "ce", "di", "eo"]
        for _ in range(50):
            sentences = [[rng.choice(vocab) for _ in range(rng.randint(1, 10))]
                         for _ in range(rng.randint(1, 6))]
            corpus = Corpus()
            corpus.add(*[Document(raw_text=" ".join(s), language=Language.ENGLISH)
                         for s in sentences])
            index = SegmentedCorpus(corpus.snapshot(), SegmenterDictionary.empty())
            query = rng.choice(vocab)
            depth = rng.randint(1, 4)
            direction = rng.choice([Direction.RIGHT, Direction.LEFT])

            match_count = len(kwic(index, query, window=0))
            expected = tree_counts_bruteforce(sentences, [query],
                                              direction.value.lower(), depth)
            if match_count == 0:
                with pytest.raises(QueryNotFound):
                    build_word_tree(index, query, direction, depth)
                continue
            tree = build_word_tree(index, query, direction, depth)
            assert tree.root.count == match_count          # conservation
            assert _collect_counts(tree.root) == expected  # per-node counts

            # window-truncation consistency
            w = rng.randint(0, 3)
            wide = kwic(index, query, window=w + 1)
            narrow = kwic(index, query, window=w)
            trimmed = [(l.left_context[max(0, len(l.left_context) - w):],
                        l.node, l.right_context[:w]) for l in wide]
            assert trimmed == [(l.left_context, l.node, l.right_context)
                               for l in narrow]


class _SentimentStub(BaseHTTPRequestHandler):
    mode = "valid"

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        texts = json.loads(self.rfile.read(length))["texts"]
        if type(self).mode == "valid":
            body = {"results": [{"label": "positive", "confidence": 0.9}
                                for _ in texts]}
        else:
            body = {"results": [{"label": "mixed", "confidence": 0.9}
                                for _ in texts]}
        payload = json.dumps(body).encode()
        self.send_response(200)
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


def test_sentiment_pipeline_properties():
    with criterion("sentiment pipeline properties", 10.0):
        rng = random.Random(2718)
        vocab = [f"w{i}" for i in range(12)]
        for _ in range(1000):
            polarity = {w: round(rng.uniform(-1, 1), 3)
                        for w in rng.sample(vocab, 6)}
            lexicon = SentimentLexicon(
                polarity=polarity,
                negators=frozenset(rng.sample(vocab, 2)),
                intensifiers={w: round(rng.uniform(0.5, 2.0), 2)
                              for w in rng.sample(vocab, 2)})
            words = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            score = score_word_sequence(words, lexicon)

            # sign symmetry of the scorer
            flipped = SentimentLexicon(
                polarity={t: -v for t, v in lexicon.polarity.items()},
                negators=lexicon.negators,
                intensifiers=lexicon.intensifiers)
            assert abs(score + score_word_sequence(words, flipped)) < 1e-9

            # projection coherence + monotonicity around the score
            label5, label3, _ = classify(score)
            assert label3 is project_label(label5)
            higher, _, _ = classify(score + abs(rng.uniform(0, 2)))
            assert label5_rank(higher) >= label5_rank(label5)

        # distribution conservation
        labels = [classify(rng.uniform(-3, 3))[0] for _ in range(1000)]
        results = [SentimentResult("u", 0.0, lab, project_label(lab), 0.1)
                   for lab in labels]
        dist = SentimentDistribution.from_results(results)
        assert sum(dist.counts.values()) == 1000
        assert abs(sum(dist.fractions.values()) - 1.0) < 1e-9

        # canned stub server: valid, malformed, unreachable
        server = HTTPServer(("127.0.0.1", 0), _SentimentStub)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        url = f"http://127.0.0.1:{server.server_port}"
        try:
            _SentimentStub.mode = "valid"
            results = external_classify(["a", "b"], ExternalSentimentClient(url))
            assert [r.label5.value for r in results] == ["positive", "positive"]
            _SentimentStub.mode = "malformed"
            with pytest.raises(SchemaError):
                external_classify(["a"], ExternalSentimentClient(url))
        finally:
            server.shutdown()
        with pytest.raises(BackendUnavailable):
            external_classify(["a"], ExternalSentimentClient("http://127.0.0.1:1",
                                                             timeout=0.3))


def test_throughput_floor(gold, dictionary):
    with criterion("hybrid throughput floor (>= 2000 sentences/sec)", 30.0):
        rng = random.Random(99)
        raws = [raw for raw, _ in gold.sentences]
        fixture = [rng.choice(raws) for _ in range(10000)]
        segmenter = make_segmenter("hybrid", dictionary,
                                   training_sentences=raws, num_merges=2000)
        report = run_throughput_benchmark(segmenter, fixture,
                                          warmup=1, repeats=3)
        assert report.input_size == 10000
        assert report.throughput >= 2000.0, f"only {report.throughput:.0f}/s"
        assert report.throughput * report.wall_time == pytest.approx(
            report.input_size, rel=1e-6)

        # I/O-exclusion invariant: a painfully slow loader must not move
        # the measured throughput
        subset = fixture[:2000]

        def slow_loader():
            time.sleep(0.5)
            return subset

        direct = run_throughput_benchmark(segmenter, subset, warmup=1, repeats=3)
        loaded = run_throughput_benchmark(segmenter, slow_loader,
                                          warmup=1, repeats=3)
        assert loaded.throughput > 0.5 * direct.throughput


def test_service_adapter_fidelity_and_expiry():
    with criterion("service adapter fidelity + expiry purge", 30.0):
        from test_service import (
            FakeClock,
            TestAdapterFidelity,
            VI_TEXTS,
            new_session,
            upload_texts,
        )
        from vietext.service.app import AppResources, create_app
        from vietext.service.config import ServiceConfig

        clock = FakeClock()
        client = TestClient(create_app(ServiceConfig(), clock=clock))
        resources = AppResources(ServiceConfig())
        fidelity = TestAdapterFidelity()
        fidelity.test_wordcloud(client, resources)       # 6 fixture requests
        fidelity.test_kwic(client, resources)            # 5 fixture requests
        fidelity.test_tree_and_expansion(client, resources)
        fidelity.test_sentiment(client, resources)
        fidelity.test_extractive_summary(client, resources)
        fidelity.test_aspects(client, resources)
        fidelity.test_abstractive_stub(client, resources)
        fidelity.test_suggest(client, resources)

        # expiry purge: text must be irretrievable afterwards
        sid = upload_texts(client, new_session(client))
        assert client.get(f"/v1/sessions/{sid}").status_code == 200
        clock.advance(61 * 60)
        assert client.get(f"/v1/sessions/{sid}").status_code == 404
        assert client.post(f"/v1/sessions/{sid}/analyse/kwic",
                           json={"query": "học tập"}).status_code == 404
        assert client.app.state.store.live_count() == 0
