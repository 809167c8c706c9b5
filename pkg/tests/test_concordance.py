import json
import random

import pytest

from oracles import tree_counts_bruteforce
from vietext.concordance import (
    Direction,
    WordTreeNode,
    build_word_tree,
    expand_subtree,
    export_concordance,
    kwic,
    kwic_json_bytes,
    tree_json_bytes,
)
from vietext.corpusindex import SegmentedCorpus
from vietext.errors import PathNotFound, QueryNotFound
from vietext.ingest import Corpus, Document
from vietext.langid import Language
from vietext.segment import SegmenterDictionary

VI_DICT = SegmenterDictionary.from_words(["học sinh", "học tập"])


def make_index(texts: list[str], language=Language.VIETNAMESE,
               dictionary: SegmenterDictionary | None = None) -> SegmentedCorpus:
    corpus = Corpus()
    corpus.add(*[Document(raw_text=t, language=language) for t in texts])
    return SegmentedCorpus(corpus.snapshot(), dictionary or VI_DICT)


class TestKwic:
    def test_window_two(self):
        index = make_index(["tôi học ở trường"])
        (line,) = kwic(index, "học", window=2)
        assert line.left_context == ("tôi",)
        assert line.node == "học"
        assert line.right_context == ("ở", "trường")

    def test_query_never_matches_inside_token(self):
        index = make_index(["học sinh"])
        assert kwic(index, "học", window=2) == []

    def test_window_zero(self):
        index = make_index(["tôi học ở trường"])
        (line,) = kwic(index, "học", window=0)
        assert line.left_context == () and line.right_context == ()

    def test_multi_token_query(self):
        index = make_index(["chúng tôi theo đuổi tri thức"],
                           dictionary=SegmenterDictionary.from_words(["học sinh"]))
        (line,) = kwic(index, "theo đuổi", window=1)
        assert line.node == "theo đuổi"
        assert line.left_context == ("tôi",)
        assert line.right_context == ("tri",)

    def test_dictionary_phrase_query_matches_single_token(self):
        index = make_index(["các bạn học sinh chăm chỉ"])
        (line,) = kwic(index, "học sinh", window=1)
        assert line.node == "học sinh"

    def test_case_insensitive_by_default(self):
        index = make_index(["Học ở đây"])
        assert len(kwic(index, "học", window=1)) == 1
        assert kwic(index, "học", window=1, case_sensitive=True) == []

    def test_ordering_by_document_and_position(self):
        index = make_index(["b học a học", "c học"])
        lines = kwic(index, "học", window=1)
        assert [l.left_context[0] for l in lines] == ["b", "a", "c"]

    def test_contexts_truncated_at_document_edges(self):
        index = make_index(["học cuối"])
        (line,) = kwic(index, "học", window=5)
        assert line.left_context == ()
        assert line.right_context == ("cuối",)

    def test_window_truncation_consistency(self):
        index = make_index(["một hai ba học bốn năm sáu bảy", "học tám"])
        for w in range(0, 4):
            wide = kwic(index, "học", window=w + 1)
            narrow = kwic(index, "học", window=w)
            trimmed = [
                (l.left_context[max(0, len(l.left_context) - w):], l.node,
                 l.right_context[:w]) for l in wide]
            assert trimmed == [(l.left_context, l.node, l.right_context)
                               for l in narrow]

    def test_no_matches_is_empty(self):
        assert kwic(make_index(["một hai"]), "học") == []

    def test_char_span_points_at_source(self):
        text = "tôi học ở trường"
        index = make_index([text])
        (line,) = kwic(index, "học")
        start, end = line.char_span
        assert text[start:end] == "học"


class TestExport:
    def test_header_only_for_no_lines(self):
        out = export_concordance([]).decode("utf-8")
        assert out.strip() == "doc_id,left,node,right,start,end"

    def test_comma_in_context_quoted(self):
        index = make_index(["một, hai học ba"])
        lines = kwic(index, "học", window=3)
        out = export_concordance(lines).decode("utf-8")
        assert '"một , hai"' in out

    def test_n_plus_one_rows(self):
        index = make_index(["học a", "học b", "học c"])
        lines = kwic(index, "học", window=1)
        out = export_concordance(lines).decode("utf-8")
        assert len(out.strip().splitlines()) == len(lines) + 1

    def test_deterministic_bytes(self):
        index = make_index(["học a", "b học"])
        assert export_concordance(kwic(index, "học")) == \
            export_concordance(kwic(index, "học"))
        assert kwic_json_bytes(kwic(index, "học")) == \
            kwic_json_bytes(kwic(index, "học"))


class TestWordTree:
    def test_identical_contexts_merge_into_chain(self):
        index = make_index(["a b c", "a b c"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=2)
        root = tree.root
        assert (root.token, root.count) == ("a", 2)
        (b,) = root.children
        assert (b.token, b.count) == ("b", 2)
        (c,) = b.children
        assert (c.token, c.count) == ("c", 2)

    def test_branching_contexts(self):
        index = make_index(["a b", "a c"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=2)
        assert tree.root.count == 2
        assert [(n.token, n.count) for n in tree.root.children] == \
            [("b", 1), ("c", 1)]

    def test_min_branch_count_prunes(self):
        index = make_index(["a b", "a c"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=2,
                               min_branch_count=2)
        assert tree.root.count == 2
        assert tree.root.children == ()

    def test_left_direction_reversed(self):
        index = make_index(["x y q", "z y q"], language=Language.ENGLISH)
        tree = build_word_tree(index, "q", Direction.LEFT, max_depth=2)
        (y,) = tree.root.children
        assert y.token == "y" and y.count == 2
        assert {c.token for c in y.children} == {"x", "z"}

    def test_query_not_found(self):
        with pytest.raises(QueryNotFound):
            build_word_tree(make_index(["a b"]), "zzz")

    def test_paths_stop_at_sentence_boundary(self):
        index = make_index(["Học one two. Học three."], language=Language.ENGLISH,
                           dictionary=SegmenterDictionary.empty())
        tree = build_word_tree(index, "học", Direction.RIGHT, max_depth=5)
        assert tree.root.count == 2
        by_token = {c.token: c for c in tree.root.children}
        assert by_token["one"].count == 1
        assert by_token["three"].children == ()  # sentence ends after "three"

    def test_children_ordered_count_desc_then_alpha(self):
        index = make_index(["a m", "a m", "a b", "a z"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=1)
        assert [c.token for c in tree.root.children] == ["m", "b", "z"]

    def test_multi_syllable_units_survive(self):
        index = make_index(["các bạn học tập chăm chỉ", "họ học tập tốt"])
        tree = build_word_tree(index, "học tập", Direction.RIGHT, max_depth=1)
        assert tree.root.token == "học tập"
        assert tree.root.count == 2

    def test_json_export(self):
        index = make_index(["a b", "a c"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=2)
        body = json.loads(tree_json_bytes(tree.root))
        assert body["token"] == "a" and body["count"] == 2
        assert [c["token"] for c in body["children"]] == ["b", "c"]


class TestExpandSubtree:
    def test_expanding_root_equals_deeper_build(self):
        index = make_index(["a b x", "a c y"], language=Language.ENGLISH)
        shallow = build_word_tree(index, "a", Direction.RIGHT, max_depth=1)
        expanded = expand_subtree(shallow, [], additional_depth=1)
        deep = build_word_tree(index, "a", Direction.RIGHT, max_depth=2)
        assert expanded == deep.root

    def test_expanding_leaf_at_sentence_end_unchanged(self):
        index = make_index(["a b"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=2)
        node = expand_subtree(tree, ["b"], additional_depth=3)
        assert node == WordTreeNode(token="b", count=1, children=())

    def test_count_stable_under_expansion(self):
        index = make_index(["a b c d", "a b e f"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=1)
        node = expand_subtree(tree, ["b"], additional_depth=2)
        assert node.count == 2  # same as the b node in the original tree

    def test_path_not_found(self):
        index = make_index(["a b"], language=Language.ENGLISH)
        tree = build_word_tree(index, "a", Direction.RIGHT, max_depth=1)
        with pytest.raises(PathNotFound):
            expand_subtree(tree, ["nope"], additional_depth=1)


def _collect_counts(node: WordTreeNode, prefix=()) -> dict:
    counts = {prefix: node.count}
    for child in node.children:
        counts.update(_collect_counts(child, prefix + (child.token,)))
    return counts


class TestConservation:
    def test_root_count_equals_kwic_matches_random(self):
        rng = random.Random(61)
        vocab = ["a", "b", "c", "d", "e"]
        for trial in range(50):
            texts = [" ".join(rng.choice(vocab)
                              for _ in range(rng.randint(1, 12)))
                     for _ in range(rng.randint(1, 6))]
            query = rng.choice(vocab)
            index = make_index(texts, language=Language.ENGLISH,
                               dictionary=SegmenterDictionary.empty())
            matches = len(kwic(index, query, window=0))
            if matches == 0:
                with pytest.raises(QueryNotFound):
                    build_word_tree(index, query)
                continue
            tree = build_word_tree(index, query, Direction.RIGHT, max_depth=3)
            assert tree.root.count == matches

    def test_node_counts_match_bruteforce_paths(self):
        rng = random.Random(67)
        vocab = ["x", "y", "z", "w"]
        for trial in range(50):
            sentences = [[rng.choice(vocab) for _ in range(rng.randint(1, 9))]
                         for _ in range(rng.randint(1, 5))]
            query = rng.choice(vocab)
            direction = rng.choice([Direction.RIGHT, Direction.LEFT])
            depth = rng.randint(1, 4)
            texts = [" ".join(s) for s in sentences]
            index = make_index(texts, language=Language.ENGLISH,
                               dictionary=SegmenterDictionary.empty())
            expected = tree_counts_bruteforce(sentences, [query],
                                              direction.value.lower(), depth)
            if not expected:
                with pytest.raises(QueryNotFound):
                    build_word_tree(index, query, direction, depth)
                continue
            tree = build_word_tree(index, query, direction, depth)
            assert _collect_counts(tree.root) == expected
