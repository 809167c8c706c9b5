"""Keyword-in-context extraction and word-tree construction.

Matching operates on word tokens from the segmentation layer, so a query
never matches inside a multi-syllable token: "học" does not hit "học
sinh".  Multi-token queries match exact consecutive token sequences,
which also covers phrases the dictionary does not know.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from vietext.corpusindex import SegmentedCorpus, _effective_language
from vietext.errors import InvalidInput, PathNotFound, QueryNotFound
from vietext.segment.hybrid import segment_words
from vietext.serialize import csv_bytes, json_bytes

DEFAULT_WINDOW = 5
DEFAULT_MAX_DEPTH = 4


class Direction(str, Enum):
    RIGHT = "Right"
    LEFT = "Left"


@dataclass(frozen=True)
class ConcordanceLine:
    doc_id: str
    left_context: tuple[str, ...]
    node: str
    right_context: tuple[str, ...]
    char_span: tuple[int, int]


@dataclass(frozen=True)
class WordTreeNode:
    token: str
    count: int
    children: tuple["WordTreeNode", ...]


@dataclass(frozen=True)
class _Match:
    doc_index: int
    start_token: int       # first token of the matched sequence
    end_token: int         # last token of the matched sequence


def _query_tokens(index: SegmentedCorpus, query: str, doc_index: int) -> list[str]:
    """Segment the query the same way the document was segmented."""
    doc = index.snapshot.documents[doc_index]
    seg = segment_words(query, _effective_language(doc), index.dictionary)
    return [t.surface for t in seg.word_tokens()]


def _find_matches(index: SegmentedCorpus, query: str,
                  case_sensitive: bool = False) -> list[_Match]:
    if not query.strip():
        raise InvalidInput("query must be non-empty")
    docs = index.documents()
    matches: list[_Match] = []
    for di, idoc in enumerate(docs):
        q_tokens = _query_tokens(index, query, di)
        if not q_tokens:
            continue
        want = q_tokens if case_sensitive else [q.casefold() for q in q_tokens]
        tokens = idoc.segmented.tokens
        n = len(tokens)
        span = len(want)
        ti = 0
        while ti <= n - span:
            ok = True
            for offset, target in enumerate(want):
                tok = tokens[ti + offset]
                if not tok.is_word:
                    ok = False
                    break
                surface = tok.surface if case_sensitive else tok.surface.casefold()
                if surface != target:
                    ok = False
                    break
            if ok:
                matches.append(_Match(doc_index=di, start_token=ti,
                                      end_token=ti + span - 1))
                ti += span
            else:
                ti += 1
    return matches


def kwic(index: SegmentedCorpus, query: str, window: int = DEFAULT_WINDOW,
         case_sensitive: bool = False) -> list[ConcordanceLine]:
    """All matches with up to `window` context tokens per side, in
    (document, position) order; contexts never cross document boundaries."""
    if window < 0:
        raise InvalidInput("window must be >= 0")
    docs = index.documents()
    lines = []
    for match in _find_matches(index, query, case_sensitive):
        idoc = docs[match.doc_index]
        tokens = idoc.segmented.tokens
        left = tokens[max(0, match.start_token - window):match.start_token]
        right = tokens[match.end_token + 1:match.end_token + 1 + window]
        node_tokens = tokens[match.start_token:match.end_token + 1]
        lines.append(ConcordanceLine(
            doc_id=idoc.document.id or "",
            left_context=tuple(t.surface for t in left),
            node=" ".join(t.surface for t in node_tokens),
            right_context=tuple(t.surface for t in right),
            char_span=(node_tokens[0].span[0], node_tokens[-1].span[1]),
        ))
    return lines


class WordTree:
    """A built word tree plus the match contexts needed to expand it."""

    def __init__(self, root: WordTreeNode, contexts: list[tuple[str, ...]],
                 query: str, direction: Direction, max_depth: int,
                 min_branch_count: int):
        self.root = root
        self._contexts = contexts      # full paths to the sentence boundary
        self.query = query
        self.direction = direction
        self.max_depth = max_depth
        self.min_branch_count = min_branch_count


def _build_trie(label: str, contexts: list[tuple[str, ...]], depth: int,
                min_branch_count: int) -> WordTreeNode:
    """Group contexts by first token and recurse; children ordered by
    count descending then token, branches below min_branch_count pruned."""
    groups: dict[str, list[tuple[str, ...]]] = {}
    for ctx in contexts:
        if ctx:
            groups.setdefault(ctx[0], []).append(ctx[1:])
    children = []
    if depth > 0:
        for token, rest in groups.items():
            if len(rest) < min_branch_count:
                continue
            children.append(_build_trie(token, rest, depth - 1, min_branch_count))
        children.sort(key=lambda n: (-n.count, n.token))
    return WordTreeNode(token=label, count=len(contexts), children=tuple(children))


def build_word_tree(index: SegmentedCorpus, query: str,
                    direction: Direction = Direction.RIGHT,
                    max_depth: int = DEFAULT_MAX_DEPTH,
                    min_branch_count: int = 1) -> WordTree:
    """Trie of the word-token sequences beside each match, stopping at
    sentence boundaries.  Raises QueryNotFound on zero matches."""
    if max_depth < 1:
        raise InvalidInput("max_depth must be >= 1")
    matches = _find_matches(index, query, case_sensitive=False)
    if not matches:
        raise QueryNotFound(f"no occurrences of {query!r}")
    docs = index.documents()
    contexts: list[tuple[str, ...]] = []
    for match in matches:
        idoc = docs[match.doc_index]
        tokens = idoc.segmented.tokens
        sentences = idoc.token_sentence
        anchor = (match.end_token if direction is Direction.RIGHT
                  else match.start_token)
        sentence = sentences[anchor]
        path = []
        if direction is Direction.RIGHT:
            ti = match.end_token + 1
            while ti < len(tokens) and sentences[ti] == sentence:
                if tokens[ti].is_word:
                    path.append(tokens[ti].surface)
                ti += 1
        else:
            ti = match.start_token - 1
            while ti >= 0 and sentences[ti] == sentence:
                if tokens[ti].is_word:
                    path.append(tokens[ti].surface)
                ti -= 1
        contexts.append(tuple(path))
    root = _build_trie(query, contexts, max_depth, min_branch_count)
    return WordTree(root=root, contexts=contexts, query=query,
                    direction=direction, max_depth=max_depth,
                    min_branch_count=min_branch_count)


def expand_subtree(tree: WordTree, path: list[str],
                   additional_depth: int) -> WordTreeNode:
    """Recompute the subtree rooted at `path`, its branches extended by
    `additional_depth` beyond the tree's original depth."""
    if additional_depth < 0:
        raise InvalidInput("additional_depth must be >= 0")
    remaining = [ctx[len(path):] for ctx in tree._contexts
                 if len(ctx) >= len(path) and tuple(ctx[:len(path)]) == tuple(path)]
    if not remaining:
        raise PathNotFound(f"no match context passes through {path!r}")
    label = path[-1] if path else tree.query
    depth = tree.max_depth - len(path) + additional_depth
    return _build_trie(label, remaining, depth, tree.min_branch_count)


def export_concordance(lines: list[ConcordanceLine]) -> bytes:
    """CSV export: doc_id,left,node,right,start,end with RFC-4180 quoting."""
    return csv_bytes(
        ["doc_id", "left", "node", "right", "start", "end"],
        [[l.doc_id, " ".join(l.left_context), l.node, " ".join(l.right_context),
          l.char_span[0], l.char_span[1]] for l in lines],
    )


def kwic_json_bytes(lines: list[ConcordanceLine]) -> bytes:
    return json_bytes([
        {"doc_id": l.doc_id, "left": list(l.left_context), "node": l.node,
         "right": list(l.right_context), "start": l.char_span[0],
         "end": l.char_span[1]}
        for l in lines
    ])


def tree_json_bytes(node: WordTreeNode) -> bytes:
    def encode(n: WordTreeNode) -> dict:
        return {"token": n.token, "count": n.count,
                "children": [encode(c) for c in n.children]}
    return json_bytes(encode(node))
