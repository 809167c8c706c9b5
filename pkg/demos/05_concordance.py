"""Keyword-in-context lines and word trees over a segmented corpus.

Matching is segmentation-aware: "học" never matches inside the word
"học sinh", and multiword units like "học tập" query as single tokens.
"""

from pathlib import Path

from vietext.abstractive import GenerationBackend, suggest_related_terms
from vietext.concordance import Direction, build_word_tree, expand_subtree, kwic
from vietext.corpusindex import SegmentedCorpus
from vietext.ingest import Corpus, load_csv
from vietext.langid import Language
from vietext.resources import data_text
from vietext.segment import SegmenterDictionary

DATA = Path(__file__).parent / "data"

corpus = Corpus()
corpus.add(*load_csv((DATA / "feedback.csv").read_bytes(), "feedback"))
index = SegmentedCorpus(corpus.snapshot(),
                        SegmenterDictionary.parse(data_text("dictionary_vi.txt")))

# --- KWIC -------------------------------------------------------------------
query = "học tập"
lines = kwic(index, query, window=3)
print(f"KWIC for {query!r} ({len(lines)} lines):")
for line in lines:
    left = " ".join(line.left_context)
    right = " ".join(line.right_context)
    print(f"  {left:>30} [{line.node}] {right}")

# --- word tree ---------------------------------------------------------------
tree = build_word_tree(index, query, Direction.RIGHT, max_depth=2)


def show(node, depth=0):
    print("    " * depth + f"{node.token} ({node.count})")
    for child in node.children:
        show(child, depth + 1)


print("\nright-context word tree:")
show(tree.root)

# expanding a branch recomputes it deeper from the same match positions
if tree.root.children:
    first = tree.root.children[0].token
    deeper = expand_subtree(tree, [first], additional_depth=2)
    print(f"\nexpanded branch {first!r}:")
    show(deeper)

# --- related-term suggestions -------------------------------------------------
related = suggest_related_terms("học", Language.VIETNAMESE,
                                GenerationBackend.OFFLINE_STUB)
print("\nrelated terms for 'học':",
      ", ".join(f"{t} ({g})" for t, g in related))
