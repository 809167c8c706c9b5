"""Three word-cloud weightings over one corpus: raw frequency,
log-likelihood significance, and signed keyness against a reference list.
"""

from pathlib import Path

from vietext.corpusindex import SegmentedCorpus
from vietext.ingest import Corpus, load_csv
from vietext.keyness import (
    ReferenceCorpus,
    WordcloudMode,
    build_frequency_table,
    load_stopword_set,
    wordcloud_payload,
)
from vietext.langid import Language
from vietext.resources import data_text
from vietext.segment import SegmenterDictionary

DATA = Path(__file__).parent / "data"

corpus = Corpus()
corpus.add(*load_csv((DATA / "feedback.csv").read_bytes(), "feedback"))
dictionary = SegmenterDictionary.parse(data_text("dictionary_vi.txt"))
index = SegmentedCorpus(corpus.snapshot(), dictionary)

stopwords = load_stopword_set(Language.VIETNAMESE)
table = build_frequency_table(index.segments_for(Language.VIETNAMESE), stopwords)
reference = ReferenceCorpus.load(language=Language.VIETNAMESE)
print(f"study corpus: {table.total} word tokens, "
      f"reference: {reference.name} ({reference.total:,} tokens)\n")

for mode in WordcloudMode:
    payload = wordcloud_payload(mode, table, reference=reference, top_k=8,
                                min_count=2)
    print(f"--- {mode.value} ---")
    for entry in payload:
        bar = "#" * round(entry.weight * 30)
        print(f"  {entry.term:22} {entry.weight:5.2f} {bar}")
    print()

# Log-likelihood of a single term, by hand: "học tập" in study vs reference
from vietext.keyness import log_likelihood

a = table.counts.get("học tập", 0)
b = reference.counts.get("học tập", 0)
e1, e2, ll = log_likelihood(a, b, table.total, reference.total)
print(f"'học tập': study {a} (expected {e1:.2f}), "
      f"reference {b} (expected {e2:.2f}), G2 = {ll:.2f}")
