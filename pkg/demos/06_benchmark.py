"""Segmentation quality and throughput benchmarks.

F1 uses boundary spans: each word is a (start, end) syllable interval and
precision/recall count exact interval matches against a gold standard.
The bundled 200-sentence gold fixture is fully covered by the bundled
dictionary, so maximum matching scores a perfect 100.
"""

import random

from vietext.bench import (
    GoldCorpus,
    emit_table,
    make_segmenter,
    run_f1_benchmark,
    run_throughput_benchmark,
)
from vietext.resources import data_text
from vietext.segment import SegmenterDictionary

gold = GoldCorpus.parse(data_text("gold_vi_200.txt"))
dictionary = SegmenterDictionary.parse(data_text("dictionary_vi.txt"))

# --- F1 for three segmenter configurations ----------------------------------
raws = [raw for raw, _ in gold.sentences]
reports = []
for kind in ("maxmatch", "hybrid", "whitespace"):
    segmenter = make_segmenter(kind, dictionary, training_sentences=raws,
                               num_merges=500)
    reports.append(run_f1_benchmark(segmenter, gold, system=kind))

# --- throughput on a 10k-sentence synthetic fixture --------------------------
rng = random.Random(99)
fixture = [rng.choice(raws) for _ in range(10000)]
for kind in ("maxmatch", "hybrid"):
    segmenter = make_segmenter(kind, dictionary, training_sentences=raws,
                               num_merges=500)
    reports.append(run_throughput_benchmark(
        segmenter, fixture, warmup=1, repeats=3, system=f"{kind} (speed)"))

print(emit_table(reports, format="md").decode("utf-8"))
