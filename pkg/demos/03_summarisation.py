"""Extractive summarisation by sentence centrality, then aspect detection
and the prompt-assembly path used for abstractive generation.

The generation backend here is the deterministic offline stub; point
GenerationClient at a completion endpoint to use a real model.
"""

from pathlib import Path

from vietext.abstractive import (
    AspectCatalogue,
    GenerationBackend,
    GenerationRequest,
    detect_aspects,
    generate_summary,
)
from vietext.corpusindex import SegmentedCorpus
from vietext.ingest import Corpus, load_plain_text
from vietext.langid import Language
from vietext.resources import data_text
from vietext.segment import SegmenterDictionary
from vietext.textrank import summarise_extractive

DATA = Path(__file__).parent / "data"

text = (DATA / "news_en.txt").read_text(encoding="utf-8")
dictionary = SegmenterDictionary.parse(data_text("dictionary_vi.txt"))

# --- extractive: pick the 2 most central sentences --------------------------
summary = summarise_extractive(text, Language.ENGLISH, 2, dictionary)
print("extractive summary (2 sentences):")
for s in summary.selected:
    print(f"  [{s.index}] score={s.score:.3f}  {s.text}")

# --- aspects with confidence scores -----------------------------------------
corpus = Corpus()
corpus.add(load_plain_text(text.encode("utf-8")))
index = SegmentedCorpus(corpus.snapshot(), dictionary)
catalogue = AspectCatalogue.load()
scores = detect_aspects([d.segmented for d in index.documents()], catalogue)
print("\ndetected aspects:")
for score in scores:
    terms = ", ".join(f"{t}x{c}" for t, c in score.matched_terms[:4])
    print(f"  {score.aspect:15} confidence={score.confidence:.2f}  ({terms})")

# --- aspect-guided abstractive request (offline stub backend) ---------------
request = GenerationRequest(source_text=text, language=Language.ENGLISH,
                            instruction="highlight challenges for teachers",
                            aspect=scores[0].aspect if scores else None)
result = generate_summary(request, GenerationBackend.OFFLINE_STUB, catalogue,
                          dictionary=dictionary)
print(f"\nabstractive ({result.backend.value}):\n  {result.text[:160]}...")
print("\nprompt sent to the model:")
for line in result.prompt_used.splitlines()[:5]:
    print("  |", line)
