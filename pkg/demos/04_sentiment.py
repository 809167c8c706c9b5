"""Lexicon sentiment with negation and intensifiers, 5-class and 3-class
labels, confidence scores, and the corpus-level distribution.
"""

from pathlib import Path

from vietext.ingest import Corpus, load_csv
from vietext.resources import data_text
from vietext.segment import SegmenterDictionary
from vietext.sentiment import Granularity, analyse_sentiment

DATA = Path(__file__).parent / "data"

corpus = Corpus()
corpus.add(*load_csv((DATA / "feedback.csv").read_bytes(), "feedback"))
dictionary = SegmenterDictionary.parse(data_text("dictionary_vi.txt"))

results, distribution = analyse_sentiment(
    corpus.snapshot().documents, Granularity.PER_SENTENCE,
    dictionary=dictionary)

print("most confident units:")
for r in sorted(results, key=lambda r: -r.confidence)[:6]:
    print(f"  {r.label5.value:14} conf={r.confidence:.2f} score={r.raw_score:+.2f}"
          f"  {r.unit_text[:52]}")

print("\n5-class distribution:")
for label, count in distribution.counts.items():
    frac = distribution.fractions[label]
    print(f"  {label.value:14} {count:3}  {'#' * round(frac * 40)}")

# Negation flips polarity within a 3-word window; intensifiers scale it:
from vietext.langid import Language
from vietext.sentiment import SentimentLexicon, score_word_sequence

lexicon = SentimentLexicon.load(Language.VIETNAMESE)
for phrase in (["tốt"], ["không", "tốt"], ["rất", "tốt"], ["không", "rất", "tốt"]):
    print(f"\n  {' '.join(phrase):18} -> {score_word_sequence(phrase, lexicon):+.2f}",
          end="")
print()
