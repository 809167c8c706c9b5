"""Word segmentation for Vietnamese and English, plus the BPE subword layer.

Vietnamese writes syllables, not words: "học sinh" (student) is one word
in two syllables.  The dictionary segmenter groups syllables back into
words; the BPE layer adds subword pieces for robustness on rare terms.
"""

from vietext.langid import Language
from vietext.resources import data_text
from vietext.segment import (
    SegmenterDictionary,
    bpe_train,
    segment_hybrid,
    segment_vietnamese,
    split_sentences,
    tokenize_english,
)

dictionary = SegmenterDictionary.parse(data_text("dictionary_vi.txt"))
print(f"bundled dictionary: {len(dictionary)} multi-syllable words\n")

# --- Vietnamese maximum matching ------------------------------------------
text = "Học sinh sử dụng công nghệ thông tin để học tập."
segmented = segment_vietnamese(text, dictionary)
print(text)
print("  ->", " | ".join(t.surface for t in segmented.tokens if t.is_word))

# Without the dictionary every syllable stands alone:
bare = segment_vietnamese(text, SegmenterDictionary.empty())
print("  (no dictionary:", " | ".join(t.surface for t in bare.tokens if t.is_word), ")\n")

# --- English rule-based tokenisation ---------------------------------------
english = tokenize_english("It's a state-of-the-art tool, isn't it?")
print([t.surface for t in english.tokens], "\n")

# --- BPE: train on word types, encode anything -----------------------------
words = [t.surface.replace(" ", "") for t in segmented.tokens if t.is_word]
model = bpe_train(words * 5, num_merges=8)
print("BPE merges learned:", list(model.merges)[:6], "...")

hybrid = segment_hybrid(text, Language.VIETNAMESE, dictionary, model)
for token in hybrid.tokens:
    if token.is_word:
        print(f"  {token.surface!r:30} subwords: {token.subwords}")

# --- Sentence splitting with abbreviation guards ----------------------------
sample = "TS. Lan dạy toán. Cô ấy rất giỏi."
print("\nsentences:", [s for s, _ in split_sentences(sample, Language.VIETNAMESE)])
