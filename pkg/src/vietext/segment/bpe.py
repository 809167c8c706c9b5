"""Byte-pair-encoding subword model: training, encoding, file round trip.

Training follows the classical pair-merge loop: initialise every word as
its character sequence plus a separate end-of-word marker symbol, then
repeatedly merge the most frequent adjacent symbol pair (frequency counted
across word types weighted by their corpus counts).  Ties break to the
lexicographically smallest pair so training is reproducible everywhere.

The trainer keeps pair counts incrementally and picks maxima through a
lazy max-heap; the output is bit-identical to the naive recount-everything
loop, just not quadratic in it.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from vietext.errors import InvalidInput

END_OF_WORD = "</w>"

Pair = tuple[str, str]


@dataclass(frozen=True)
class BpeModel:
    merges: tuple[Pair, ...]
    vocab: frozenset[str]
    end_of_word_marker: str = END_OF_WORD
    _ranks: dict = field(default_factory=dict, repr=False, compare=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._ranks.update({pair: i for i, pair in enumerate(self.merges)})

    def save(self, path: str | Path) -> None:
        lines = ["bpe-v1"] + [f"{a} {b}" for a, b in self.merges]
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "BpeModel":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def parse(cls, text: str) -> "BpeModel":
        lines = text.splitlines()
        if not lines or lines[0].strip() != "bpe-v1":
            raise InvalidInput("BPE model file must start with a 'bpe-v1' header")
        merges = []
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split(" ")
            if len(parts) != 2:
                raise InvalidInput(f"line {lineno}: expected 'left right'")
            merges.append((parts[0], parts[1]))
        vocab = {END_OF_WORD}
        for a, b in merges:
            vocab.update((a, b, a + b))
        return cls(merges=tuple(merges), vocab=frozenset(vocab))


def _replace_pair(seq: tuple[str, ...], pair: Pair, merged: str) -> tuple[str, ...]:
    """Merge all occurrences of pair, scanning left to right."""
    left, right = pair
    out = []
    i = 0
    n = len(seq)
    while i < n:
        if i + 1 < n and seq[i] == left and seq[i + 1] == right:
            out.append(merged)
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return tuple(out)


def bpe_train(corpus_tokens: Sequence[str] | Iterable[str], num_merges: int) -> BpeModel:
    """Learn up to num_merges merges from a corpus of word strings.

    Stops early once no adjacent pair occurs at least twice.  Words must
    not contain whitespace (word boundaries are the caller's job).
    """
    if num_merges < 0:
        raise InvalidInput("num_merges must be >= 0")
    word_counts = Counter(corpus_tokens)
    if not word_counts:
        raise InvalidInput("corpus_tokens is empty")

    vocab: set[str] = {END_OF_WORD}
    seqs: dict[str, tuple[str, ...]] = {}
    for word in word_counts:
        seq = tuple(word) + (END_OF_WORD,)
        seqs[word] = seq
        vocab.update(word)

    pair_counts: Counter = Counter()
    pair_words: dict[Pair, set[str]] = {}
    for word, seq in seqs.items():
        c = word_counts[word]
        for i in range(len(seq) - 1):
            pair = (seq[i], seq[i + 1])
            pair_counts[pair] += c
            pair_words.setdefault(pair, set()).add(word)

    # Lazy max-heap over (-count, pair); (-count, pair) ordering makes the
    # highest count win and ties resolve to the lexicographically smallest
    # pair, matching the sequential definition exactly.
    heap: list[tuple[int, Pair]] = [(-c, p) for p, c in pair_counts.items()]
    heapq.heapify(heap)

    merges: list[Pair] = []
    while len(merges) < num_merges and heap:
        neg_count, pair = heapq.heappop(heap)
        current = pair_counts.get(pair, 0)
        if current != -neg_count or current == 0:
            continue  # stale heap entry
        if current < 2:
            break
        merged = pair[0] + pair[1]
        merges.append(pair)
        vocab.add(merged)
        touched: set[Pair] = set()
        for word in list(pair_words.get(pair, ())):
            c = word_counts[word]
            old_seq = seqs[word]
            new_seq = _replace_pair(old_seq, pair, merged)
            for i in range(len(old_seq) - 1):
                p = (old_seq[i], old_seq[i + 1])
                pair_counts[p] -= c
                touched.add(p)
                if pair_counts[p] <= 0:
                    del pair_counts[p]
                words = pair_words.get(p)
                if words is not None:
                    words.discard(word)
                    if not words:
                        del pair_words[p]
            for i in range(len(new_seq) - 1):
                p = (new_seq[i], new_seq[i + 1])
                pair_counts[p] += c
                touched.add(p)
                pair_words.setdefault(p, set()).add(word)
            seqs[word] = new_seq
        for p in touched:
            c = pair_counts.get(p, 0)
            if c > 0:
                heapq.heappush(heap, (-c, p))

    return BpeModel(merges=tuple(merges), vocab=frozenset(vocab))


def bpe_encode(word: str, model: BpeModel) -> list[str]:
    """Split a word into subword symbols by applying merges in training order.

    Total on any input: characters never seen in training simply stay
    unmerged.  Output always concatenates back to word + marker.
    """
    cached = model._cache.get(word)
    if cached is not None:
        return list(cached)
    seq: tuple[str, ...] = tuple(word) + (model.end_of_word_marker,)
    ranks = model._ranks
    if ranks and len(seq) > 1:
        # Each merge is applied at most once, in rank order, exactly like a
        # sequential pass over the merge list; the floor skips pairs whose
        # rank has already gone by.
        floor = 0
        while True:
            best_rank = None
            best_pair = None
            for i in range(len(seq) - 1):
                pair = (seq[i], seq[i + 1])
                rank = ranks.get(pair)
                if rank is not None and rank >= floor and (
                        best_rank is None or rank < best_rank):
                    best_rank = rank
                    best_pair = pair
            if best_pair is None:
                break
            seq = _replace_pair(seq, best_pair, best_pair[0] + best_pair[1])
            floor = best_rank + 1
    model._cache[word] = seq
    return list(seq)


def strip_marker(subwords: Iterable[str], marker: str = END_OF_WORD) -> str:
    """Concatenate subwords back into the original word."""
    joined = "".join(subwords)
    if joined.endswith(marker):
        joined = joined[: -len(marker)]
    return joined
