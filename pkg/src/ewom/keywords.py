"""Entropy-based keyword selection over sentiment-labelled documents.

For every word we look at how its occurrences spread across the positive
documents and across the negative documents.  A word whose positive spread
(entropy, in bits) dominates its negative spread by a factor ``alpha`` is a
positive keyword; the mirror test with ``alpha_prime`` gives negative
keywords.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from ewom.ingest import Sentiment


@dataclass(frozen=True)
class CountMatrix:
    """Sparse per-document word counts, split by sentiment.

    ``pos_counts[j]`` maps document index -> count for word ``vocabulary[j]``
    over positive documents; ``neg_counts`` likewise.  Zeros are not stored.
    """

    vocabulary: tuple
    doc_ids: tuple
    pos_counts: tuple
    neg_counts: tuple

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    def index(self, word: str) -> int:
        return self._index[word]

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: j for j, w in enumerate(self.vocabulary)})

    def dense_column(self, j: int) -> tuple[list[int], list[int]]:
        pos, neg = [0] * self.n_docs, [0] * self.n_docs
        for i, c in self.pos_counts[j].items():
            pos[i] = c
        for i, c in self.neg_counts[j].items():
            neg[i] = c
        return pos, neg


def build_counts(docs: Sequence) -> CountMatrix:
    """Count word occurrences per document.

    ``docs`` are objects with ``id``, ``tokens`` and a ``sentiment``
    (Positive/Negative).  The vocabulary is sorted for stable output.
    """
    if not docs:
        raise ValueError("empty corpus")
    rows = []
    for doc in docs:
        if doc.sentiment is None:
            raise ValueError(f"document {doc.id!r} has no sentiment label")
        rows.append((Sentiment(doc.sentiment), Counter(doc.tokens)))

    vocabulary = sorted({w for _, counts in rows for w in counts})
    index = {w: j for j, w in enumerate(vocabulary)}
    pos: list[dict[int, int]] = [{} for _ in vocabulary]
    neg: list[dict[int, int]] = [{} for _ in vocabulary]
    for i, (label, counts) in enumerate(rows):
        target = pos if label is Sentiment.POSITIVE else neg
        for w, c in counts.items():
            target[index[w]][i] = c
    return CountMatrix(
        vocabulary=tuple(vocabulary),
        doc_ids=tuple(doc.id for doc in docs),
        pos_counts=tuple(pos),
        neg_counts=tuple(neg),
    )


def _normalize(column: dict[int, int], m: int) -> list[float]:
    total = sum(column.values())
    probs = [0.0] * m
    if total == 0:
        return probs
    for i, c in column.items():
        probs[i] = c / total
    return probs


def word_probabilities(m: CountMatrix, j: int) -> tuple[list[float], list[float]]:
    """Per-document occurrence probabilities of word j in each partition.

    A partition where the word never occurs gets all-zero probabilities.
    """
    if not 0 <= j < len(m.vocabulary):
        raise IndexError(f"no word at index {j}")
    return _normalize(m.pos_counts[j], m.n_docs), _normalize(m.neg_counts[j], m.n_docs)


def entropy(probabilities: Iterable[float]) -> float:
    """Shannon entropy in bits; zero probabilities contribute nothing."""
    h = 0.0
    total = 0.0
    for p in probabilities:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"invalid probability {p!r}")
        total += p
        if p > 0.0:
            h -= p * math.log2(p)
    if total != 0.0 and abs(total - 1.0) > 1e-9:
        raise ValueError(f"invalid probability distribution (sums to {total!r})")
    # -0.0 when every term vanished
    return h + 0.0


@dataclass(frozen=True)
class KeywordScore:
    word: str
    h_pos: float
    h_neg: float
    is_positive_keyword: bool
    is_negative_keyword: bool


@dataclass(frozen=True)
class KeywordReport:
    scores: tuple
    alpha: float
    alpha_prime: float

    @property
    def positive_keywords(self) -> list[str]:
        return [s.word for s in self.scores if s.is_positive_keyword]

    @property
    def negative_keywords(self) -> list[str]:
        return [s.word for s in self.scores if s.is_negative_keyword]

    @property
    def selected(self) -> list[str]:
        return [s.word for s in self.scores if s.is_positive_keyword or s.is_negative_keyword]

    def write_tsv(self, fh: IO[str]) -> None:
        fh.write("word\th_pos\th_neg\tpos_keyword\tneg_keyword\n")
        for s in self.scores:
            fh.write(
                f"{s.word}\t{s.h_pos:.6f}\t{s.h_neg:.6f}\t"
                f"{int(s.is_positive_keyword)}\t{int(s.is_negative_keyword)}\n"
            )


def dominates(h_this: float, h_other: float, factor: float) -> bool:
    """Strict threshold test; two zero entropies never dominate."""
    return h_this > factor * h_other


def word_entropies(m: CountMatrix, j: int) -> tuple[float, float]:
    p_pos, p_neg = word_probabilities(m, j)
    return entropy(p_pos), entropy(p_neg)


def select_keywords(m: CountMatrix, alpha: float, alpha_prime: float) -> KeywordReport:
    if not (alpha > 1 and alpha_prime > 1):
        raise ValueError("threshold must exceed 1")
    scores = []
    for j, word in enumerate(m.vocabulary):
        h_pos, h_neg = word_entropies(m, j)
        scores.append(
            KeywordScore(
                word=word,
                h_pos=h_pos,
                h_neg=h_neg,
                is_positive_keyword=dominates(h_pos, h_neg, alpha),
                is_negative_keyword=dominates(h_neg, h_pos, alpha_prime),
            )
        )
    return KeywordReport(tuple(scores), float(alpha), float(alpha_prime))
