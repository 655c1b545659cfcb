from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from ewom.keywords import KeywordReport


class FeatureMode(str, enum.Enum):
    BINARY = "Binary"
    COUNT = "Count"

    @classmethod
    def parse(cls, value) -> "FeatureMode":
        if isinstance(value, cls):
            return value
        for mode in cls:
            if str(value).lower() == mode.value.lower():
                return mode
        raise ValueError(f"unknown feature mode {value!r}")


@dataclass(frozen=True)
class FeatureSpace:
    features: tuple
    mode: FeatureMode = FeatureMode.BINARY

    def __post_init__(self):
        features = tuple(self.features)
        if len(set(features)) != len(features):
            raise ValueError("duplicate features")
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "mode", FeatureMode.parse(self.mode))
        object.__setattr__(self, "_index", {f: k for k, f in enumerate(features)})

    def __len__(self):
        return len(self.features)

    def index_of(self, word: str):
        return self._index.get(word)


@dataclass(frozen=True)
class SparseVector:
    indices: tuple = ()
    values: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.indices) != len(self.values):
            raise ValueError("indices and values differ in length")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be strictly increasing")
        if any(i < 0 for i in self.indices[:1]):
            raise ValueError("negative feature index")
        if not all(v > 0 and math.isfinite(v) for v in self.values):
            raise ValueError("values must be positive and finite")

    @classmethod
    def from_dict(cls, entries: dict) -> "SparseVector":
        items = sorted(entries.items())
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items))

    def to_dict(self) -> dict:
        return dict(zip(self.indices, self.values))

    def squared_norm(self) -> float:
        return sum(v * v for v in self.values)


def build_space(report: KeywordReport, mode: FeatureMode | str = FeatureMode.BINARY) -> FeatureSpace:
    features = report.selected
    if not features:
        raise ValueError("empty feature space")
    return FeatureSpace(tuple(features), FeatureMode.parse(mode))


def vectorize_tokens(tokens: Iterable[str], space: FeatureSpace) -> SparseVector:
    counts: Counter = Counter()
    for tok in tokens:
        k = space.index_of(tok)
        if k is not None:
            counts[k] += 1
    if space.mode is FeatureMode.BINARY:
        return SparseVector.from_dict({k: 1.0 for k in counts})
    return SparseVector.from_dict({k: float(c) for k, c in counts.items()})


def vectorize(doc, space: FeatureSpace) -> SparseVector:
    """Feature vector of a tokenized document (anything with ``.tokens``)."""
    return vectorize_tokens(doc.tokens, space)
