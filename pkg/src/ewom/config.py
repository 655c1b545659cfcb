"""Pipeline settings, loadable from a ``key = value`` file.

Example::

    alpha = 1.5
    alpha_prime = 1.5
    learning_rate = 1.0
    epochs = 10
    seed = 0
    feature_mode = Binary
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

from ewom.classifier import PERCEPTRON, UPDATE_RULES, TrainConfig
from ewom.ingest import Sentiment
from ewom.vectorize import FeatureMode

_SECTION = "pipeline"


@dataclass(frozen=True)
class PipelineConfig:
    alpha: float = 1.5
    alpha_prime: float = 1.5
    learning_rate: float = 1.0
    epochs: int = 10
    seed: int = 0
    feature_mode: FeatureMode = FeatureMode.BINARY
    lexicon_path: Optional[str] = None
    stopword_path: Optional[str] = None
    positive_class: Sentiment = Sentiment.POSITIVE
    max_updates: Optional[int] = None
    update_rule: str = PERCEPTRON

    def __post_init__(self):
        object.__setattr__(self, "feature_mode", FeatureMode.parse(self.feature_mode))
        object.__setattr__(self, "positive_class", Sentiment.parse(self.positive_class))
        if not (self.alpha > 1 and self.alpha_prime > 1):
            raise ValueError("threshold must exceed 1")
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")
        if self.epochs < 1:
            raise ValueError("epochs must be at least 1")
        if self.update_rule not in UPDATE_RULES:
            raise ValueError(f"update_rule must be one of {UPDATE_RULES}")

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            learning_rate=self.learning_rate,
            epochs=self.epochs,
            shuffle_seed=self.seed,
            max_updates=self.max_updates,
            update_rule=self.update_rule,
        )

    def label_of(self, sentiment: Sentiment) -> int:
        return 1 if Sentiment(sentiment) is self.positive_class else -1

    def with_overrides(self, **overrides) -> "PipelineConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
        with open(path, encoding="utf-8") as fh:
            parser.read_string(f"[{_SECTION}]\n" + fh.read(), source=str(path))
        return cls(**_coerce(dict(parser[_SECTION])))


_CONVERTERS = {
    "alpha": float,
    "alpha_prime": float,
    "learning_rate": float,
    "epochs": int,
    "seed": int,
    "max_updates": int,
}


def _coerce(raw: dict) -> dict:
    known = {f.name for f in fields(PipelineConfig)}
    out = {}
    for key, value in raw.items():
        key = key.replace("-", "_")
        if key == "eta":
            key = "learning_rate"
        if key not in known:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = _CONVERTERS.get(key, str)(value.strip().strip('"'))
    return out
