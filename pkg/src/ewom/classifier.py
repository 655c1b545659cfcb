"""Linear decision function trained by online mistake-driven updates.

``f(x) = w.x + b``; a document is labelled +1 when ``f(x) >= 0`` and -1
otherwise.  Training starts from ``w = 0, b = 0`` and only touches the
weights when a sample is misclassified.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from ewom.vectorize import FeatureMode, FeatureSpace, SparseVector

log = logging.getLogger(__name__)

MODEL_HEADER = "ewom-model v1"

PERCEPTRON = "perceptron"
# moves along sign(f(x_i)) instead of y_i; diverges on mistakes, kept for comparison runs
DECISION_SIGN = "decision-sign"
UPDATE_RULES = (PERCEPTRON, DECISION_SIGN)


class ModelMismatchError(ValueError):
    pass


class ModelFormatError(ValueError):
    pass


@dataclass
class LinearModel:
    weights: list
    bias: float
    space: FeatureSpace

    def __post_init__(self):
        self.weights = [float(w) for w in self.weights]
        self.bias = float(self.bias)
        if len(self.weights) != len(self.space):
            raise ModelMismatchError(
                f"{len(self.weights)} weights for {len(self.space)} features"
            )
        if not all(math.isfinite(w) for w in self.weights) or not math.isfinite(self.bias):
            raise ValueError("model parameters must be finite")

    @classmethod
    def zeros(cls, space: FeatureSpace) -> "LinearModel":
        return cls([0.0] * len(space), 0.0, space)


@dataclass
class TrainConfig:
    learning_rate: float = 1.0
    epochs: int = 10
    shuffle_seed: int = 0
    max_updates: Optional[int] = None
    update_rule: str = PERCEPTRON

    def __post_init__(self):
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")
        if self.epochs < 1:
            raise ValueError("epochs must be at least 1")
        if self.max_updates is not None and self.max_updates < 1:
            raise ValueError("max_updates must be positive")
        if self.update_rule not in UPDATE_RULES:
            raise ValueError(f"update_rule must be one of {UPDATE_RULES}")


@dataclass(frozen=True)
class LabeledSample:
    vector: SparseVector
    label: int

    def __post_init__(self):
        if self.label not in (1, -1):
            raise ValueError(f"label must be +1 or -1, got {self.label!r}")


@dataclass
class TrainResult:
    model: LinearModel
    updates: int
    epochs_run: int
    last_epoch_errors: int
    history: list = field(default_factory=list)


def decision(model: LinearModel, x: SparseVector) -> float:
    w = model.weights
    total = 0.0
    for k, v in zip(x.indices, x.values):
        if not 0 <= k < len(w):
            raise ModelMismatchError("feature/model mismatch")
        total += w[k] * v
    return total + model.bias


def classify(model: LinearModel, x: SparseVector) -> int:
    return 1 if decision(model, x) >= 0 else -1


def _apply_update(model: LinearModel, x: SparseVector, step: float) -> None:
    w = model.weights
    for k, v in zip(x.indices, x.values):
        w[k] += step * v
    model.bias += step


def train(
    samples: Sequence[LabeledSample],
    space: FeatureSpace,
    cfg: TrainConfig | None = None,
    init: LinearModel | None = None,
) -> TrainResult:
    """Online training, one seeded shuffle of the samples per epoch.

    Starts from ``init`` (copied) if given, else from all-zero weights.
    Stops early once an epoch makes no mistakes, after ``cfg.epochs``, or
    when ``cfg.max_updates`` is reached.
    """
    cfg = cfg or TrainConfig()
    if not samples:
        raise ValueError("no training data")
    labels = {s.label for s in samples}
    if labels != {1, -1}:
        log.warning("training data contains only label %s", labels.pop())
    for s in samples:
        if s.vector.indices and s.vector.indices[-1] >= len(space):
            raise ModelMismatchError("feature/model mismatch")

    if init is None:
        model = LinearModel.zeros(space)
    else:
        if init.space != space:
            raise ModelMismatchError("initial model has a different feature space")
        model = LinearModel(list(init.weights), init.bias, space)
    rng = random.Random(cfg.shuffle_seed)
    order = list(range(len(samples)))
    updates = 0
    errors = 0
    history = []
    epoch = 0
    for epoch in range(1, cfg.epochs + 1):
        rng.shuffle(order)
        errors = 0
        for idx in order:
            s = samples[idx]
            predicted = classify(model, s.vector)
            if predicted == s.label:
                continue
            errors += 1
            direction = s.label if cfg.update_rule == PERCEPTRON else predicted
            _apply_update(model, s.vector, cfg.learning_rate * direction)
            updates += 1
            if cfg.max_updates is not None and updates >= cfg.max_updates:
                break
        history.append(errors)
        if errors == 0 or (cfg.max_updates is not None and updates >= cfg.max_updates):
            break
    return TrainResult(model, updates, epoch, errors, history)


def training_errors(model: LinearModel, samples: Sequence[LabeledSample]) -> int:
    return sum(classify(model, s.vector) != s.label for s in samples)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def save_model(model: LinearModel, path: str | Path) -> None:
    lines = [MODEL_HEADER, f"mode {model.space.mode.value}", f"bias {_fmt(model.bias)}"]
    for k, (word, w) in enumerate(zip(model.space.features, model.weights)):
        lines.append(f"{k}\t{word}\t{_fmt(w)}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path: str | Path) -> LinearModel:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != MODEL_HEADER:
        found = lines[0] if lines else "<empty file>"
        raise ModelFormatError(f"unsupported model version: expected {MODEL_HEADER!r}, got {found!r}")
    if len(lines) < 3:
        raise ModelFormatError("truncated model header")

    key, _, mode = lines[1].partition(" ")
    if key != "mode":
        raise ModelFormatError(f"line 2: expected 'mode', got {lines[1]!r}")
    key, _, bias = lines[2].partition(" ")
    if key != "bias":
        raise ModelFormatError(f"line 3: expected 'bias', got {lines[2]!r}")
    try:
        feature_mode = FeatureMode.parse(mode)
        bias_value = float(bias)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None

    features, weights = [], []
    for lineno, line in enumerate(lines[3:], 4):
        parts = line.split("\t")
        if len(parts) != 3:
            raise ModelFormatError(f"line {lineno}: expected index, word, weight")
        try:
            k, weight = int(parts[0]), float(parts[2])
        except ValueError:
            raise ModelFormatError(f"line {lineno}: bad number in {line!r}") from None
        if k != len(features):
            raise ModelFormatError(f"line {lineno}: feature index {k} out of order")
        features.append(parts[1])
        weights.append(weight)
    if not features:
        raise ModelFormatError("model has no features")
    try:
        return LinearModel(weights, bias_value, FeatureSpace(tuple(features), feature_mode))
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None
