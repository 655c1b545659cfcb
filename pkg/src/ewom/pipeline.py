"""Glue between the stages: tokenize, select keywords, train, predict."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from ewom.classifier import LabeledSample, LinearModel, TrainResult, classify, train
from ewom.config import PipelineConfig
from ewom.ingest import Document, RawPost, route_topic, to_document
from ewom.keywords import KeywordReport, build_counts, select_keywords
from ewom.segment import Lexicon, content_tokens
from ewom.vectorize import FeatureSpace, build_space, vectorize

log = logging.getLogger(__name__)


@dataclass
class FitResult:
    report: KeywordReport
    space: FeatureSpace
    training: TrainResult

    @property
    def model(self) -> LinearModel:
        return self.training.model


def load_lexicon(cfg: PipelineConfig) -> Lexicon:
    return Lexicon.from_files(cfg.lexicon_path, cfg.stopword_path)


def tokenized(post: RawPost, lexicon: Lexicon, route: bool = True) -> Document:
    doc = to_document(post, route_topic(post) if route else None)
    doc.tokens = content_tokens(post.text, lexicon)
    return doc


def labeled_documents(posts: Iterable[RawPost], lexicon: Lexicon) -> list[Document]:
    """Tokenized documents for every post carrying a sentiment label."""
    docs, unlabeled = [], 0
    for post in posts:
        if post.sentiment is None:
            unlabeled += 1
            continue
        docs.append(tokenized(post, lexicon))
    if unlabeled:
        log.warning("%d posts without a sentiment label ignored", unlabeled)
    return docs


def samples_for(docs: Sequence[Document], space: FeatureSpace, cfg: PipelineConfig) -> list[LabeledSample]:
    return [LabeledSample(vectorize(d, space), cfg.label_of(d.sentiment)) for d in docs]


def fit(docs: Sequence[Document], cfg: PipelineConfig) -> FitResult:
    counts = build_counts(docs)
    report = select_keywords(counts, cfg.alpha, cfg.alpha_prime)
    space = build_space(report, cfg.feature_mode)
    result = train(samples_for(docs, space, cfg), space, cfg.train_config())
    return FitResult(report, space, result)


def predict(model: LinearModel, docs: Sequence[Document]) -> list[int]:
    return [classify(model, vectorize(d, model.space)) for d in docs]
