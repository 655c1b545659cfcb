"""Topic routing and entropy-keyword impression classification for short posts."""

from ewom.classifier import LinearModel, TrainConfig, classify, decision, load_model, save_model, train
from ewom.evaluation import confusion, kfold_split, metrics
from ewom.ingest import RawPost, Sentiment, Topic, parse_export, route_topic
from ewom.keywords import build_counts, entropy, select_keywords, word_probabilities
from ewom.segment import Lexicon, filter_content_words
from ewom.vectorize import FeatureMode, build_space

__version__ = "0.1.0"
