"""Synthetic tweet-like corpora for experiments and tests.

Nothing here resembles real data beyond the vocabulary; the generators only
need to be deterministic and to exercise every routing rule.
"""

from __future__ import annotations

import random
from typing import Iterator

from ewom.ingest import RawPost, Sentiment

POSITIVE_WORDS = ("面白い", "楽しい", "最高", "神ゲー", "好き", "感動", "おすすめ")
NEGATIVE_WORDS = ("つまらない", "最悪", "クソゲー", "退屈", "嫌い", "残念", "飽きた")
NEUTRAL_WORDS = ("ゲーム", "ストーリー", "グラフィック", "キャラ", "操作", "新作", "プレイ", "続編")
GLUE = ("が", "は", "も", "で", "けど", "、", "！", " ")


def _sentence(rng: random.Random, primary, secondary, noise: float) -> str:
    words = [rng.choice(NEUTRAL_WORDS) for _ in range(rng.randint(1, 3))]
    words += [rng.choice(primary) for _ in range(rng.randint(1, 2))]
    if rng.random() < noise:
        words.append(rng.choice(secondary))
    rng.shuffle(words)
    parts = []
    for w in words:
        parts.append(w)
        parts.append(rng.choice(GLUE))
    return "".join(parts[:-1])


def labeled_corpus(
    n: int, seed: int = 0, positive_fraction: float = 0.5, noise: float = 0.1
) -> list[RawPost]:
    """``n`` impression posts with sentiment labels.

    ``noise`` is the chance a post also contains one word of the opposite
    polarity.
    """
    rng = random.Random(seed)
    posts = []
    for i in range(n):
        positive = rng.random() < positive_fraction
        primary, secondary = (POSITIVE_WORDS, NEGATIVE_WORDS) if positive else (NEGATIVE_WORDS, POSITIVE_WORDS)
        posts.append(
            RawPost(
                id=f"s{i}",
                text=_sentence(rng, primary, secondary, noise),
                sentiment=Sentiment.POSITIVE if positive else Sentiment.NEGATIVE,
            )
        )
    return posts


def mixed_stream(n: int, seed: int = 0) -> Iterator[RawPost]:
    """Unlabelled posts spread over every routing rule."""
    rng = random.Random(seed)
    for i in range(n):
        body = _sentence(rng, rng.choice((POSITIVE_WORDS, NEGATIVE_WORDS)), NEUTRAL_WORDS, 0.2)
        kind = rng.randrange(5)
        urls, media = [], []
        if kind == 0:
            body = f"RT @user{rng.randrange(1000)}: {body}"
        elif kind == 1:
            body = f"@user{rng.randrange(1000)} {body}"
        elif kind == 2:
            urls = [f"https://example.com/{rng.randrange(10**6)}"]
            body = f"{body} https://t.co/{rng.randrange(10**6):x}"
        elif kind == 3:
            media = ["photo"]
        yield RawPost(id=str(i), text=body, expanded_urls=urls, media_types=media)
