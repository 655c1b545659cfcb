"""Reading tweet exports and routing posts to topics.

Two export formats are understood:

* JSONL, one object per line with keys ``id``, ``text`` and optionally
  ``expanded_urls``, ``media_types`` and ``sentiment``.
* TSV without header: ``id``, ``text``, semicolon-joined urls,
  semicolon-joined media types, and an optional fifth sentiment column.

Malformed records are logged and counted, never fatal.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Optional

log = logging.getLogger(__name__)


class Topic(str, enum.Enum):
    INCLUDED_URL = "IncludedUrl"
    INCLUDE_PHOTO = "IncludePhoto"
    ABOUT_IMPRESSIONS = "AboutImpressions"
    RETWEETED = "Retweeted"
    REPLY = "Reply"


class Sentiment(str, enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"

    @classmethod
    def parse(cls, value) -> "Sentiment":
        if isinstance(value, cls):
            return value
        v = str(value).strip().lower()
        if v in ("positive", "pos", "+1", "1", "p"):
            return cls.POSITIVE
        if v in ("negative", "neg", "-1", "n"):
            return cls.NEGATIVE
        raise ValueError(f"unknown sentiment label {value!r}")


@dataclass
class RawPost:
    id: str
    text: str
    expanded_urls: list[str] = field(default_factory=list)
    media_types: list[str] = field(default_factory=list)
    sentiment: Optional[Sentiment] = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("post id must be non-empty")

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "text": self.text,
            "expanded_urls": list(self.expanded_urls),
            "media_types": list(self.media_types),
        }
        if self.sentiment is not None:
            out["sentiment"] = self.sentiment.value
        return out


@dataclass(frozen=True)
class TopicAssignment:
    topic: Topic
    matched_rule: str


@dataclass
class Document:
    id: str
    text: str
    tokens: list[str] = field(default_factory=list)
    topic: Optional[TopicAssignment] = None
    sentiment: Optional[Sentiment] = None


@dataclass
class ParseStats:
    read: int = 0
    skipped: int = 0


class Format(str, enum.Enum):
    JSONL = "jsonl"
    TSV = "tsv"


def _string_list(value, key: str) -> list[str]:
    if value is None:
        return []
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ValueError(f"{key} must be a list of strings")
    return list(value)


def _post_from_json(obj) -> RawPost:
    if not isinstance(obj, dict):
        raise ValueError("record is not an object")
    pid, text = obj.get("id"), obj.get("text")
    # numeric ids are common in real exports
    if isinstance(pid, int) and not isinstance(pid, bool):
        pid = str(pid)
    if not isinstance(pid, str) or not pid:
        raise ValueError("missing id")
    if not isinstance(text, str):
        raise ValueError("missing text")
    sentiment = obj.get("sentiment")
    return RawPost(
        id=pid,
        text=text,
        expanded_urls=_string_list(obj.get("expanded_urls"), "expanded_urls"),
        media_types=_string_list(obj.get("media_types"), "media_types"),
        sentiment=Sentiment.parse(sentiment) if sentiment is not None else None,
    )


def _split_field(value: str) -> list[str]:
    return [v for v in value.split(";") if v]


def _post_from_tsv(line: str) -> RawPost:
    cols = line.split("\t")
    if len(cols) < 2 or len(cols) > 5:
        raise ValueError(f"expected 2 to 5 columns, got {len(cols)}")
    cols += [""] * (5 - len(cols))
    pid, text, urls, media, sentiment = cols
    if not pid:
        raise ValueError("missing id")
    return RawPost(
        id=pid,
        text=text,
        expanded_urls=_split_field(urls),
        media_types=_split_field(media),
        sentiment=Sentiment.parse(sentiment) if sentiment else None,
    )


def iter_posts(
    lines: Iterable[str], fmt: Format | str = Format.JSONL, stats: ParseStats | None = None
) -> Iterator[RawPost]:
    """Lazily parse export lines, skipping (and counting) malformed ones."""
    fmt = Format(fmt)
    stats = stats if stats is not None else ParseStats()
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        try:
            if fmt is Format.JSONL:
                post = _post_from_json(json.loads(line))
            else:
                post = _post_from_tsv(line)
        except ValueError as exc:  # json.JSONDecodeError is a ValueError
            stats.skipped += 1
            log.warning("line %d skipped: %s", lineno, exc)
            continue
        stats.read += 1
        yield post


def iter_export(
    path: str | Path, fmt: Format | str = Format.JSONL, stats: ParseStats | None = None
) -> Iterator[RawPost]:
    with open(path, encoding="utf-8") as fh:
        yield from iter_posts(fh, fmt, stats)


def parse_export(
    path: str | Path, fmt: Format | str = Format.JSONL, stats: ParseStats | None = None
) -> list[RawPost]:
    """Read a whole export file into memory.

    Raises ``OSError`` if the file cannot be read. Pass a ``ParseStats`` to
    learn how many records were skipped.
    """
    return list(iter_export(path, fmt, stats))


def write_jsonl(posts: Iterable[RawPost], fh: IO[str]) -> int:
    n = 0
    for post in posts:
        fh.write(json.dumps(post.to_json(), ensure_ascii=False) + "\n")
        n += 1
    return n


URL_MARKERS = ("http://", "https://", ".com")


def route_topic(post: RawPost) -> TopicAssignment:
    """Assign exactly one topic; the first matching rule wins.

    Order: retweet prefix, reply prefix, URL marker, photo, then the
    impressions topic as the default.
    """
    text = post.text
    if text.startswith("RT"):
        return TopicAssignment(Topic.RETWEETED, "text starts with 'RT'")
    if text.startswith("@"):
        return TopicAssignment(Topic.REPLY, "text starts with '@'")
    for source in (text, *post.expanded_urls):
        for marker in URL_MARKERS:
            if marker in source:
                return TopicAssignment(Topic.INCLUDED_URL, f"contains {marker!r}")
    if "photo" in post.media_types:
        return TopicAssignment(Topic.INCLUDE_PHOTO, "media contains 'photo'")
    return TopicAssignment(Topic.ABOUT_IMPRESSIONS, "default")


def to_document(post: RawPost, topic: TopicAssignment | None = None) -> Document:
    return Document(id=post.id, text=post.text, topic=topic, sentiment=post.sentiment)
