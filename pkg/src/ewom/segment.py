"""Dictionary longest-match segmentation with a script-run fallback.

Stands in for a full morphological analyzer.  Text is scanned left to right;
at each position the longest lexicon entry wins, otherwise a maximal run of
one character class is emitted.  Whitespace separates tokens and is dropped.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

KANJI = "kanji"
HIRAGANA = "hiragana"
KATAKANA = "katakana"
LATIN = "latin"
DIGIT = "digit"
OTHER = "other"


def char_class(ch: str) -> str:
    cp = ord(ch)
    if 0x3040 <= cp <= 0x309F:
        return HIRAGANA
    if 0x30A0 <= cp <= 0x30FF:
        return KATAKANA
    if 0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF or 0xF900 <= cp <= 0xFAFF:
        return KANJI
    if ("a" <= ch <= "z") or ("A" <= ch <= "Z"):
        return LATIN
    if 0xFF21 <= cp <= 0xFF3A or 0xFF41 <= cp <= 0xFF5A:
        return LATIN
    if "0" <= ch <= "9" or 0xFF10 <= cp <= 0xFF19:
        return DIGIT
    return OTHER


def _read_word_file(path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [w for w in (line.strip() for line in fh) if w and not w.startswith("#")]


@dataclass(frozen=True)
class Lexicon:
    entries: frozenset = field(default_factory=frozenset)
    stopwords: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        entries = frozenset(self.entries)
        stopwords = frozenset(self.stopwords)
        for w in entries | stopwords:
            if not w:
                raise ValueError("lexicon entries must be non-empty")
            if any(c.isspace() for c in w):
                raise ValueError(f"lexicon entry contains whitespace: {w!r}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "stopwords", stopwords)
        object.__setattr__(self, "_max_len", max(map(len, entries), default=0))
        object.__setattr__(self, "_initials", frozenset(w[0] for w in entries))

    @property
    def max_entry_length(self) -> int:
        return self._max_len

    @classmethod
    def from_files(
        cls, lexicon_path: Optional[str | Path] = None, stopword_path: Optional[str | Path] = None
    ) -> "Lexicon":
        """Load word lists; a missing path falls back to the bundled list."""
        return cls(
            entries=_read_word_file(lexicon_path) if lexicon_path else default_entries(),
            stopwords=_read_word_file(stopword_path) if stopword_path else default_stopwords(),
        )


def _bundled(name: str) -> list[str]:
    return _read_word_file(resources.files("ewom") / "data" / name)


def default_entries() -> list[str]:
    return _bundled("lexicon_ja.txt")


def default_stopwords() -> list[str]:
    return _bundled("stopwords_ja.txt")


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple = ()
    source_spans: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "source_spans", tuple(tuple(s) for s in self.source_spans))
        if len(self.tokens) != len(self.source_spans):
            raise ValueError("tokens and spans differ in length")

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def _longest_match(text: str, i: int, lexicon: Lexicon) -> int:
    """Length of the longest entry starting at i, or 0."""
    if text[i] not in lexicon._initials:
        return 0
    entries = lexicon.entries
    for n in range(min(lexicon.max_entry_length, len(text) - i), 0, -1):
        if text[i : i + n] in entries:
            return n
    return 0


def segment(text: str, lexicon: Lexicon) -> TokenStream:
    tokens: list[str] = []
    spans: list[tuple[int, int]] = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _longest_match(text, i, lexicon)
        if m:
            end = i + m
        else:
            cls = char_class(text[i])
            end = i + 1
            # a run also stops where a lexicon word begins
            while (
                end < n
                and not text[end].isspace()
                and char_class(text[end]) == cls
                and not _longest_match(text, end, lexicon)
            ):
                end += 1
        tokens.append(text[i:end])
        spans.append((i, end))
        i = end
    return TokenStream(tokens, spans)


def is_symbolic(token: str) -> bool:
    """True if every character is punctuation or a symbol."""
    return all(unicodedata.category(c)[0] in "PS" for c in token)


def filter_content_words(stream: TokenStream, lexicon: Lexicon) -> TokenStream:
    kept = [
        (tok, span)
        for tok, span in zip(stream.tokens, stream.source_spans)
        if tok not in lexicon.stopwords and not is_symbolic(tok)
    ]
    return TokenStream([t for t, _ in kept], [s for _, s in kept])


def content_tokens(text: str, lexicon: Lexicon) -> list[str]:
    """Segment and filter in one go; what the pipeline actually uses."""
    return list(filter_content_words(segment(text, lexicon), lexicon).tokens)


def reconstruct(text: str, spans: Sequence[tuple[int, int]]) -> str:
    """Rebuild text from spans, refilling the gaps (which must be whitespace)."""
    out, pos = [], 0
    for start, end in spans:
        gap = text[pos:start]
        if gap.strip():
            raise ValueError(f"non-whitespace gap at {pos}:{start}")
        out.append(gap)
        out.append(text[start:end])
        pos = end
    if text[pos:].strip():
        raise ValueError("non-whitespace tail")
    out.append(text[pos:])
    return "".join(out)
