"""Tokenization and word-frequency statistics for documents and reference corpora."""

import json
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

DEFAULT_ALPHA = 0.5

STATS_FILE_VERSION = 1


class TokenKind(Enum):
    WORD = "word"
    PUNCTUATION = "punctuation"
    NUMBER = "number"


@dataclass(frozen=True)
class Token:
    """A surface token with its byte span in the UTF-8 encoded source."""

    surface: str
    normalized: str
    kind: TokenKind
    span: tuple[int, int]


# Letter runs first, then digit runs; any other non-whitespace character
# (hyphens and punctuation included) stands alone.
_TOKEN_RE = re.compile(r"(?P<word>[^\W\d_]+)|(?P<number>\d+)|(?P<punct>\S)")

_KIND_BY_GROUP = {
    "word": TokenKind.WORD,
    "number": TokenKind.NUMBER,
    "punct": TokenKind.PUNCTUATION,
}


def tokenize(text: str, lowercase: bool = True) -> list[Token]:
    """Split text into word, number and punctuation tokens.

    Words are maximal runs of letters, numbers are digit runs, and every
    other non-whitespace character is a standalone punctuation token, so
    the spans tile the non-whitespace bytes of the input exactly.  With
    the default settings the normalized form of a word is its lowercase
    surface.
    """
    # byte offset of each character in the UTF-8 encoding
    offsets = [0]
    for ch in text:
        offsets.append(offsets[-1] + len(ch.encode("utf-8")))

    tokens: list[Token] = []
    for m in _TOKEN_RE.finditer(text):
        surface = m.group()
        kind = _KIND_BY_GROUP[m.lastgroup]
        normalized = surface.lower() if lowercase else surface
        tokens.append(
            Token(surface, normalized, kind, (offsets[m.start()], offsets[m.end()]))
        )
    return tokens


@dataclass
class CorpusStats:
    """Reference-corpus word counts plus the additive smoothing constant."""

    counts: dict[str, int]
    total_tokens: int
    alpha: float = DEFAULT_ALPHA

    @property
    def vocab_size(self) -> int:
        return len(self.counts)


def empty_stats(alpha: float = DEFAULT_ALPHA) -> CorpusStats:
    """The identity element for merge_stats."""
    return CorpusStats(counts={}, total_tokens=0, alpha=alpha)


def build_corpus_stats(
    documents: Iterable[Sequence[Token]], alpha: float = DEFAULT_ALPHA
) -> CorpusStats:
    """Count word tokens over a stream of tokenized documents.

    Only kind=word tokens contribute; punctuation and numbers pass through
    pipelines but never enter the statistics.  Raises ValueError when the
    stream contains no word tokens at all, since probabilities would be
    undefined.
    """
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    counts: Counter[str] = Counter()
    for tokens in documents:
        for tok in tokens:
            if tok.kind is TokenKind.WORD:
                counts[tok.normalized] += 1
    total = sum(counts.values())
    if total == 0:
        raise ValueError("empty corpus")
    return CorpusStats(counts=dict(counts), total_tokens=total, alpha=alpha)


def merge_stats(a: CorpusStats, b: CorpusStats) -> CorpusStats:
    """Combine two corpora by summing counts.

    Commutative and associative with empty_stats as identity, so corpora
    may be ingested concurrently and merged in any association order.
    """
    if a.alpha != b.alpha:
        raise ValueError(f"mismatched alpha: {a.alpha} != {b.alpha}")
    counts = Counter(a.counts)
    counts.update(b.counts)
    return CorpusStats(
        counts=dict(counts),
        total_tokens=a.total_tokens + b.total_tokens,
        alpha=a.alpha,
    )


def corpus_probability(stats: CorpusStats, word: str) -> float:
    """Smoothed probability of a word under the reference corpus.

    Returns (count + alpha) / (total + alpha * (vocab_size + 1)); the extra
    alpha in the denominator is a single pooled slot for all unseen words,
    so probabilities over the vocabulary plus that slot sum to one.
    """
    if stats.total_tokens == 0:
        raise ValueError("empty corpus")
    count = stats.counts.get(word, 0)
    if stats.alpha == 0.0:
        if count == 0:
            raise ValueError(f"zero-probability word: {word!r}")
        return count / stats.total_tokens
    return (count + stats.alpha) / (
        stats.total_tokens + stats.alpha * (stats.vocab_size + 1)
    )


@dataclass
class DocProfile:
    """A document as an ordered token sequence plus word occurrence counts."""

    tokens: list[Token]
    word_counts: dict[str, int]
    length: int  # number of kind=word tokens

    def probability(self, word: str) -> float:
        """Relative frequency of a word within this document."""
        if self.length == 0:
            raise ValueError("empty document profile")
        return self.word_counts.get(word, 0) / self.length


def doc_profile(tokens: Sequence[Token]) -> DocProfile:
    """Build the occurrence profile of a tokenized document."""
    counts: Counter[str] = Counter(
        tok.normalized for tok in tokens if tok.kind is TokenKind.WORD
    )
    return DocProfile(
        tokens=list(tokens),
        word_counts=dict(counts),
        length=sum(counts.values()),
    )


def stats_to_json(stats: CorpusStats) -> str:
    """Serialize corpus stats to the versioned JSON format.

    Keys are sorted, so identical statistics always produce byte-identical
    output.
    """
    payload = {
        "version": STATS_FILE_VERSION,
        "alpha": stats.alpha,
        "total_tokens": stats.total_tokens,
        "counts": stats.counts,
    }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def stats_from_json(text: str) -> CorpusStats:
    """Parse and validate the JSON corpus format."""
    payload = json.loads(text)
    version = payload.get("version")
    if version != STATS_FILE_VERSION:
        raise ValueError(f"unsupported corpus file version: {version!r}")
    try:
        counts = payload["counts"]
        total = payload["total_tokens"]
        alpha = payload["alpha"]
    except KeyError as exc:
        raise ValueError(f"corpus file missing field {exc}") from None
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if any(not isinstance(c, int) or c < 1 for c in counts.values()):
        raise ValueError("corpus counts must be integers >= 1")
    if sum(counts.values()) != total:
        raise ValueError("total_tokens does not match the sum of counts")
    return CorpusStats(counts=dict(counts), total_tokens=total, alpha=alpha)


def save_stats(stats: CorpusStats, path: str | Path) -> None:
    Path(path).write_text(stats_to_json(stats), encoding="utf-8")


def load_stats(path: str | Path) -> CorpusStats:
    return stats_from_json(Path(path).read_text(encoding="utf-8"))
