"""Synthetic Zipf corpora and documents with planted keywords.

The generators here back the test-suite and the demos: a reference corpus
is sampled from a Zipf rank-frequency law, and documents are assembled
from three word populations with known over-representation factors -- a
bed of words at their corpus rate (function-word analogues), a handful of
mildly boosted common words, and strongly boosted planted keywords.
Document counts are constructed from the target rates directly, so each
tier's energy gap is known up to rounding.
"""

import string
from dataclasses import dataclass

import numpy as np

from .corpus import CorpusStats


def zipf_vocabulary(size: int) -> list[str]:
    """Pure-alphabetic word names ("aaaa", "aaab", ...) for synthetic text."""
    letters = string.ascii_lowercase
    width = 1
    while len(letters) ** width < size:
        width += 1
    words = []
    for i in range(size):
        name = []
        v = i
        for _ in range(width):
            v, r = divmod(v, len(letters))
            name.append(letters[r])
        words.append("".join(reversed(name)))
    return words


def zipf_weights(size: int, exponent: float = 1.0) -> np.ndarray:
    """Normalized rank-frequency weights 1 / rank**exponent."""
    ranks = np.arange(1, size + 1, dtype=float)
    w = ranks**-exponent
    return w / w.sum()


def zipf_corpus_text(
    vocab_size: int = 500,
    length: int = 10_000,
    exponent: float = 1.0,
    rng: np.random.Generator | None = None,
) -> str:
    """Space-joined corpus sampled i.i.d. from a Zipf rank-frequency law."""
    rng = rng or np.random.default_rng()
    vocab = zipf_vocabulary(vocab_size)
    draws = rng.choice(vocab_size, size=length, p=zipf_weights(vocab_size, exponent))
    return " ".join(vocab[i] for i in draws)


@dataclass
class SyntheticDocument:
    """Generated document text plus the identity of each planted tier."""

    text: str
    keywords: list[str]
    common_words: list[str]
    function_words: list[str]


def planted_document(
    stats: CorpusStats,
    rng: np.random.Generator,
    n_keywords: int = 20,
    keyword_boost: float = 50.0,
    keyword_count_range: tuple[int, int] = (2, 4),
    n_common: int = 20,
    common_boost: float = 1.2,
    common_count_range: tuple[int, int] = (25, 80),
    length: int = 2000,
) -> SyntheticDocument:
    """Build a document with known over-representation structure.

    Keywords appear at keyword_boost times their corpus rate and common
    words at common_boost times theirs; the remaining budget is filled
    with the most frequent corpus words at their corpus rate, truncated
    where a word's document count would fall below one.  Token order is
    shuffled.
    """
    total = stats.total_tokens
    ranked = sorted(stats.counts.items(), key=lambda kv: (-kv[1], kv[0]))

    def pick(count_range: tuple[int, int], k: int, taken: set[str]) -> list[str]:
        lo, hi = count_range
        pool = [w for w, c in ranked if lo <= c <= hi and w not in taken]
        if len(pool) < k:
            raise ValueError(
                f"corpus has only {len(pool)} words with counts in {count_range}, "
                f"need {k}"
            )
        return sorted(rng.choice(pool, size=k, replace=False).tolist())

    keywords = pick(keyword_count_range, n_keywords, set())
    taken = set(keywords)
    common = pick(common_count_range, n_common, taken)
    taken |= set(common)

    doc_counts: dict[str, int] = {}
    for words, boost in ((keywords, keyword_boost), (common, common_boost)):
        for w in words:
            doc_counts[w] = max(1, round(length * boost * stats.counts[w] / total))

    budget = length - sum(doc_counts.values())
    if budget <= 0:
        raise ValueError("document length too small for the boosted tiers")
    function_words: list[str] = []
    for w, c in ranked:
        if w in taken:
            continue
        n = round(length * c / total)
        if n < 1 or n > budget:
            break
        doc_counts[w] = n
        function_words.append(w)
        budget -= n

    tokens = [w for w, n in doc_counts.items() for _ in range(n)]
    rng.shuffle(tokens)
    return SyntheticDocument(
        text=" ".join(tokens),
        keywords=keywords,
        common_words=common,
        function_words=function_words,
    )
