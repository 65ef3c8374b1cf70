"""Synthetic Zipf corpora and planted documents."""

import numpy as np
import pytest

from textthermo import TokenKind, build_corpus_stats, doc_profile, tokenize
from textthermo.synthetic import (
    planted_document,
    zipf_corpus_text,
    zipf_vocabulary,
    zipf_weights,
)


def test_vocabulary_is_alphabetic_and_unique():
    vocab = zipf_vocabulary(800)
    assert len(set(vocab)) == 800
    assert all(w.isalpha() and w.islower() for w in vocab)
    # names survive tokenization as single word tokens
    toks = tokenize(" ".join(vocab[:50]))
    assert [t.normalized for t in toks] == vocab[:50]
    assert all(t.kind is TokenKind.WORD for t in toks)


def test_weights_normalized_and_decreasing():
    w = zipf_weights(100, 1.0)
    assert w.sum() == pytest.approx(1.0, rel=1e-12)
    assert np.all(np.diff(w) < 0)
    assert w[0] / w[9] == pytest.approx(10.0, rel=1e-12)


def test_corpus_text_statistics():
    rng = np.random.default_rng(21)
    text = zipf_corpus_text(vocab_size=300, length=5000, rng=rng)
    stats = build_corpus_stats([tokenize(text)], alpha=0.5)
    assert stats.total_tokens == 5000
    assert stats.vocab_size <= 300
    counts = sorted(stats.counts.values(), reverse=True)
    # Zipf head: the most common word dominates rank ~10 by roughly 10x
    assert counts[0] > 4 * counts[9]


def test_corpus_text_deterministic_per_seed():
    a = zipf_corpus_text(100, 1000, rng=np.random.default_rng(3))
    b = zipf_corpus_text(100, 1000, rng=np.random.default_rng(3))
    c = zipf_corpus_text(100, 1000, rng=np.random.default_rng(4))
    assert a == b
    assert a != c


@pytest.fixture(scope="module")
def experiment():
    rng = np.random.default_rng(100)
    stats = build_corpus_stats(
        [tokenize(zipf_corpus_text(500, 10_000, 1.0, rng))], alpha=0.5
    )
    doc = planted_document(stats, rng)
    return stats, doc


def test_tiers_are_disjoint_and_sized(experiment):
    _, doc = experiment
    kw, common, fn = set(doc.keywords), set(doc.common_words), set(doc.function_words)
    assert len(kw) == 20 and len(common) == 20
    assert kw.isdisjoint(common) and kw.isdisjoint(fn) and common.isdisjoint(fn)
    assert len(fn) > 0


def test_planted_rates(experiment):
    stats, doc = experiment
    profile = doc_profile(tokenize(doc.text))
    for word in doc.keywords:
        corpus_rate = stats.counts[word] / stats.total_tokens
        doc_rate = profile.word_counts[word] / profile.length
        assert doc_rate / corpus_rate == pytest.approx(50.0, rel=0.06)
    for word in doc.common_words:
        corpus_rate = stats.counts[word] / stats.total_tokens
        doc_rate = profile.word_counts[word] / profile.length
        assert doc_rate / corpus_rate == pytest.approx(1.2, rel=0.15)
    for word in doc.function_words:
        corpus_rate = stats.counts[word] / stats.total_tokens
        doc_rate = profile.word_counts[word] / profile.length
        assert doc_rate / corpus_rate == pytest.approx(1.0, rel=0.2)


def test_document_length_close_to_target(experiment):
    _, doc = experiment
    profile = doc_profile(tokenize(doc.text))
    assert 0.95 * 2000 <= profile.length <= 2000


def test_planted_document_rejects_thin_corpus():
    stats = build_corpus_stats([tokenize("a b c a b a")], alpha=0.5)
    with pytest.raises(ValueError):
        planted_document(stats, np.random.default_rng(0))
