import numpy as np
import pytest

from textthermo import build_corpus_stats, doc_profile, tokenize
from textthermo.synthetic import planted_document, zipf_corpus_text


def make_generation(seed: int):
    """One synthetic experiment: Zipf corpus, planted document, its profile."""
    rng = np.random.default_rng(seed)
    corpus_text = zipf_corpus_text(vocab_size=500, length=10_000, exponent=1.0, rng=rng)
    stats = build_corpus_stats([tokenize(corpus_text)], alpha=0.5)
    doc = planted_document(stats, rng)
    profile = doc_profile(tokenize(doc.text))
    return stats, doc, profile


@pytest.fixture(scope="session")
def generation0():
    return make_generation(0)
