"""Temperature structure of document words: peaks, classes, keyword ranking.

A word with a positive gap has a single Schottky-style specific-heat peak
at T* = delta / SCHOTTKY_PEAK_X; the position of that peak separates
keywords (high T*), common words (intermediate T*) and function words
(low T* or no peak at all).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.signal import peak_prominences

from .corpus import CorpusStats, DocProfile
from .thermo import SCHOTTKY_PEAK_X, ThermoCurve, document_energy_model

# Peak-temperature thresholds (t_lo, t_hi) separating the three classes.
DEFAULT_BANDS = (0.03, 0.12)

DEFAULT_GRID_RANGE = (0.005, 200.0)
DEFAULT_GRID_STEPS = 200


class WordClass(Enum):
    KEYWORD = "keyword"
    COMMON = "common"
    FUNCTION = "function"


@dataclass(frozen=True)
class WordThermo:
    """Per-word thermodynamic summary used for classification and ranking."""

    word: str
    delta: float
    n: int
    t_star: float | None
    score: float  # n * delta, the word's log-likelihood-ratio mass
    word_class: WordClass


def peak_temperature(delta: float) -> float | None:
    """Temperature of a word's specific-heat maximum; None for delta <= 0."""
    if delta <= 0:
        return None
    return delta / SCHOTTKY_PEAK_X


def default_temperature_grid(
    t_min: float = DEFAULT_GRID_RANGE[0],
    t_max: float = DEFAULT_GRID_RANGE[1],
    steps: int = DEFAULT_GRID_STEPS,
    log: bool = True,
) -> np.ndarray:
    """Temperature grid spanning both the function-word and keyword regimes."""
    if t_min <= 0 or t_max <= t_min:
        raise ValueError("grid bounds must satisfy 0 < t_min < t_max")
    if steps < 2:
        raise ValueError("grid needs at least 2 steps")
    if log:
        return np.geomspace(t_min, t_max, steps)
    return np.linspace(t_min, t_max, steps)


def find_peaks(curve: ThermoCurve, min_prominence: float = 0.05) -> list[tuple[float, float]]:
    """Local maxima of a sampled C_V curve, ordered by descending temperature.

    A grid point is a peak when it is strictly greater than both neighbours
    and its prominence exceeds min_prominence times the curve maximum.
    """
    if len(curve) < 3:
        raise ValueError("grid too short for peak detection")
    cv = np.asarray(curve.cv, dtype=float)
    interior = (cv[1:-1] > cv[:-2]) & (cv[1:-1] > cv[2:])
    idx = np.nonzero(interior)[0] + 1
    if idx.size == 0 or cv.max() <= 0:
        return []
    prominences = peak_prominences(cv, idx)[0]
    keep = prominences > min_prominence * cv.max()
    peaks = [(float(curve.grid[i]), float(cv[i])) for i in idx[keep]]
    peaks.sort(key=lambda p: -p[0])
    return peaks


def classify_words(
    profile: DocProfile,
    stats: CorpusStats,
    bands: tuple[float, float] = DEFAULT_BANDS,
) -> list[WordThermo]:
    """Classify every document word as keyword, common or function word.

    A word is a keyword when its peak temperature reaches t_hi, a function
    word when it has no peak or peaks below t_lo, and common otherwise.
    The result is sorted by descending score with lexicographic tie-break,
    so it is independent of evaluation order.
    """
    t_lo, t_hi = bands
    if not t_lo < t_hi:
        raise ValueError("bands must satisfy t_lo < t_hi")
    model = document_energy_model(profile, stats)
    out = []
    for i, word in enumerate(model.words):
        delta = float(model.delta[i])
        n = int(model.n[i])
        t_star = peak_temperature(delta)
        if t_star is None or t_star < t_lo:
            word_class = WordClass.FUNCTION
        elif t_star >= t_hi:
            word_class = WordClass.KEYWORD
        else:
            word_class = WordClass.COMMON
        out.append(WordThermo(word, delta, n, t_star, n * delta, word_class))
    out.sort(key=lambda wt: (-wt.score, wt.word))
    return out


def rank_keywords(words: list[WordThermo], k: int) -> list[WordThermo]:
    """Top-k words by score = n * delta, ties broken lexicographically."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sorted(words, key=lambda wt: (-wt.score, wt.word))[:k]


def keyword_report(
    document: str,
    words: list[WordThermo],
    bands: tuple[float, float] = DEFAULT_BANDS,
    k: int | None = None,
) -> dict:
    """JSON-ready keyword report, sorted by descending score."""
    ranked = rank_keywords(words, k if k is not None else max(1, len(words)))
    return {
        "document": document,
        "bands": [bands[0], bands[1]],
        "words": [
            {
                "word": wt.word,
                "n": wt.n,
                "delta": wt.delta,
                "t_star": wt.t_star,
                "class": wt.word_class.value,
                "score": wt.score,
            }
            for wt in ranked
        ],
    }
