"""Render a document at a temperature: retain or strike each word occurrence.

Two modes are provided.  Threshold mode retains an occurrence of word w
exactly when the word has "condensed" at temperature T, i.e. its
specific-heat peak lies at or above T (delta_w >= SCHOTTKY_PEAK_X * T);
it is deterministic and monotone: lowering T only ever retains more.
Sample mode retains each occurrence independently with the Boltzmann
occupancy of the bound state, using a counter-based generator so results
are reproducible and independent of evaluation order.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .corpus import CorpusStats, DocProfile, Token, TokenKind
from .thermo import SCHOTTKY_PEAK_X, document_energy_model

MODES = ("threshold", "sample")

# splitmix64 constants; the counter stream is mix(seed + (i+1)*GOLDEN)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_2 = np.uint64(0x94D049BB133111EB)
_U64_MASK = 0xFFFFFFFFFFFFFFFF


def counter_uniform(seed: int, index) -> np.ndarray:
    """Deterministic uniforms in [0, 1) addressed by (seed, counter index).

    Stateless: the value at a given index never depends on which other
    indices have been evaluated, so occurrences can be sampled serially,
    in parallel or in any order with bit-identical results.
    """
    idx = np.atleast_1d(np.asarray(index, dtype=np.uint64))
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _U64_MASK) + (idx + np.uint64(1)) * _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX_1
        z = (z ^ (z >> np.uint64(27))) * _MIX_2
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * 2.0**-53


@dataclass(frozen=True)
class ExtractionResult:
    """Per-occurrence retained/struck flags in original document order."""

    items: list[tuple[Token, bool]]
    t: float
    mode: str
    seed: int | None  # sample mode only


def extract_at_temperature(
    profile: DocProfile,
    stats: CorpusStats,
    t: float,
    mode: str = "threshold",
    seed: int = 0,
) -> ExtractionResult:
    """Decide, per word occurrence, whether it survives at temperature t.

    Punctuation and number tokens are always retained.  In sample mode the
    i-th word occurrence (in document order) draws counter_uniform(seed, i)
    and is retained when the draw falls below its occupancy.
    """
    if t <= 0:
        raise ValueError("temperature must be positive")
    if mode not in MODES:
        raise ValueError(f"unknown extraction mode: {mode!r}")

    word_positions = [
        i for i, tok in enumerate(profile.tokens) if tok.kind is TokenKind.WORD
    ]
    flags = np.ones(len(profile.tokens), dtype=bool)
    if word_positions:
        model = document_energy_model(profile, stats)
        deltas = np.array(
            [model.gap(profile.tokens[i].normalized) for i in word_positions]
        )
        if mode == "threshold":
            keep = deltas >= SCHOTTKY_PEAK_X * t
        else:
            draws = counter_uniform(seed, np.arange(len(word_positions)))
            keep = draws < expit(deltas / t)
        flags[word_positions] = keep

    items = list(zip(profile.tokens, (bool(f) for f in flags)))
    return ExtractionResult(
        items=items, t=float(t), mode=mode, seed=seed if mode == "sample" else None
    )


def retained_word_fraction(result: ExtractionResult) -> float:
    """Fraction of word occurrences retained (0.0 for a wordless document)."""
    word_flags = [
        kept for tok, kept in result.items if tok.kind is TokenKind.WORD
    ]
    if not word_flags:
        return 0.0
    return sum(word_flags) / len(word_flags)


_MARKUP = {
    "plain": ("~~", "~~"),
    "tty": ("\x1b[9m", "\x1b[29m"),
    "html": ("<s>", "</s>"),
    "latex": ("\\sout{", "}"),
}

FORMATS = tuple(_MARKUP)


def render(result: ExtractionResult, fmt: str = "plain") -> str:
    """Join token surfaces with single spaces, wrapping struck tokens.

    Retained tokens appear verbatim; struck ones are wrapped in the
    format's strike-out markup.
    """
    try:
        pre, post = _MARKUP[fmt]
    except KeyError:
        raise ValueError(f"unknown render format: {fmt!r}") from None
    return " ".join(
        tok.surface if kept else f"{pre}{tok.surface}{post}"
        for tok, kept in result.items
    )
