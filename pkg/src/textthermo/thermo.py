"""Closed-form thermodynamics of words as two-level text/corpus systems.

Each word of a document is treated as a two-level system: the text-bound
state sits at energy zero and the free (language) state at the energy gap
delta = ln(p_doc / p_corpus), measured in nats.  The document's occurrence
count of the word acts as a degeneracy of independent copies.  Partition
function, occupancy, internal energy, entropy and specific heat all follow
in closed form:

    Z = 1 + exp(-delta/T)
    r = 1 / (1 + exp(-delta/T))          occupancy of the bound state
    U = delta * (1 - r)
    S = ln Z + U / T
    C = (delta/T)^2 * r * (1 - r)        the Schottky form

Temperature shares the units of delta, so all quantities are dimensionless
or in nats.  Exponentials are evaluated through expit/logaddexp, which
saturate to the exact limiting values once |delta|/T exceeds roughly 700.
"""

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.special import expit

from .corpus import CorpusStats, DocProfile, corpus_probability

# Unique positive root of x * tanh(x/2) = 2: the peak of the two-level
# specific heat sits at T = delta / SCHOTTKY_PEAK_X.
SCHOTTKY_PEAK_X = 2.399357280515467


def energy_gap(p_doc: float, p_corpus: float) -> float:
    """Energy gap ln(p_doc / p_corpus) in nats.

    Positive when the word is over-represented in the document relative to
    the reference corpus.
    """
    if not 0.0 < p_doc <= 1.0 or not 0.0 < p_corpus <= 1.0:
        raise ValueError("probabilities must lie in (0, 1]")
    return math.log(p_doc / p_corpus)


def _check_temperature(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise ValueError("temperature must be positive")
    return t


def occupancy(delta, t):
    """Boltzmann probability of the text-bound state, 1/(1 + exp(-delta/T)).

    Accepts scalars or arrays (broadcasting).  Monotone increasing in
    delta; tends to 1 as T -> 0 for delta > 0 and to 1/2 as T -> inf.
    """
    t = _check_temperature(t)
    return expit(np.asarray(delta, dtype=float) / t)


def _state_arrays(x: np.ndarray):
    """Thermodynamic building blocks as functions of x = delta/T.

    Returns (r, u_frac, ln_z, s, c) where u_frac = 1 - r so that
    U = delta * u_frac.  The entropy is evaluated through |x|: S is even
    in x, and the |x| form adds two small positive terms instead of
    cancelling two large ones when x is large and negative.
    """
    a = np.abs(x)
    r = expit(x)
    u_frac = expit(-x)
    ln_z = np.logaddexp(0.0, -x)
    s = np.logaddexp(0.0, -a) + a * expit(-a)
    c = x * x * r * u_frac
    return r, u_frac, ln_z, s, c


@dataclass(frozen=True)
class SubsystemState:
    """All thermodynamic quantities of one two-level word at one temperature."""

    t: float
    z: float
    r: float
    u: float
    s: float
    c: float


def subsystem_state(delta: float, t: float) -> SubsystemState:
    """Evaluate the closed-form state of a single word subsystem."""
    t_arr = _check_temperature(t)
    x = np.float64(delta) / t_arr
    r, u_frac, ln_z, s, c = _state_arrays(x)
    with np.errstate(over="ignore"):
        # Z itself may overflow to inf for strongly negative gaps; ln Z
        # stays finite and every derived quantity is computed stably.
        z = 1.0 + np.exp(-x)
    return SubsystemState(
        t=float(t),
        z=float(z),
        r=float(r),
        u=float(delta) * float(u_frac),
        s=float(s),
        c=float(c),
    )


@dataclass
class EnergyModel:
    """Per-word energy gaps and degeneracies of one document against a corpus."""

    words: list[str]
    delta: np.ndarray
    n: np.ndarray
    p_doc: np.ndarray
    p_corpus: np.ndarray

    def __post_init__(self):
        self._index = {w: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    def gap(self, word: str) -> float:
        return float(self.delta[self._index[word]])

    def count(self, word: str) -> int:
        return int(self.n[self._index[word]])


def document_energy_model(profile: DocProfile, stats: CorpusStats) -> EnergyModel:
    """Build the per-word energy model of a document.

    Degeneracies are the document's occurrence counts; the corpus acts only
    as the bath fixing p_corpus.  Smoothing (alpha > 0) keeps every gap
    finite even for words the corpus has never seen.
    """
    if profile.length == 0:
        raise ValueError("empty document profile")
    words = sorted(profile.word_counts)
    n = np.array([profile.word_counts[w] for w in words], dtype=np.int64)
    p_doc = n / profile.length
    p_corpus = np.array([corpus_probability(stats, w) for w in words], dtype=float)
    delta = np.log(p_doc / p_corpus)
    return EnergyModel(words=words, delta=delta, n=n, p_doc=p_doc, p_corpus=p_corpus)


@dataclass
class ThermoCurve:
    """Sampled U(T), S(T), C_V(T) on a temperature grid."""

    grid: np.ndarray
    u: np.ndarray
    s: np.ndarray
    cv: np.ndarray
    label: str = "total"

    def __len__(self) -> int:
        return len(self.grid)

    def to_csv(self) -> str:
        lines = ["T,U,S,Cv"]
        for t, u, s, cv in zip(self.grid, self.u, self.s, self.cv):
            lines.append(f"{t:.17g},{u:.17g},{s:.17g},{cv:.17g}")
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8")


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("temperature grid must be a non-empty 1-d array")
    if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
        raise ValueError("temperature grid must be positive and strictly increasing")
    return grid


_BLOCK = 1024  # words per block; bounds the (words x grid) work arrays


def ensemble_curves(
    model: EnergyModel,
    grid,
    words: set[str] | None = None,
    label: str | None = None,
) -> ThermoCurve:
    """Aggregate U, S and C_V over an ensemble of word subsystems.

    Each word contributes n_w independent copies; totals are plain sums
    over the (optionally filtered) vocabulary, evaluated per grid point.
    """
    grid = _check_grid(grid)
    if words is None:
        mask = np.ones(len(model), dtype=bool)
    else:
        mask = np.array([w in words for w in model.words], dtype=bool)
    if not mask.any():
        raise ValueError("empty ensemble")

    delta = model.delta[mask]
    n = model.n[mask].astype(float)
    u = np.zeros_like(grid)
    s = np.zeros_like(grid)
    cv = np.zeros_like(grid)
    for start in range(0, delta.size, _BLOCK):
        d = delta[start : start + _BLOCK, None]
        w = n[start : start + _BLOCK, None]
        x = d / grid[None, :]
        _, u_frac, _, s_k, c_k = _state_arrays(x)
        u += (w * d * u_frac).sum(axis=0)
        s += (w * s_k).sum(axis=0)
        cv += (w * c_k).sum(axis=0)
    return ThermoCurve(grid=grid, u=u, s=s, cv=cv, label=label or "total")
