"""Thermodynamic text analysis: words as two-level systems against a corpus."""

from .analysis import (
    DEFAULT_BANDS,
    WordClass,
    WordThermo,
    classify_words,
    default_temperature_grid,
    find_peaks,
    keyword_report,
    peak_temperature,
    rank_keywords,
)
from .corpus import (
    DEFAULT_ALPHA,
    CorpusStats,
    DocProfile,
    Token,
    TokenKind,
    build_corpus_stats,
    corpus_probability,
    doc_profile,
    empty_stats,
    load_stats,
    merge_stats,
    save_stats,
    stats_from_json,
    stats_to_json,
    tokenize,
)
from .extraction import (
    ExtractionResult,
    counter_uniform,
    extract_at_temperature,
    render,
    retained_word_fraction,
)
from .thermo import (
    SCHOTTKY_PEAK_X,
    EnergyModel,
    SubsystemState,
    ThermoCurve,
    document_energy_model,
    energy_gap,
    ensemble_curves,
    occupancy,
    subsystem_state,
)

__version__ = "0.1.0"

__all__ = [
    "CorpusStats",
    "DEFAULT_ALPHA",
    "DEFAULT_BANDS",
    "DocProfile",
    "EnergyModel",
    "ExtractionResult",
    "SCHOTTKY_PEAK_X",
    "SubsystemState",
    "ThermoCurve",
    "Token",
    "TokenKind",
    "WordClass",
    "WordThermo",
    "build_corpus_stats",
    "classify_words",
    "corpus_probability",
    "counter_uniform",
    "default_temperature_grid",
    "doc_profile",
    "document_energy_model",
    "empty_stats",
    "energy_gap",
    "ensemble_curves",
    "extract_at_temperature",
    "find_peaks",
    "keyword_report",
    "load_stats",
    "merge_stats",
    "occupancy",
    "peak_temperature",
    "rank_keywords",
    "render",
    "retained_word_fraction",
    "save_stats",
    "stats_from_json",
    "stats_to_json",
    "subsystem_state",
    "tokenize",
]
