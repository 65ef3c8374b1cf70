"""Command-line surface: corpus building, curves, keyword reports, extractions.

Every command is a single batch invocation; identical inputs and
configuration produce byte-identical outputs.  Options may also be given
in a TOML config file (--config); explicit flags override file values.
"""

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .analysis import (
    DEFAULT_BANDS,
    DEFAULT_GRID_RANGE,
    DEFAULT_GRID_STEPS,
    WordClass,
    classify_words,
    default_temperature_grid,
    keyword_report,
)
from .corpus import (
    DEFAULT_ALPHA,
    build_corpus_stats,
    doc_profile,
    load_stats,
    stats_to_json,
    tokenize,
)
from .extraction import FORMATS, MODES, extract_at_temperature, render
from .thermo import document_energy_model, ensemble_curves


@dataclass
class RunConfig:
    """Resolved configuration of one CLI invocation."""

    corpus: str | None = None
    doc: str | None = None
    alpha: float = DEFAULT_ALPHA
    t_min: float = DEFAULT_GRID_RANGE[0]
    t_max: float = DEFAULT_GRID_RANGE[1]
    t_steps: int = DEFAULT_GRID_STEPS
    log_grid: bool = True
    t_lo: float = DEFAULT_BANDS[0]
    t_hi: float = DEFAULT_BANDS[1]
    top: int = 20
    temperature: float | None = None
    mode: str = "threshold"
    seed: int = 0
    format: str = "plain"
    output: str | None = None

    def grid(self):
        return default_temperature_grid(
            self.t_min, self.t_max, self.t_steps, self.log_grid
        )

    def bands(self) -> tuple[float, float]:
        if not self.t_lo < self.t_hi:
            raise ValueError("bands must satisfy t_lo < t_hi")
        return (self.t_lo, self.t_hi)


_CONFIG_KEYS = {f.name for f in fields(RunConfig)}


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, config-file values and explicit flags (in that order)."""
    cfg = RunConfig()
    if getattr(args, "config", None):
        data = tomllib.loads(Path(args.config).read_text(encoding="utf-8"))
        for key, value in data.items():
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key: {key!r}")
            setattr(cfg, key, value)
    for name in _CONFIG_KEYS:
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    return cfg


def _read_tokens(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ValueError(f"unreadable file {path}: {exc}") from exc
    return tokenize(text)


def _load_inputs(cfg: RunConfig):
    if not cfg.corpus:
        raise ValueError("--corpus is required")
    if not cfg.doc:
        raise ValueError("--doc is required")
    stats = load_stats(cfg.corpus)
    profile = doc_profile(_read_tokens(cfg.doc))
    return stats, profile


def _write_or_stdout(payload: str, output: str | None) -> None:
    if output:
        Path(output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def cmd_corpus_build(cfg: RunConfig, args: argparse.Namespace) -> int:
    directory = Path(args.input_dir)
    if not directory.is_dir():
        raise ValueError(f"not a directory: {directory}")
    files = sorted(p for p in directory.iterdir() if p.is_file())
    if not files:
        raise ValueError(f"no readable text files in {directory}")
    stats = build_corpus_stats((_read_tokens(str(p)) for p in files), alpha=cfg.alpha)
    payload = stats_to_json(stats)
    summary = f"total tokens: {stats.total_tokens}\nvocab size: {stats.vocab_size}\n"
    if cfg.output:
        Path(cfg.output).write_text(payload, encoding="utf-8")
        sys.stdout.write(summary)
    else:
        sys.stdout.write(payload)
        sys.stderr.write(summary)
    return 0


def _class_output_path(base: str, label: str) -> Path:
    path = Path(base)
    return path.with_name(f"{path.stem}.{label}{path.suffix or '.csv'}")


def cmd_curves(cfg: RunConfig, args: argparse.Namespace) -> int:
    stats, profile = _load_inputs(cfg)
    model = document_energy_model(profile, stats)
    grid = cfg.grid()
    words = classify_words(profile, stats, cfg.bands())
    curves = [ensemble_curves(model, grid, label="total")]
    for cls in WordClass:
        members = {wt.word for wt in words if wt.word_class is cls}
        if not members:
            sys.stderr.write(f"warning: no words in class {cls.value!r}, skipped\n")
            continue
        curves.append(ensemble_curves(model, grid, words=members, label=cls.value))
    if cfg.output:
        for curve in curves:
            curve.write_csv(_class_output_path(cfg.output, curve.label))
    else:
        blocks = [f"# {curve.label}\n{curve.to_csv()}" for curve in curves]
        sys.stdout.write("\n".join(blocks))
    return 0


def cmd_keywords(cfg: RunConfig, args: argparse.Namespace) -> int:
    stats, profile = _load_inputs(cfg)
    bands = cfg.bands()
    words = classify_words(profile, stats, bands)
    report = keyword_report(cfg.doc, words, bands, k=cfg.top)
    _write_or_stdout(json.dumps(report, indent=2, ensure_ascii=False) + "\n", cfg.output)
    return 0


def cmd_extract(cfg: RunConfig, args: argparse.Namespace) -> int:
    stats, profile = _load_inputs(cfg)
    if cfg.temperature is None:
        raise ValueError("-T/--temperature is required")
    result = extract_at_temperature(
        profile, stats, cfg.temperature, mode=cfg.mode, seed=cfg.seed
    )
    _write_or_stdout(render(result, cfg.format) + "\n", cfg.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textthermo",
        description="Thermodynamic text analysis against a reference corpus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, corpus_doc: bool = True) -> None:
        p.add_argument("--config", help="TOML config file; flags override its values")
        p.add_argument("-o", "--output", help="output path (stdout when absent)")
        if corpus_doc:
            p.add_argument("--corpus", help="corpus stats JSON file")
            p.add_argument("--doc", help="document text file")
            p.add_argument("--alpha", type=float, help="smoothing constant")

    p = sub.add_parser("corpus-build", help="count words over a directory of text files")
    p.add_argument("input_dir", help="directory of text files")
    p.add_argument("--alpha", type=float, help="smoothing constant")
    common(p, corpus_doc=False)
    p.set_defaults(func=cmd_corpus_build)

    p = sub.add_parser("curves", help="export U/S/Cv curves, total and per word class")
    common(p)
    p.add_argument("--t-min", type=float, dest="t_min", help="grid lower bound")
    p.add_argument("--t-max", type=float, dest="t_max", help="grid upper bound")
    p.add_argument("--t-steps", type=int, dest="t_steps", help="grid size")
    p.add_argument(
        "--log-grid",
        action=argparse.BooleanOptionalAction,
        dest="log_grid",
        default=None,
        help="log-spaced temperature grid (default: on)",
    )
    p.add_argument("--t-lo", type=float, dest="t_lo", help="function/common band edge")
    p.add_argument("--t-hi", type=float, dest="t_hi", help="common/keyword band edge")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("keywords", help="rank keywords into a JSON report")
    common(p)
    p.add_argument("--t-lo", type=float, dest="t_lo", help="function/common band edge")
    p.add_argument("--t-hi", type=float, dest="t_hi", help="common/keyword band edge")
    p.add_argument("--top", type=int, help="number of keywords to report")
    p.set_defaults(func=cmd_keywords)

    p = sub.add_parser("extract", help="render the document at a temperature")
    common(p)
    p.add_argument("-T", "--temperature", type=float, help="extraction temperature")
    p.add_argument("--mode", choices=MODES, help="threshold (default) or sample")
    p.add_argument("--seed", type=int, help="sample-mode seed")
    p.add_argument("--format", choices=FORMATS, help="strike-out markup style")
    p.set_defaults(func=cmd_extract)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return args.func(cfg, args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
