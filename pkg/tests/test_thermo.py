"""Closed-form two-level thermodynamics against independent numerical oracles."""

import math

import numpy as np
import pytest
from scipy.optimize import brentq
from scipy.special import expit

from textthermo import (
    SCHOTTKY_PEAK_X,
    build_corpus_stats,
    doc_profile,
    document_energy_model,
    energy_gap,
    ensemble_curves,
    occupancy,
    subsystem_state,
    tokenize,
)

LN2 = math.log(2.0)

# Frozen oracle values (high-precision root finding / direct evaluation):
#   X_STAR solves x*tanh(x/2) = 2; C_MAX is the peak specific heat.
X_STAR = 2.3993572805154677
C_MAX = 0.4392288398906451


def schottky_grid_argmax(delta: float, n_points: int = 10_000):
    """Brute-force oracle: maximize C on a log temperature grid."""
    grid = np.geomspace(1e-3, 1e2, n_points)
    x = delta / grid
    c = x * x * expit(x) * expit(-x)
    i = int(np.argmax(c))
    return grid, i, float(c[i])


# ------------------------------------------------------------- energy gap


def test_energy_gap_zero_for_identical_distributions():
    assert energy_gap(0.01, 0.01) == 0.0


def test_energy_gap_analytic_unit():
    p = 0.2
    assert energy_gap(min(1.0, math.e * p), p) == pytest.approx(1.0, rel=1e-12)


def test_energy_gap_log_ratio():
    assert energy_gap(0.05, 1e-5) == pytest.approx(8.517193191416238, rel=1e-12)


@pytest.mark.parametrize("p_doc,p_corpus", [(0.0, 0.5), (0.5, 0.0), (-0.1, 0.5), (0.5, 1.5)])
def test_energy_gap_rejects_bad_probabilities(p_doc, p_corpus):
    with pytest.raises(ValueError):
        energy_gap(p_doc, p_corpus)


def test_energy_gap_scale_invariance():
    rng = np.random.default_rng(11)
    for _ in range(50):
        p, q = rng.uniform(1e-8, 0.5, size=2)
        k = rng.uniform(1e-6, 1.0 / max(p, q))
        base = energy_gap(p, q)
        scaled = energy_gap(k * p, k * q)
        assert scaled == pytest.approx(base, rel=0, abs=5e-15 * max(1.0, abs(base)))


# -------------------------------------------------------------- occupancy


def test_occupancy_half_at_zero_gap():
    for t in (0.01, 1.0, 100.0):
        assert occupancy(0.0, t) == 0.5


def test_occupancy_logistic_value():
    assert occupancy(1.0, 1.0) == pytest.approx(0.7310585786300049, rel=1e-14)


def test_occupancy_zero_temperature_limit():
    assert occupancy(10.0, 0.01) == pytest.approx(1.0, abs=1e-12)


def test_occupancy_limits_and_monotonicity():
    deltas = np.linspace(-5, 5, 41)
    r = occupancy(deltas, 1.0)
    assert np.all(np.diff(r) > 0)
    assert occupancy(3.0, 1e9) == pytest.approx(0.5, abs=1e-6)


def test_occupancy_rejects_bad_temperature():
    with pytest.raises(ValueError):
        occupancy(1.0, 0.0)
    with pytest.raises(ValueError):
        occupancy(1.0, -2.0)


# --------------------------------------------------------- subsystem state


def test_degenerate_levels():
    for t in (0.01, 0.4, 3.0, 1e5):
        st = subsystem_state(0.0, t)
        assert st.c == 0.0
        assert st.u == 0.0
        assert st.s == pytest.approx(LN2, rel=1e-14)
        assert st.z == pytest.approx(2.0, rel=1e-14)


def test_infinite_temperature_limits():
    st = subsystem_state(1.0, 1e8)
    assert st.s == pytest.approx(LN2, abs=1e-9)
    assert st.u == pytest.approx(0.5, rel=1e-7)
    assert st.c == pytest.approx(0.0, abs=1e-15)


def test_zero_temperature_limits():
    for delta in (0.5, -0.5, 4.0):
        st = subsystem_state(delta, 1e-5 * abs(delta))
        assert st.s == pytest.approx(0.0, abs=1e-12)
        assert st.c == pytest.approx(0.0, abs=1e-12)
    assert subsystem_state(2.0, 1e-5).u == pytest.approx(0.0, abs=1e-12)
    assert subsystem_state(-2.0, 1e-5).u == pytest.approx(-2.0, abs=1e-12)


def test_peak_location_constant_against_root_oracle():
    root = brentq(lambda x: x * math.tanh(x / 2) - 2.0, 2.0, 3.0, xtol=1e-14)
    assert SCHOTTKY_PEAK_X == pytest.approx(root, rel=1e-12)
    assert SCHOTTKY_PEAK_X == pytest.approx(X_STAR, rel=1e-15)


def test_schottky_peak_against_grid_oracle():
    grid, i, c_max = schottky_grid_argmax(1.0)
    st = subsystem_state(1.0, float(grid[i]))
    assert st.c == pytest.approx(c_max, rel=1e-12)
    assert c_max == pytest.approx(C_MAX, abs=1e-6)
    analytic = 1.0 / SCHOTTKY_PEAK_X
    j = int(np.searchsorted(grid, analytic))
    assert abs(i - j) <= 1
    assert analytic == pytest.approx(0.41677827980048237, rel=1e-12)


def test_fluctuation_identity():
    # C must equal delta^2 * r * (1-r) / T^2 with both state probabilities
    # evaluated stably (the complement of the occupancy is the occupancy of
    # the mirrored gap).
    rng = np.random.default_rng(5)
    for _ in range(300):
        delta = (1 - rng.random()) * 20.0
        t = 10 ** rng.uniform(-2, 2)
        st = subsystem_state(delta, t)
        r = occupancy(delta, t)
        one_minus_r = occupancy(-delta, t)
        assert r + one_minus_r == pytest.approx(1.0, rel=1e-14)
        var = delta**2 * r * one_minus_r
        assert st.c == pytest.approx(var / t**2, rel=1e-12, abs=1e-300)


def test_specific_heat_matches_energy_derivative():
    # oracle: central finite difference of U with step 1e-4 * T; the 1e-30
    # absolute floor covers the frozen regime where C underflows.
    rng = np.random.default_rng(6)
    for _ in range(300):
        delta = (1 - rng.random()) * 20.0
        t = 10 ** rng.uniform(-2, 2)
        h = 1e-4 * t
        du = subsystem_state(delta, t + h).u - subsystem_state(delta, t - h).u
        c_fd = du / (2 * h)
        c = subsystem_state(delta, t).c
        assert abs(c - c_fd) <= max(1e-4 * abs(c_fd), 1e-30)


def test_entropy_matches_state_enumeration():
    # oracle: S = -sum p ln p over the two states, with ln p evaluated
    # through logaddexp rather than the library's ln Z + U/T route.
    rng = np.random.default_rng(7)
    for _ in range(300):
        delta = rng.uniform(-20, 20)
        t = 10 ** rng.uniform(-2, 2)
        x = delta / t
        log_p_bound = -np.logaddexp(0.0, -x)
        log_p_free = -np.logaddexp(0.0, x)
        s_enum = -(expit(x) * log_p_bound + expit(-x) * log_p_free)
        st = subsystem_state(delta, t)
        assert st.s == pytest.approx(float(s_enum), rel=1e-12, abs=1e-300)


def test_entropy_definition_ln_z_plus_u_over_t():
    for delta, t in [(1.0, 0.7), (3.5, 2.0), (-2.0, 0.5), (0.2, 10.0)]:
        st = subsystem_state(delta, t)
        assert st.s == pytest.approx(math.log(st.z) + st.u / t, rel=1e-12)


def test_state_bounds():
    rng = np.random.default_rng(8)
    for _ in range(200):
        delta = rng.uniform(-20, 20)
        t = 10 ** rng.uniform(-2, 2)
        st = subsystem_state(delta, t)
        assert 0.0 <= st.r <= 1.0  # open interval mathematically; floats saturate
        assert abs(st.u) <= abs(delta) + 1e-15
        if delta > 0:
            assert -1e-15 <= st.u <= delta
        assert -1e-15 <= st.s <= LN2 + 1e-15
        assert st.c >= 0.0


def test_scaling_law():
    rng = np.random.default_rng(9)
    for _ in range(100):
        delta = rng.uniform(-10, 10)
        t = 10 ** rng.uniform(-2, 2)
        k = 10 ** rng.uniform(-3, 3)
        base = subsystem_state(delta, t)
        scaled = subsystem_state(k * delta, k * t)
        assert scaled.r == pytest.approx(base.r, rel=1e-12)
        assert scaled.s == pytest.approx(base.s, rel=1e-12, abs=1e-300)
        assert scaled.c == pytest.approx(base.c, rel=1e-12, abs=1e-300)
        assert scaled.u == pytest.approx(k * base.u, rel=1e-12, abs=1e-300)


def test_rejects_non_positive_temperature():
    with pytest.raises(ValueError):
        subsystem_state(1.0, 0.0)


# ------------------------------------------------------------ energy model


def _tiny_pair():
    stats = build_corpus_stats([tokenize("field field field theory gauge")], alpha=0.5)
    profile = doc_profile(tokenize("gauge gauge theory"))
    return stats, profile


def test_document_energy_model_values():
    stats, profile = _tiny_pair()
    model = document_energy_model(profile, stats)
    assert model.words == ["gauge", "theory"]
    assert model.count("gauge") == 2
    p_gauge = (1 + 0.5) / (5 + 0.5 * 4)
    assert model.gap("gauge") == pytest.approx(math.log((2 / 3) / p_gauge), rel=1e-12)


def test_document_energy_model_rejects_empty():
    stats, _ = _tiny_pair()
    with pytest.raises(ValueError, match="empty document"):
        document_energy_model(doc_profile([]), stats)


def test_model_gaps_finite_with_smoothing():
    stats, _ = _tiny_pair()
    profile = doc_profile(tokenize("neverseen gauge"))
    model = document_energy_model(profile, stats)
    assert np.all(np.isfinite(model.delta))


# --------------------------------------------------------- ensemble curves


def test_single_word_curve_equals_subsystem():
    stats, profile = _tiny_pair()
    profile = doc_profile(tokenize("gauge"))
    model = document_energy_model(profile, stats)
    grid = np.geomspace(0.01, 10, 50)
    curve = ensemble_curves(model, grid)
    delta = model.gap("gauge")
    for i, t in enumerate(grid):
        st = subsystem_state(delta, t)
        assert curve.u[i] == pytest.approx(st.u, rel=1e-12, abs=1e-300)
        assert curve.s[i] == pytest.approx(st.s, rel=1e-12)
        assert curve.cv[i] == pytest.approx(st.c, rel=1e-12, abs=1e-300)


def test_curves_linear_in_degeneracy():
    stats, profile = _tiny_pair()
    model = document_energy_model(profile, stats)
    doubled = document_energy_model(
        doc_profile(tokenize("gauge gauge theory " * 2)), stats
    )
    grid = np.geomspace(0.01, 10, 30)
    base = ensemble_curves(model, grid)
    double = ensemble_curves(doubled, grid)
    assert np.allclose(double.u, 2 * base.u, rtol=1e-12)
    assert np.allclose(double.s, 2 * base.s, rtol=1e-12)
    assert np.allclose(double.cv, 2 * base.cv, rtol=1e-12)


def test_two_gap_curve_has_two_peaks():
    # oracle: peaks of the summed Schottky forms found by grid search
    grid = np.geomspace(0.01, 100, 200)
    x1, x8 = 1.0 / grid, 8.0 / grid
    cv = x1**2 * expit(x1) * expit(-x1) + x8**2 * expit(x8) * expit(-x8)
    interior = np.nonzero((cv[1:-1] > cv[:-2]) & (cv[1:-1] > cv[2:]))[0] + 1
    peak_ts = sorted(float(grid[i]) for i in interior)
    assert len(peak_ts) == 2
    step = grid[1] / grid[0]
    assert peak_ts[0] == pytest.approx(1.0 / X_STAR, rel=step - 1)
    assert peak_ts[1] == pytest.approx(8.0 / X_STAR, rel=step - 1)


def test_ensemble_filter_and_errors():
    stats, profile = _tiny_pair()
    model = document_energy_model(profile, stats)
    grid = np.geomspace(0.01, 10, 20)
    only_gauge = ensemble_curves(model, grid, words={"gauge"}, label="kw")
    assert only_gauge.label == "kw"
    with pytest.raises(ValueError, match="empty ensemble"):
        ensemble_curves(model, grid, words={"absent"})
    with pytest.raises(ValueError, match="grid"):
        ensemble_curves(model, [1.0, 0.5])
    with pytest.raises(ValueError, match="grid"):
        ensemble_curves(model, [-1.0, 0.5])


def test_curve_csv_format_and_precision():
    stats, _ = _tiny_pair()
    model = document_energy_model(doc_profile(tokenize("gauge theory")), stats)
    grid = np.geomspace(0.05, 5, 7)
    curve = ensemble_curves(model, grid)
    text = curve.to_csv()
    lines = text.strip().split("\n")
    assert lines[0] == "T,U,S,Cv"
    assert len(lines) == 1 + len(grid)
    for i, line in enumerate(lines[1:]):
        t, u, s, cv = (float(v) for v in line.split(","))
        assert t == grid[i]  # 17 significant digits round-trip exactly
        assert u == curve.u[i] and s == curve.s[i] and cv == curve.cv[i]
