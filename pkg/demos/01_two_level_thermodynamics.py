#!/usr/bin/env python3
"""Closed-form thermodynamics of a single word subsystem.

A word with energy gap delta (the log-ratio of its document frequency to
its corpus frequency) behaves like a two-level system.  This script sweeps
temperature for a few gaps, prints the characteristic values, and plots
U(T), S(T) and C(T).  The specific heat shows the classic single broad
peak at T = delta / 2.39936 with height 0.4392 regardless of delta.
"""

import numpy as np

from textthermo import SCHOTTKY_PEAK_X, subsystem_state

GAPS = [0.25, 1.0, 4.0]
GRID = np.geomspace(0.001, 100, 400)

print("peak position constant x* =", SCHOTTKY_PEAK_X)
print()
print(f"{'delta':>6} {'T*':>9} {'C(T*)':>8} {'S(T->inf)':>10} {'U(T->inf)':>10}")
for delta in GAPS:
    t_star = delta / SCHOTTKY_PEAK_X
    at_peak = subsystem_state(delta, t_star)
    hot = subsystem_state(delta, 1e6 * delta)
    print(f"{delta:6.2f} {t_star:9.4f} {at_peak.c:8.4f} {hot.s:10.4f} {hot.u:10.4f}")

print()
print("the peak height is universal; its position scales linearly with delta")

# sample a few states along the sweep for one gap
delta = 1.0
print()
print(f"sweep for delta = {delta}:")
print(f"{'T':>10} {'r':>8} {'U':>8} {'S':>8} {'C':>8}")
for t in (0.01, 0.1, 1 / SCHOTTKY_PEAK_X, 1.0, 10.0, 1000.0):
    st = subsystem_state(delta, t)
    print(f"{t:10.3f} {st.r:8.4f} {st.u:8.4f} {st.s:8.4f} {st.c:8.4f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit("matplotlib not installed; table output only")

from pathlib import Path

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

fig, axes = plt.subplots(1, 3, figsize=(13, 4))
for delta in GAPS:
    states = [subsystem_state(delta, t) for t in GRID]
    axes[0].semilogx(GRID, [s.u for s in states], label=f"$\\Delta$={delta}")
    axes[1].semilogx(GRID, [s.s for s in states])
    axes[2].semilogx(GRID, [s.c for s in states])
    axes[2].axvline(delta / SCHOTTKY_PEAK_X, ls=":", lw=0.8, color="gray")
axes[0].set_ylabel("U (nats)")
axes[1].set_ylabel("S (nats)")
axes[1].axhline(np.log(2), ls="--", lw=0.8, color="gray")
axes[2].set_ylabel("C")
for ax in axes:
    ax.set_xlabel("T")
axes[0].legend()
fig.tight_layout()
fig.savefig(out_dir / "two_level_curves.png", dpi=120)
print(f"\nwrote {out_dir / 'two_level_curves.png'}")
