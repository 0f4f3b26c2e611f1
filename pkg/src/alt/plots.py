"""Figure rendering for the CLI report paths.

Only the command-line layer imports this module; the library itself stays
plot-free and emits plot-ready data instead. Every renderer writes a PNG
and returns its path.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .calibration import CalibrationSample, RegressionFit  # noqa: E402


def render_residual_histogram(hist: list[tuple[float, int]], bin_width: float,
                              path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    centers = [c for c, _ in hist]
    counts = [n for _, n in hist]
    ax.bar(centers, counts, width=bin_width * 0.9, color="#4878a8",
           edgecolor="#2b4a6b")
    ax.set_xlabel("residual")
    ax.set_ylabel("texts")
    ax.set_title("Residuals of the fitted plane")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_fit_scatter(samples: list[CalibrationSample], fit: RegressionFit,
                       path: Path) -> Path:
    target = [s.target for s in samples]
    predicted = [fit.c1 + fit.c2 * s.x + fit.c3 * s.y for s in samples]
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(predicted, target, s=18, color="#4878a8")
    lo = min(*predicted, *target)
    hi = max(*predicted, *target)
    ax.plot([lo, hi], [lo, hi], color="#888888", linewidth=1)
    ax.set_xlabel("predicted")
    ax.set_ylabel("obtained")
    ax.set_title(f"Fit, R² = {fit.r_squared:.3f}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_comparison(adapted: list[float], reference: list[float],
                      path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(reference, adapted, s=18, color="#4878a8")
    lo = min(*adapted, *reference)
    hi = max(*adapted, *reference)
    ax.plot([lo, hi], [lo, hi], color="#888888", linewidth=1)
    ax.set_xlabel("reference")
    ax.set_ylabel("adapted")
    ax.set_title("Adapted vs reference indices")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
