"""Plane fitting behind the recalibrated coefficients, plus the
adapted-vs-original comparison statistics.

ols_fit solves target = c1 + c2*x + c3*y by least squares and reports the
standard regression diagnostics (standard errors from the unbiased
residual variance, two-sided t p-values with N-3 degrees of freedom, R^2).
PUBLISHED_FITS records the full-precision fitted values the rounded
runtime formulas were derived from; they serve as cross-check constants
and are not used in scoring.
"""

from __future__ import annotations

import csv
import math
import statistics as pystats
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import stats as scipy_stats

from .errors import (
    LengthMismatch,
    NonpositiveBinWidth,
    RankDeficient,
    TooFewSamples,
    ZeroVariance,
)

MIN_SAMPLES = 4


@dataclass(frozen=True)
class CalibrationSample:
    id: str
    x: float
    y: float
    target: float


@dataclass(frozen=True)
class RegressionFit:
    c1: float
    c2: float
    c3: float
    se1: float
    se2: float
    se3: float
    p1: float
    p2: float
    p3: float
    r_squared: float
    residuals: tuple[float, ...]


@dataclass(frozen=True)
class ComparisonStats:
    pearson: float
    mean_diff: float
    two_sigma: float


@dataclass(frozen=True)
class PublishedTerm:
    reference: str
    value: float
    se: float
    p: float


@dataclass(frozen=True)
class PublishedFit:
    r_squared: float
    terms: tuple[PublishedTerm, ...]


PUBLISHED_FITS: dict[str, PublishedFit] = {
    "flesch": PublishedFit(0.890742, (
        PublishedTerm("intercept", 226.614882, 8.744455, 0.0),
        PublishedTerm("words_per_sentence", -1.036134, 0.0930814, 0.0),
        PublishedTerm("syllables_per_word", -72.451284, 4.336399, 0.0),
    )),
    "gunning_fog": PublishedFit(0.77333, (
        PublishedTerm("intercept", 1.00156, 1.28036, 0.43599),
        PublishedTerm("words_per_sentence", 0.49261, 0.02764, 0.0),
        PublishedTerm("complex_per_word", 18.66057, 5.6943, 0.00146),
    )),
    "ari": PublishedFit(0.93696, (
        PublishedTerm("intercept", -20.26065, 1.67994, 0.0),
        PublishedTerm("letters_per_word", 4.57058, 0.36508, 0.0),
        PublishedTerm("words_per_sentence", 0.43664, 0.01834, 0.0),
    )),
    "flesch_kincaid": PublishedFit(0.92273, (
        PublishedTerm("intercept", -18.11589, 1.6077, 0.0),
        PublishedTerm("words_per_sentence", 0.36001, 0.01712, 0.0),
        PublishedTerm("syllables_per_word", 10.35177, 0.79701, 0.0),
    )),
    "coleman_liau": PublishedFit(0.89221, (
        PublishedTerm("intercept", -13.66302, 1.61422, 0.0),
        PublishedTerm("letters_per_word", 5.39801, 0.27242, 0.0),
        PublishedTerm("sentences_per_word", -20.57984, 6.67523, 0.0),
    )),
}


def load_samples(path: str | Path) -> list[CalibrationSample]:
    """Reads calibration samples from a CSV with header id,x,y,target."""
    samples = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            samples.append(CalibrationSample(
                id=row["id"], x=float(row["x"]), y=float(row["y"]),
                target=float(row["target"])))
    return samples


def ols_fit(samples: list[CalibrationSample]) -> RegressionFit:
    n = len(samples)
    if n < MIN_SAMPLES:
        raise TooFewSamples(f"{n} samples; need at least {MIN_SAMPLES}")
    design = np.array([[1.0, s.x, s.y] for s in samples])
    target = np.array([s.target for s in samples])

    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < 3:
        raise RankDeficient("predictors are collinear")

    predicted = design @ coef
    residuals = target - predicted
    ss_res = float(residuals @ residuals)
    centered = target - target.mean()
    ss_tot = float(centered @ centered)
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    r_squared = min(1.0, max(0.0, r_squared))

    dof = n - 3
    sigma2 = ss_res / dof
    covariance = sigma2 * np.linalg.inv(design.T @ design)
    ses = np.sqrt(np.diag(covariance))

    def p_value(value: float, se: float) -> float:
        if se == 0.0:
            return 0.0 if value != 0.0 else 1.0
        t = abs(value / se)
        return float(2.0 * scipy_stats.t.sf(t, dof))

    return RegressionFit(
        c1=float(coef[0]), c2=float(coef[1]), c3=float(coef[2]),
        se1=float(ses[0]), se2=float(ses[1]), se3=float(ses[2]),
        p1=p_value(coef[0], ses[0]), p2=p_value(coef[1], ses[1]),
        p3=p_value(coef[2], ses[2]),
        r_squared=r_squared,
        residuals=tuple(float(r) for r in residuals),
    )


def compare_series(adapted: list[float], reference: list[float],
                   ) -> ComparisonStats:
    if len(adapted) != len(reference):
        raise LengthMismatch(
            f"{len(adapted)} vs {len(reference)} values")
    if len(adapted) < 2:
        raise TooFewSamples("need at least two paired values")
    if len(set(adapted)) == 1 or len(set(reference)) == 1:
        raise ZeroVariance("a constant series has no defined correlation")
    diffs = [a - b for a, b in zip(adapted, reference)]
    return ComparisonStats(
        pearson=pystats.correlation(adapted, reference),
        mean_diff=pystats.mean(diffs),
        two_sigma=2.0 * pystats.stdev(diffs),
    )


def residual_histogram(fit: RegressionFit, bin_width: float,
                       ) -> list[tuple[float, int]]:
    """Residual counts in fixed-width bins centered at multiples of
    bin_width; only occupied bins are emitted."""
    if not bin_width > 0:
        raise NonpositiveBinWidth(f"bin width {bin_width!r}")
    counts = Counter(
        math.floor(r / bin_width + 0.5) for r in fit.residuals)
    return [(k * bin_width, counts[k]) for k in sorted(counts)]


def fit_to_dict(fit: RegressionFit) -> dict:
    """Fit report in the published-table layout plus residuals."""
    return {
        "r_squared": fit.r_squared,
        "coefficients": [
            {"name": "c1", "value": fit.c1, "se": fit.se1, "p": fit.p1},
            {"name": "c2", "value": fit.c2, "se": fit.se2, "p": fit.p2},
            {"name": "c3", "value": fit.c3, "se": fit.se3, "p": fit.p3},
        ],
        "residuals": list(fit.residuals),
    }
