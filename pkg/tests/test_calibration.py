"""Plane fitting, comparison statistics, residual histograms."""

import math
import random
import statistics

import numpy as np
import pytest

from alt.calibration import (
    PUBLISHED_FITS,
    CalibrationSample,
    ComparisonStats,
    compare_series,
    fit_to_dict,
    load_samples,
    ols_fit,
    residual_histogram,
)
from alt.data_files import load_table6
from alt.errors import (
    LengthMismatch,
    NonpositiveBinWidth,
    RankDeficient,
    TooFewSamples,
    ZeroVariance,
)


def plane_samples(c1, c2, c3, pts):
    return [CalibrationSample(str(i), x, y, c1 + c2 * x + c3 * y)
            for i, (x, y) in enumerate(pts)]


def solve_normal_equations(samples):
    """Independent oracle: accumulate the 3x3 normal system and solve it
    by Gaussian elimination with partial pivoting, no linear-algebra
    library involved."""
    rows = [[1.0, s.x, s.y] for s in samples]
    t = [s.target for s in samples]
    a = [[sum(r[i] * r[j] for r in rows) for j in range(3)]
         for i in range(3)]
    b = [sum(r[i] * v for r, v in zip(rows, t)) for i in range(3)]
    for col in range(3):
        pivot = max(range(col, 3), key=lambda r: abs(a[r][col]))
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        for r in range(col + 1, 3):
            f = a[r][col] / a[col][col]
            for j in range(col, 3):
                a[r][j] -= f * a[col][j]
            b[r] -= f * b[col]
    out = [0.0, 0.0, 0.0]
    for i in (2, 1, 0):
        out[i] = (b[i] - sum(a[i][j] * out[j] for j in range(i + 1, 3))) \
            / a[i][i]
    return out


GENERAL_POSITION = [(0, 0), (1, 0), (0, 1), (2, 1), (1, 3), (4, 2),
                    (3, 5), (5, 1), (2, 4), (6, 3)]


class TestOlsFit:
    def test_noiseless_plane_recovered(self):
        fit = ols_fit(plane_samples(2, 3, -5, GENERAL_POSITION))
        assert fit.c1 == pytest.approx(2, rel=1e-9, abs=1e-9)
        assert fit.c2 == pytest.approx(3, rel=1e-9)
        assert fit.c3 == pytest.approx(-5, rel=1e-9)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-9)
        assert all(abs(r) < 1e-9 for r in fit.residuals)

    def test_constant_target(self):
        samples = [CalibrationSample(str(i), x, y, 7.0)
                   for i, (x, y) in enumerate(GENERAL_POSITION)]
        fit = ols_fit(samples)
        assert fit.c2 == pytest.approx(0, abs=1e-9)
        assert fit.c3 == pytest.approx(0, abs=1e-9)
        assert fit.r_squared == 0.0

    def test_too_few_samples(self):
        with pytest.raises(TooFewSamples):
            ols_fit(plane_samples(1, 1, 1, [(0, 0), (1, 1), (2, 0)]))

    def test_collinear_predictors(self):
        pts = [(float(i), 2.0 * float(i)) for i in range(6)]
        with pytest.raises(RankDeficient):
            ols_fit(plane_samples(1, 1, 1, pts))

    def test_constant_predictor_is_rank_deficient(self):
        pts = [(3.0, float(i)) for i in range(6)]
        with pytest.raises(RankDeficient):
            ols_fit(plane_samples(1, 1, 1, pts))

    def test_matches_normal_equation_oracle(self):
        rng = random.Random(20260819)
        for _ in range(40):
            n = rng.randint(4, 20)
            pts = [(rng.uniform(-5, 5), rng.uniform(-5, 5))
                   for _ in range(n)]
            samples = [
                CalibrationSample(
                    str(i), x, y,
                    1.5 - 2.0 * x + 0.7 * y + rng.gauss(0, 1.0))
                for i, (x, y) in enumerate(pts)
            ]
            fit = ols_fit(samples)
            oracle = solve_normal_equations(samples)
            for got, want in zip((fit.c1, fit.c2, fit.c3), oracle):
                assert got == pytest.approx(want, rel=1e-9, abs=1e-9)

    def test_target_shift_moves_only_intercept(self):
        rng = random.Random(3)
        pts = [(rng.uniform(0, 10), rng.uniform(0, 5)) for _ in range(12)]
        samples = [CalibrationSample(str(i), x, y,
                                     2 + 3 * x - 5 * y + rng.gauss(0, 1))
                   for i, (x, y) in enumerate(pts)]
        shifted = [CalibrationSample(s.id, s.x, s.y, s.target + 11.0)
                   for s in samples]
        base, moved = ols_fit(samples), ols_fit(shifted)
        assert moved.c1 == pytest.approx(base.c1 + 11.0, rel=1e-9)
        assert moved.c2 == pytest.approx(base.c2, rel=1e-9)
        assert moved.c3 == pytest.approx(base.c3, rel=1e-9)
        assert moved.r_squared == pytest.approx(base.r_squared, rel=1e-9)

    def test_monte_carlo_coefficient_recovery(self):
        true = (2.0, 3.0, -5.0)
        within = 0
        for seed in range(100):
            rng = np.random.default_rng(seed)
            x = rng.uniform(0, 10, 100)
            y = rng.uniform(0, 5, 100)
            t = true[0] + true[1] * x + true[2] * y + rng.normal(0, 0.5, 100)
            fit = ols_fit([
                CalibrationSample(str(i), float(a), float(b), float(c))
                for i, (a, b, c) in enumerate(zip(x, y, t))])
            within += (abs(fit.c1 - true[0]) <= 3 * fit.se1
                       and abs(fit.c2 - true[1]) <= 3 * fit.se2
                       and abs(fit.c3 - true[2]) <= 3 * fit.se3)
        assert within >= 99

    def test_diagnostics_shapes(self):
        rng = random.Random(5)
        pts = [(rng.uniform(0, 10), rng.uniform(0, 5)) for _ in range(30)]
        samples = [CalibrationSample(str(i), x, y,
                                     1 + 2 * x + 3 * y + rng.gauss(0, 1))
                   for i, (x, y) in enumerate(pts)]
        fit = ols_fit(samples)
        assert len(fit.residuals) == 30
        assert 0.0 <= fit.r_squared <= 1.0
        for se in (fit.se1, fit.se2, fit.se3):
            assert se > 0
        for p in (fit.p1, fit.p2, fit.p3):
            assert 0.0 <= p <= 1.0


class TestCompareSeries:
    def test_identical_series(self):
        stats = compare_series([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
        assert stats == ComparisonStats(1.0, 0.0, 0.0)

    def test_constant_offset(self):
        a = [1.0, 2.0, 4.0, 8.0]
        stats = compare_series([v + 0.5 for v in a], a)
        assert stats.pearson == pytest.approx(1.0)
        assert stats.mean_diff == pytest.approx(0.5)
        assert stats.two_sigma == pytest.approx(0.0, abs=1e-12)

    def test_affine_invariance_of_pearson(self):
        a = [1.0, 2.0, 4.0, 8.0, 3.0]
        b = [2.0, 1.0, 5.0, 7.0, 4.0]
        scaled = [3.0 * v + 10.0 for v in b]
        assert compare_series(a, scaled).pearson == pytest.approx(
            compare_series(a, b).pearson, abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compare_series([1.0, 2.0], [1.0])

    def test_zero_variance(self):
        with pytest.raises(ZeroVariance):
            compare_series([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])
        with pytest.raises(ZeroVariance):
            compare_series([1.0, 2.0, 3.0], [5.0, 5.0, 5.0])


class TestPublishedComparison:
    # Pearson, mean difference, and twice the sample deviation for each
    # index pair of the bundled evaluation table.
    EXPECTED = {
        "fk": (0.980, 0.7, 1.8),
        "gf": (0.913, -0.4, 4.2),
        "ari": (0.979, 0.7, 2.0),
        "cl": (0.953, -0.4, 1.6),
        "final": (0.972, 0.6, 2.0),
    }

    @pytest.mark.parametrize("index", sorted(EXPECTED))
    def test_reproduces_published_row(self, index):
        rows = load_table6()
        adapted = [row[f"{index}_alt"] for row in rows]
        reference = [row[f"{index}_rtt"] for row in rows]
        stats = compare_series(adapted, reference)
        corr, mean, spread = self.EXPECTED[index]
        assert stats.pearson == pytest.approx(corr, abs=0.005)
        assert stats.mean_diff == pytest.approx(mean, abs=0.1)
        assert stats.two_sigma == pytest.approx(spread, abs=0.3)


class TestResidualHistogram:
    def fit_with(self, residuals):
        pts = GENERAL_POSITION[:max(4, len(residuals))]
        fit = ols_fit(plane_samples(0, 1, 1, pts))
        return type(fit)(
            c1=fit.c1, c2=fit.c2, c3=fit.c3, se1=fit.se1, se2=fit.se2,
            se3=fit.se3, p1=fit.p1, p2=fit.p2, p3=fit.p3,
            r_squared=fit.r_squared, residuals=tuple(residuals))

    def test_symmetric_pair_shares_center_bin(self):
        assert residual_histogram(self.fit_with([0.1, -0.1]), 1.0) == [(0, 2)]

    def test_nearest_center(self):
        assert residual_histogram(self.fit_with([2.6]), 1.0) == [(3, 1)]

    def test_nonpositive_width(self):
        fit = self.fit_with([0.0])
        with pytest.raises(NonpositiveBinWidth):
            residual_histogram(fit, 0.0)
        with pytest.raises(NonpositiveBinWidth):
            residual_histogram(fit, -1.0)

    def test_planted_noise_mass_within_two_sigma(self):
        rng = np.random.default_rng(7)
        x = rng.uniform(0, 10, 200)
        y = rng.uniform(0, 5, 200)
        t = 2 + 3 * x - 5 * y + rng.normal(0, 0.5, 200)
        fit = ols_fit([
            CalibrationSample(str(i), float(a), float(b), float(c))
            for i, (a, b, c) in enumerate(zip(x, y, t))])
        sd = statistics.stdev(fit.residuals)
        hist = residual_histogram(fit, 0.25)
        total = sum(n for _, n in hist)
        inside = sum(n for center, n in hist if abs(center) <= 2 * sd)
        assert total == 200
        assert inside / total >= 0.90


class TestPublishedFits:
    def test_all_five_indices_present(self):
        assert set(PUBLISHED_FITS) == {"flesch", "gunning_fog", "ari",
                                       "flesch_kincaid", "coleman_liau"}

    def test_r_squared_values(self):
        assert PUBLISHED_FITS["flesch"].r_squared == 0.890742
        assert PUBLISHED_FITS["gunning_fog"].r_squared == 0.77333
        assert PUBLISHED_FITS["ari"].r_squared == 0.93696
        assert PUBLISHED_FITS["flesch_kincaid"].r_squared == 0.92273
        assert PUBLISHED_FITS["coleman_liau"].r_squared == 0.89221

    def test_coleman_liau_third_term_is_sentence_density(self):
        terms = {t.reference: t for t in
                 PUBLISHED_FITS["coleman_liau"].terms}
        assert terms["sentences_per_word"].value == -20.57984

    def test_rounded_runtime_coefficients_stay_close(self):
        # each published rounded coefficient sits within one standard
        # error of the full-precision fit
        flesch = {t.reference: t for t in PUBLISHED_FITS["flesch"].terms}
        assert abs(flesch["intercept"].value - 227) < flesch["intercept"].se
        assert abs(flesch["words_per_sentence"].value + 1.04) \
            < flesch["words_per_sentence"].se
        assert abs(flesch["syllables_per_word"].value + 72) \
            < flesch["syllables_per_word"].se


class TestLoadSamples:
    def test_round_trip_csv(self, tmp_path):
        p = tmp_path / "samples.csv"
        p.write_text("id,x,y,target\nt1,1.5,2.5,10.0\nt2,0.5,1.0,-3.25\n",
                     encoding="utf-8")
        samples = load_samples(p)
        assert samples == [
            CalibrationSample("t1", 1.5, 2.5, 10.0),
            CalibrationSample("t2", 0.5, 1.0, -3.25),
        ]

    def test_fit_to_dict_layout(self):
        fit = ols_fit(plane_samples(2, 3, -5, GENERAL_POSITION))
        doc = fit_to_dict(fit)
        assert set(doc) == {"r_squared", "coefficients", "residuals"}
        assert [c["name"] for c in doc["coefficients"]] == ["c1", "c2", "c3"]
        assert len(doc["residuals"]) == len(GENERAL_POSITION)
