"""Calibration buckets, confusion summaries, AUC/DeLong, score contingency."""

import math

import numpy as np
import pytest

from cagecast.domain import MajorityScore
from cagecast.errors import DegenerateLabels, LengthMismatch
from cagecast.evaluation import (
    auc,
    auc_with_ci,
    calibration_table,
    confusion_summary,
    score_accuracy,
)


def brute_force_auc(probs, labels) -> float:
    """Independent oracle: explicit pair counting with ties at 0.5."""
    pos = [p for p, y in zip(probs, labels) if y == 1]
    neg = [p for p, y in zip(probs, labels) if y == 0]
    total = 0.0
    for a in pos:
        for b in neg:
            if a > b:
                total += 1.0
            elif a == b:
                total += 0.5
    return total / (len(pos) * len(neg))


class TestCalibrationTable:
    def test_single_bucket(self):
        probs = [0.55] * 100
        outcomes = [1] * 55 + [0] * 45
        table = calibration_table(probs, outcomes)
        occupied = table.occupied()
        assert len(occupied) == 1
        assert occupied[0].low == 0.5
        assert occupied[0].observed_rate == pytest.approx(0.55)
        assert occupied[0].count == 100

    def test_counts_sum_to_sample_size(self):
        rng = np.random.default_rng(1)
        probs = rng.uniform(size=987)
        outcomes = rng.binomial(1, probs)
        table = calibration_table(probs, outcomes)
        assert sum(b.count for b in table.buckets) == table.total == 987

    def test_probability_one_lands_in_top_bucket(self):
        table = calibration_table([1.0, 0.95], [1, 1])
        assert table.buckets[-1].count == 2

    def test_well_calibrated_generator(self):
        # Monte Carlo oracle: Bernoulli(p) outcomes are calibrated by construction
        rng = np.random.default_rng(8)
        probs = rng.uniform(size=50000)
        outcomes = rng.binomial(1, probs)
        table = calibration_table(probs, outcomes)
        for bucket in table.occupied():
            assert abs(bucket.observed_rate - bucket.mean_predicted) < 0.02

    def test_empty_input_gives_zero_counts(self):
        table = calibration_table([], [])
        assert table.total == 0
        assert all(b.count == 0 for b in table.buckets)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            calibration_table([0.5], [])

    def test_csv_export_shape(self):
        table = calibration_table([0.05, 0.55], [0, 1])
        lines = table.to_csv().strip().splitlines()
        assert len(lines) == 11  # header + 10 buckets


class TestConfusionSummary:
    def test_perfect_split(self):
        summary = confusion_summary([0.9, 0.1], [1, 0], cutoff=0.5)
        assert summary.accuracy == 1.0
        assert (summary.tp, summary.tn) == (1, 1)

    def test_reference_counts(self):
        # oracle: plain arithmetic on tp=520 fn=140 tn=322 fp=234
        probs = [0.9] * 520 + [0.1] * 140 + [0.1] * 322 + [0.9] * 234
        labels = [1] * 520 + [1] * 140 + [0] * 322 + [0] * 234
        summary = confusion_summary(probs, labels, cutoff=0.5)
        assert (summary.tp, summary.fn, summary.tn, summary.fp) == (520, 140, 322, 234)
        assert summary.accuracy == pytest.approx(842 / 1216)
        assert summary.sensitivity == pytest.approx(520 / 660)
        assert summary.specificity == pytest.approx(322 / 556)

    def test_cutoff_is_inclusive(self):
        summary = confusion_summary([0.5], [1], cutoff=0.5)
        assert summary.tp == 1

    def test_cutoff_zero_classifies_everything_positive(self):
        summary = confusion_summary([0.0, 0.4, 0.9], [1, 0, 1], cutoff=0.0)
        assert summary.sensitivity == 1.0
        assert summary.specificity == 0.0

    def test_degenerate_denominator_flagged_not_raised(self):
        summary = confusion_summary([0.9, 0.8], [1, 1], cutoff=0.5)
        assert math.isnan(summary.specificity)
        assert not summary.specificity_defined
        assert summary.sensitivity_defined


class TestAuc:
    def test_perfect_separation(self):
        assert auc([0.9, 0.8, 0.1, 0.2], [1, 1, 0, 0]) == 1.0

    def test_small_case_against_pair_counting(self):
        # oracle: one concordant pair of two -> 0.5
        assert auc([0.8, 0.9, 0.3], [1, 0, 0]) == pytest.approx(0.5)

    def test_all_ties_give_half(self):
        assert auc([0.7, 0.7, 0.7], [1, 0, 1]) == pytest.approx(0.5)

    def test_degenerate_labels(self):
        with pytest.raises(DegenerateLabels):
            auc([0.5, 0.6], [1, 1])

    def test_matches_brute_force_on_random_data(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            n = rng.integers(2, 30)
            probs = rng.choice([0.0, 0.25, 0.5, 0.75, 1.0], size=n)
            labels = rng.integers(0, 2, size=n)
            if labels.min() == labels.max():
                continue
            assert auc(probs, labels) == pytest.approx(
                brute_force_auc(probs, labels), abs=1e-12)

    def test_invariant_under_monotone_transform(self):
        rng = np.random.default_rng(6)
        probs = rng.uniform(size=200)
        labels = rng.integers(0, 2, size=200)
        transformed = 1 / (1 + np.exp(-(3 * probs + 1)))
        assert auc(probs, labels) == pytest.approx(auc(transformed, labels), abs=1e-12)

    def test_label_swap_complements(self):
        rng = np.random.default_rng(13)
        probs = rng.uniform(size=150)
        labels = rng.integers(0, 2, size=150)
        assert auc(probs, labels) + auc(probs, 1 - labels) == pytest.approx(1.0, abs=1e-12)


class TestDeLongInterval:
    def test_interval_brackets_the_estimate(self):
        rng = np.random.default_rng(17)
        probs = rng.uniform(size=400)
        labels = rng.binomial(1, probs)
        estimate, lo, hi = auc_with_ci(probs, labels)
        assert lo <= estimate <= hi
        assert 0.0 <= lo and hi <= 1.0

    def test_variance_matches_direct_structural_components(self):
        # oracle: direct O(n^2) DeLong components
        rng = np.random.default_rng(18)
        probs = rng.choice(np.linspace(0, 1, 7), size=60)
        labels = np.array([1] * 25 + [0] * 35)
        rng.shuffle(labels)
        pos = probs[labels == 1]
        neg = probs[labels == 0]
        psi = (pos[:, None] > neg[None, :]) + 0.5 * (pos[:, None] == neg[None, :])
        v10 = psi.mean(axis=1)
        v01 = psi.mean(axis=0)
        var = np.var(v10, ddof=1) / len(pos) + np.var(v01, ddof=1) / len(neg)
        estimate, lo, hi = auc_with_ci(probs, labels)
        assert estimate == pytest.approx(psi.mean(), abs=1e-12)
        half_width = 1.96 * math.sqrt(var)
        assert hi - estimate == pytest.approx(min(half_width, 1 - estimate), abs=1e-10)
        assert estimate - lo == pytest.approx(min(half_width, estimate), abs=1e-10)

    def test_narrower_with_more_data(self):
        rng = np.random.default_rng(19)
        probs = rng.uniform(size=2000)
        labels = rng.binomial(1, probs)
        _, lo_big, hi_big = auc_with_ci(probs, labels)
        _, lo_small, hi_small = auc_with_ci(probs[:100], labels[:100])
        assert (hi_big - lo_big) < (hi_small - lo_small)


class TestScoreAccuracy:
    def test_perfect_predictions(self):
        scores = [MajorityScore.from_margin(m) for m in (-1, 1, 2, 0)]
        result = score_accuracy(scores, scores)
        assert result.accuracy == 1.0
        assert result.total == 4

    def test_disjoint_predictions(self):
        pred = [MajorityScore.from_margin(1)] * 5
        act = [MajorityScore.from_margin(-1)] * 5
        assert score_accuracy(pred, act).accuracy == 0.0

    def test_cells_and_trace(self):
        pred = [MajorityScore.from_margin(m) for m in (1, 1, -1, 2)]
        act = [MajorityScore.from_margin(m) for m in (1, -1, -1, 1)]
        result = score_accuracy(pred, act)
        assert result.cell(1, 1) == 1
        assert result.cell(1, -1) == 1
        assert result.cell(-1, -1) == 1
        assert result.cell(2, 1) == 1
        assert result.accuracy == pytest.approx(0.5)
        assert sum(sum(row) for row in result.counts) == 4

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            score_accuracy([MajorityScore.from_margin(0)], [])
