"""Model assessment: calibration buckets, confusion summaries, ROC/AUC, and
the 7x7 predicted-by-actual score contingency table.

Degenerate denominators (no positives, no negatives) are reported through
explicit flags and NaN rather than exceptions, so batch evaluation over small
replay slices never aborts.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .domain import MARGINS, MajorityScore
from .errors import DegenerateLabels, LengthMismatch

Z_95 = 1.96


@dataclass(frozen=True)
class CalibrationBucket:
    low: float
    high: float
    count: int
    mean_predicted: float
    observed_rate: float


@dataclass(frozen=True)
class CalibrationTable:
    """Observed event rate per predicted-probability bucket."""

    buckets: tuple[CalibrationBucket, ...]
    total: int

    def occupied(self) -> list[CalibrationBucket]:
        return [b for b in self.buckets if b.count > 0]

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "buckets": [
                {
                    "low": b.low,
                    "high": b.high,
                    "count": b.count,
                    "mean_predicted": b.mean_predicted,
                    "observed_rate": b.observed_rate,
                }
                for b in self.buckets
            ],
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["bucket_low", "bucket_high", "count", "mean_predicted", "observed_rate"])
        for b in self.buckets:
            writer.writerow([b.low, b.high, b.count,
                             "" if math.isnan(b.mean_predicted) else b.mean_predicted,
                             "" if math.isnan(b.observed_rate) else b.observed_rate])
        return out.getvalue()


def calibration_table(probs: Sequence[float], outcomes: Sequence[int],
                      width: float = 0.10) -> CalibrationTable:
    """Bucket predictions into [0,w), [w,2w), ..., last bucket closed at 1.0.

    Empty buckets are reported with count 0 and NaN rates.
    """
    probs = np.asarray(probs, dtype=float)
    outcomes = np.asarray(outcomes, dtype=float)
    if len(probs) != len(outcomes):
        raise LengthMismatch(f"{len(probs)} probabilities vs {len(outcomes)} outcomes")
    if len(probs) and (probs.min() < 0 or probs.max() > 1):
        raise ValueError("probabilities must lie in [0, 1]")
    n_buckets = int(round(1.0 / width))
    index = np.minimum((probs / width).astype(int), n_buckets - 1) if len(probs) else np.array([], int)
    buckets = []
    for b in range(n_buckets):
        mask = index == b
        count = int(mask.sum())
        buckets.append(CalibrationBucket(
            low=b * width,
            high=1.0 if b == n_buckets - 1 else (b + 1) * width,
            count=count,
            mean_predicted=float(probs[mask].mean()) if count else float("nan"),
            observed_rate=float(outcomes[mask].mean()) if count else float("nan"),
        ))
    return CalibrationTable(buckets=tuple(buckets), total=len(probs))


@dataclass(frozen=True)
class ConfusionSummary:
    """Counts and rates at a probability cutoff (predict positive at p >= cutoff)."""

    tp: int
    fp: int
    tn: int
    fn: int
    cutoff: float
    accuracy: float
    sensitivity: float
    specificity: float
    sensitivity_defined: bool
    specificity_defined: bool

    def as_dict(self) -> dict:
        return {
            "tp": self.tp, "fp": self.fp, "tn": self.tn, "fn": self.fn,
            "cutoff": self.cutoff,
            "accuracy": self.accuracy,
            "sensitivity": self.sensitivity,
            "specificity": self.specificity,
            "sensitivity_defined": self.sensitivity_defined,
            "specificity_defined": self.specificity_defined,
        }


def confusion_summary(probs: Sequence[float], labels: Sequence[int],
                      cutoff: float = 0.5) -> ConfusionSummary:
    probs = np.asarray(probs, dtype=float)
    labels = np.asarray(labels, dtype=int)
    if len(probs) != len(labels):
        raise LengthMismatch(f"{len(probs)} probabilities vs {len(labels)} labels")
    if not 0 <= cutoff <= 1:
        raise ValueError(f"cutoff must lie in [0, 1], got {cutoff}")
    pred = probs >= cutoff
    tp = int(np.sum(pred & (labels == 1)))
    fp = int(np.sum(pred & (labels == 0)))
    tn = int(np.sum(~pred & (labels == 0)))
    fn = int(np.sum(~pred & (labels == 1)))
    total = tp + fp + tn + fn
    sens_ok = (tp + fn) > 0
    spec_ok = (tn + fp) > 0
    return ConfusionSummary(
        tp=tp, fp=fp, tn=tn, fn=fn, cutoff=cutoff,
        accuracy=(tp + tn) / total if total else float("nan"),
        sensitivity=tp / (tp + fn) if sens_ok else float("nan"),
        specificity=tn / (tn + fp) if spec_ok else float("nan"),
        sensitivity_defined=sens_ok,
        specificity_defined=spec_ok,
    )


def auc(probs: Sequence[float], labels: Sequence[int]) -> float:
    """Probability a random positive outranks a random negative (ties 0.5).

    Computed with midranks, which is the Mann-Whitney statistic.
    """
    probs = np.asarray(probs, dtype=float)
    labels = np.asarray(labels, dtype=int)
    if len(probs) != len(labels):
        raise LengthMismatch(f"{len(probs)} probabilities vs {len(labels)} labels")
    n_pos = int(np.sum(labels == 1))
    n_neg = int(np.sum(labels == 0))
    if n_pos == 0 or n_neg == 0:
        raise DegenerateLabels("AUC needs at least one positive and one negative label")
    ranks = _midranks(probs)
    rank_sum_pos = float(np.sum(ranks[labels == 1]))
    return (rank_sum_pos - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def auc_with_ci(probs: Sequence[float], labels: Sequence[int]) -> tuple[float, float, float]:
    """AUC plus a 95% interval from the DeLong structural-component variance."""
    probs = np.asarray(probs, dtype=float)
    labels = np.asarray(labels, dtype=int)
    estimate = auc(probs, labels)
    pos = probs[labels == 1]
    neg = probs[labels == 0]
    m, n = len(pos), len(neg)
    # per-observation placement values: V10 over positives, V01 over negatives
    tx = _midranks(pos)
    ty = _midranks(neg)
    tz = _midranks(np.concatenate([pos, neg]))
    v10 = (tz[:m] - tx) / n
    v01 = 1.0 - (tz[m:] - ty) / m
    s10 = float(np.var(v10, ddof=1)) if m > 1 else 0.0
    s01 = float(np.var(v01, ddof=1)) if n > 1 else 0.0
    se = math.sqrt(s10 / m + s01 / n)
    return estimate, max(0.0, estimate - Z_95 * se), min(1.0, estimate + Z_95 * se)


def _midranks(x: np.ndarray) -> np.ndarray:
    """1-based ranks with ties sharing their average rank."""
    order = np.argsort(x, kind="mergesort")
    z = x[order]
    n = len(x)
    ranks = np.empty(n, dtype=float)
    i = 0
    while i < n:
        j = i
        while j < n and z[j] == z[i]:
            j += 1
        ranks[i:j] = 0.5 * (i + j - 1) + 1.0
        i = j
    out = np.empty(n, dtype=float)
    out[order] = ranks
    return out


@dataclass(frozen=True)
class ScoreContingency:
    """Predicted-by-actual counts over the seven margin categories."""

    counts: tuple[tuple[int, ...], ...]  # rows: predicted margin, cols: actual margin
    accuracy: float
    total: int

    def cell(self, predicted_margin: int, actual_margin: int) -> int:
        return self.counts[MARGINS.index(predicted_margin)][MARGINS.index(actual_margin)]

    def as_dict(self) -> dict:
        return {
            "margins": list(MARGINS),
            "counts": [list(row) for row in self.counts],
            "accuracy": self.accuracy,
            "total": self.total,
        }

    def format_table(self) -> str:
        head = "pred\\actual" + "".join(f"{m:>7}" for m in MARGINS)
        lines = [head]
        for i, m in enumerate(MARGINS):
            lines.append(f"{m:>11}" + "".join(f"{c:>7}" for c in self.counts[i]))
        lines.append(f"accuracy {self.accuracy:.4f} over {self.total} rounds")
        return "\n".join(lines)


def score_accuracy(predicted: Sequence[MajorityScore],
                   actual: Sequence[MajorityScore]) -> ScoreContingency:
    """Exact-match accuracy and the margin contingency table."""
    if len(predicted) != len(actual):
        raise LengthMismatch(f"{len(predicted)} predictions vs {len(actual)} actuals")
    counts = np.zeros((len(MARGINS), len(MARGINS)), dtype=int)
    for pred, act in zip(predicted, actual):
        counts[MARGINS.index(pred.margin), MARGINS.index(act.margin)] += 1
    total = len(predicted)
    accuracy = float(np.trace(counts)) / total if total else float("nan")
    return ScoreContingency(
        counts=tuple(tuple(int(c) for c in row) for row in counts),
        accuracy=accuracy,
        total=total,
    )
