"""Proportional-odds ordinal regression for the seven round-score margins.

The model is P(Y <= k | x) = sigmoid(theta_k - beta.x) over ordered categories,
so a positive coefficient pushes probability mass toward high (red-favoring)
margins. Thresholds are optimized through an unconstrained first-cut plus
log-gap parametrization, which keeps them strictly increasing at every step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..domain import MARGINS, ROUND9_FIELDS, FeatureVector, MajorityScore
from ..errors import DegenerateLabels, LayoutMismatch
from .common import (
    FitConfig,
    FitReport,
    ParamStats,
    covariance_from_hessian,
    maximize,
    sigmoid,
    standard_errors,
)

# Pinned-threshold placement for categories absent from training data: the
# boundary gap drives their predicted probability to ~1e-13, and the tiny
# delta keeps the strict-ordering invariant.
_PIN_GAP = 30.0
_PIN_DELTA = 1e-6


@dataclass(frozen=True)
class OrdinalModel:
    """Fitted cut-points and named coefficients over ordered categories."""

    thresholds: tuple[float, ...]
    coefficient_names: tuple[str, ...]
    coefficients: tuple[float, ...]
    categories: tuple[int, ...] = MARGINS
    layout: str = "round9"

    def __post_init__(self) -> None:
        if len(self.thresholds) != len(self.categories) - 1:
            raise ValueError("need exactly one threshold between adjacent categories")
        diffs = np.diff(self.thresholds)
        if len(diffs) and not np.all(diffs > 0):
            raise ValueError("thresholds must be strictly increasing")
        if not all(np.isfinite(self.thresholds)) or not all(np.isfinite(self.coefficients)):
            raise ValueError("model parameters must all be finite")
        if len(self.coefficient_names) != len(self.coefficients):
            raise ValueError("coefficient name/value counts differ")
        if self.layout == "round9" and self.coefficient_names != ROUND9_FIELDS:
            raise ValueError("round9 models must carry the 9 round feature names in order")

    def coefficient(self, name: str) -> float:
        return self.coefficients[self.coefficient_names.index(name)]

    def category_probabilities(self, x: Sequence[float]) -> np.ndarray:
        """P(Y = category) for each category, in category order."""
        eta = float(np.dot(self.coefficients, np.asarray(x, dtype=float)))
        cum = sigmoid(np.asarray(self.thresholds) - eta)
        return np.diff(np.concatenate([[0.0], cum, [1.0]]))

    def cumulative_probabilities(self, x: Sequence[float]) -> np.ndarray:
        eta = float(np.dot(self.coefficients, np.asarray(x, dtype=float)))
        return sigmoid(np.asarray(self.thresholds) - eta)


def predict_ordinal(model: OrdinalModel, x: FeatureVector) -> tuple[np.ndarray, MajorityScore]:
    """Category probabilities plus the highest-probability majority score.

    Exact probability ties break toward the margin closest to zero (then the
    negative one), so prediction is deterministic.
    """
    if x.layout != model.layout:
        raise LayoutMismatch(f"model expects {model.layout!r}, got {x.layout!r}")
    probs = model.category_probabilities(x.values)
    best = min(range(len(probs)), key=lambda i: (-probs[i], abs(model.categories[i]), model.categories[i]))
    return probs, MajorityScore.from_margin(model.categories[best])


def penalized_loglik_natural(
    params: np.ndarray, X: np.ndarray, y_idx: np.ndarray, n_thresholds: int, ridge: float
) -> tuple[float, np.ndarray, np.ndarray]:
    """Proportional-odds log-likelihood and derivatives in (theta, beta) space.

    ``params`` is [theta_1..theta_T, beta_1..beta_d] with theta strictly
    increasing; ``y_idx`` holds 0-based category indices. The ridge penalty
    applies to beta only.
    """
    T = n_thresholds
    theta = params[:T]
    beta = params[T:]
    n, d = X.shape
    K = T + 1
    c = y_idx
    eta = X @ beta

    has_hi = c < K - 1
    has_lo = c > 0
    hi_cut = np.minimum(c, T - 1)
    lo_cut = np.maximum(c - 1, 0)
    u = np.where(has_hi, theta[hi_cut] - eta, np.inf)
    v = np.where(has_lo, theta[lo_cut] - eta, -np.inf)

    F_hi = sigmoid(u)
    F_lo = sigmoid(v)
    f_hi = F_hi * (1.0 - F_hi)
    f_lo = F_lo * (1.0 - F_lo)
    fp_hi = f_hi * (1.0 - 2.0 * F_hi)
    fp_lo = f_lo * (1.0 - 2.0 * F_lo)

    p = np.maximum(F_hi - F_lo, 1e-300)
    ll = float(np.sum(np.log(p))) - 0.5 * ridge * float(np.dot(beta, beta))

    A = f_hi / p
    B = f_lo / p

    grad_theta = np.zeros(T)
    np.add.at(grad_theta, hi_cut[has_hi], A[has_hi])
    np.add.at(grad_theta, lo_cut[has_lo], -B[has_lo])
    grad_beta = X.T @ (B - A) - ridge * beta

    l_uu = fp_hi / p - A * A
    l_vv = -fp_lo / p - B * B
    l_uv = A * B

    Htt = np.zeros((T, T))
    np.add.at(Htt, (hi_cut[has_hi], hi_cut[has_hi]), l_uu[has_hi])
    np.add.at(Htt, (lo_cut[has_lo], lo_cut[has_lo]), l_vv[has_lo])
    both = has_hi & has_lo
    np.add.at(Htt, (hi_cut[both], lo_cut[both]), l_uv[both])
    np.add.at(Htt, (lo_cut[both], hi_cut[both]), l_uv[both])

    w_hi = l_uu + l_uv
    w_lo = l_vv + l_uv
    Htb = np.zeros((T, d))
    np.add.at(Htb, hi_cut[has_hi], -(w_hi[has_hi, None] * X[has_hi]))
    np.add.at(Htb, lo_cut[has_lo], -(w_lo[has_lo, None] * X[has_lo]))

    w_bb = l_uu + 2.0 * l_uv + l_vv
    Hbb = (X.T * w_bb) @ X - ridge * np.eye(d)

    grad = np.concatenate([grad_theta, grad_beta])
    hess = np.block([[Htt, Htb], [Htb.T, Hbb]])
    return ll, grad, hess


def _thresholds_from_raw(raw: np.ndarray) -> np.ndarray:
    """First cut plus cumulative exp(log-gaps)."""
    return raw[0] + np.concatenate([[0.0], np.cumsum(np.exp(raw[1:]))])


def _raw_objective(X, y_idx, T, ridge):
    """Wrap the natural-space derivatives into the log-gap parametrization."""

    def objective(params: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
        raw = params[:T]
        beta = params[T:]
        theta = _thresholds_from_raw(raw)
        ll, grad_n, hess_n = penalized_loglik_natural(
            np.concatenate([theta, beta]), X, y_idx, T, ridge
        )
        # Jacobian of theta w.r.t. raw parameters: column 0 is all ones,
        # column i stacks exp(raw_i) for rows j >= i.
        jac = np.zeros((T, T))
        jac[:, 0] = 1.0
        for i in range(1, T):
            jac[i:, i] = np.exp(raw[i])
        grad_theta = grad_n[:T]
        grad = np.concatenate([jac.T @ grad_theta, grad_n[T:]])
        hess = np.empty_like(hess_n)
        hess[:T, :T] = jac.T @ hess_n[:T, :T] @ jac
        # curvature of the reparametrization itself
        for i in range(1, T):
            hess[i, i] += np.exp(raw[i]) * grad_theta[i:].sum()
        hess[:T, T:] = jac.T @ hess_n[:T, T:]
        hess[T:, :T] = hess[:T, T:].T
        hess[T:, T:] = hess_n[T:, T:]
        return ll, grad, hess

    return objective


def fit_proportional_odds(
    X,
    y,
    cfg: Optional[FitConfig] = None,
    feature_names: Optional[Sequence[str]] = None,
    categories: Sequence[int] = MARGINS,
) -> tuple[OrdinalModel, FitReport]:
    """Maximum-likelihood proportional-odds fit over the margin categories.

    Categories absent from the training data do not abort the fit: their
    thresholds are pinned at the boundary so their predicted probability is
    effectively zero, and a warning lands in the report notes.
    """
    cfg = cfg or FitConfig()
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)
    categories = tuple(int(c) for c in categories)
    if X.ndim != 2 or len(X) != len(y):
        raise ValueError("X must be 2-D with one row per target")
    n, d = X.shape
    if n == 0:
        raise DegenerateLabels("cannot fit on zero rows")
    if feature_names is None:
        feature_names = ROUND9_FIELDS if d == len(ROUND9_FIELDS) else tuple(
            f"x{i + 1}" for i in range(d)
        )
    names = tuple(feature_names)
    if len(names) != d:
        raise ValueError("feature_names length must match X columns")

    cat_index = {cat: i for i, cat in enumerate(categories)}
    try:
        full_idx = np.array([cat_index[int(v)] for v in y], dtype=int)
    except KeyError as exc:
        raise ValueError(f"target {exc.args[0]} not in categories {categories}") from None

    counts = np.bincount(full_idx, minlength=len(categories))
    observed = [i for i, cnt in enumerate(counts) if cnt > 0]
    if len(observed) < 2:
        raise DegenerateLabels("need observations in at least two distinct categories")
    absent = [categories[i] for i, cnt in enumerate(counts) if cnt == 0]

    collapse = {full: rank for rank, full in enumerate(observed)}
    y_idx = np.array([collapse[i] for i in full_idx], dtype=int)
    m = len(observed)
    T = m - 1

    # start thresholds at empirical cumulative logits, beta at zero
    cum = np.cumsum(counts[observed])[:-1] / n
    cum = np.clip(cum, 1.0 / (n + 1), 1.0 - 1.0 / (n + 1))
    start = np.log(cum / (1.0 - cum))
    for j in range(1, T):
        start[j] = max(start[j], start[j - 1] + 1e-3)
    raw0 = np.concatenate([[start[0]], np.log(np.diff(start))]) if T > 1 else start[:1]
    x0 = np.concatenate([raw0, np.zeros(d)])

    result = maximize(_raw_objective(X, y_idx, T, cfg.ridge_epsilon), x0, cfg)
    theta_fit = _thresholds_from_raw(result.x[:T])
    beta_fit = result.x[T:]

    _, _, hess_nat = penalized_loglik_natural(
        np.concatenate([theta_fit, beta_fit]), X, y_idx, T, cfg.ridge_epsilon
    )
    ses = standard_errors(covariance_from_hessian(hess_nat))
    theta_se, beta_se = ses[:T], ses[T:]

    full_thresholds, full_ses = _expand_thresholds(categories, observed, theta_fit, theta_se)

    model = OrdinalModel(
        thresholds=tuple(float(t) for t in full_thresholds),
        coefficient_names=names,
        coefficients=tuple(float(b) for b in beta_fit),
        categories=categories,
        layout="round9" if names == ROUND9_FIELDS else "custom",
    )

    stats = [
        ParamStats.from_estimate(
            f"cut({categories[j]}|{categories[j + 1]})", float(full_thresholds[j]), float(full_ses[j])
        )
        for j in range(len(categories) - 1)
    ]
    stats += [
        ParamStats.from_estimate(name, float(est), float(se))
        for name, est, se in zip(names, beta_fit, beta_se)
    ]
    notes = [
        f"empty category {cat:+d}: absent from training data, boundary threshold pinned"
        for cat in absent
    ]
    if not result.converged:
        notes.append("gradient tolerance not reached within the iteration budget")
    report = FitReport(
        parameters=stats,
        log_likelihood=result.log_likelihood,
        iterations=result.iterations,
        converged=result.converged,
        notes=notes,
    )
    return model, report


def _expand_thresholds(
    categories: tuple[int, ...],
    observed: list[int],
    theta: np.ndarray,
    theta_se: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Map collapsed cuts back onto the full category grid.

    Cuts bordering absent categories are synthesized near the fitted ones (or
    far past the extremes) and carry NaN standard errors.
    """
    K = len(categories)
    full = np.empty(K - 1)
    full_se = np.full(K - 1, np.nan)
    seen_by_group: dict[int, int] = {}
    for j in range(K - 1):
        i = sum(1 for o in observed if o <= j)  # observed categories at or below this cut
        rank = seen_by_group.get(i, 0)
        seen_by_group[i] = rank + 1
        if i == 0:
            full[j] = theta[0] - _PIN_GAP + rank * _PIN_DELTA
        elif i == len(observed):
            full[j] = theta[-1] + _PIN_GAP + rank * _PIN_DELTA
        else:
            full[j] = theta[i - 1] + rank * _PIN_DELTA
            if rank == 0:
                # rank-0 cut is the genuine fitted boundary
                full_se[j] = theta_se[i - 1]
    return full, full_se
