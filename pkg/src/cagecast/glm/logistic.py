"""Binary logistic regression fitted by damped Newton maximum likelihood."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..domain import WINNER11_FIELDS, FeatureVector
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


@dataclass(frozen=True)
class LogisticModel:
    """Fitted intercept and named coefficients for P(red wins fight)."""

    intercept: float
    coefficient_names: tuple[str, ...]
    coefficients: tuple[float, ...]
    layout: str = "winner11"

    def __post_init__(self) -> None:
        if len(self.coefficient_names) != len(self.coefficients):
            raise ValueError("coefficient name/value counts differ")
        if self.layout == "winner11" and self.coefficient_names != WINNER11_FIELDS:
            raise ValueError("winner11 models must carry the 11 winner feature names in order")
        values = (self.intercept,) + self.coefficients
        if not all(np.isfinite(values)):
            raise ValueError("model parameters must all be finite")

    def coefficient(self, name: str) -> float:
        return self.coefficients[self.coefficient_names.index(name)]

    def linear_predictor(self, x: Sequence[float]) -> float:
        return float(self.intercept + np.dot(self.coefficients, np.asarray(x, dtype=float)))


def penalized_loglik(
    params: np.ndarray, X: np.ndarray, y: np.ndarray, ridge: float
) -> tuple[float, np.ndarray, np.ndarray]:
    """Bernoulli log-likelihood with a ridge penalty on the slopes.

    ``params`` is [intercept, coefficients...]; the intercept is unpenalized.
    Returns (loglik, gradient, hessian) for Newton ascent.
    """
    Xa = np.column_stack([np.ones(len(y)), X])
    eta = Xa @ params
    # log(1 + e^eta) via logaddexp avoids overflow for large |eta|
    ll = float(np.sum(y * eta - np.logaddexp(0.0, eta)))
    ll -= 0.5 * ridge * float(np.dot(params[1:], params[1:]))
    p = sigmoid(eta)
    grad = Xa.T @ (y - p)
    grad[1:] -= ridge * params[1:]
    w = p * (1.0 - p)
    hess = -(Xa.T * w) @ Xa
    hess[1:, 1:] -= ridge * np.eye(len(params) - 1)
    return ll, grad, hess


def fit_binary_logistic(
    X,
    y,
    cfg: Optional[FitConfig] = None,
    feature_names: Optional[Sequence[str]] = None,
) -> tuple[LogisticModel, FitReport]:
    """Maximum-likelihood logistic fit.

    Non-convergence is reported through ``FitReport.converged`` rather than an
    exception; a truly singular information matrix raises SingularInformation.
    """
    cfg = cfg or FitConfig()
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or len(X) != len(y):
        raise ValueError("X must be 2-D with one row per label")
    n, k = X.shape
    if n == 0:
        raise DegenerateLabels("cannot fit on zero rows")
    if feature_names is None:
        feature_names = WINNER11_FIELDS if k == len(WINNER11_FIELDS) else tuple(
            f"x{i + 1}" for i in range(k)
        )
    names = tuple(feature_names)
    if len(names) != k:
        raise ValueError("feature_names length must match X columns")

    notes: list[str] = []
    if y.min() == y.max():
        notes.append("labels are constant; fit is intercept-saturated and not identifiable")

    result = maximize(lambda p: penalized_loglik(p, X, y, cfg.ridge_epsilon),
                      np.zeros(k + 1), cfg)
    _, _, hess = penalized_loglik(result.x, X, y, cfg.ridge_epsilon)
    ses = standard_errors(covariance_from_hessian(hess))

    layout = "winner11" if names == WINNER11_FIELDS else "custom"
    model = LogisticModel(
        intercept=float(result.x[0]),
        coefficient_names=names,
        coefficients=tuple(float(v) for v in result.x[1:]),
        layout=layout,
    )
    stats = [ParamStats.from_estimate("intercept", float(result.x[0]), float(ses[0]))]
    stats += [
        ParamStats.from_estimate(name, float(est), float(se))
        for name, est, se in zip(names, result.x[1:], ses[1:])
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


def predict_binary(model: LogisticModel, x: FeatureVector) -> float:
    """Red-corner win probability for one feature vector."""
    if x.layout != model.layout:
        raise LayoutMismatch(f"model expects {model.layout!r}, got {x.layout!r}")
    return sigmoid(model.linear_predictor(x.values))


def predict_proba(model: LogisticModel, X) -> np.ndarray:
    """Vectorized win probabilities for rows already in the model's layout."""
    X = np.asarray(X, dtype=float)
    return sigmoid(model.intercept + X @ np.asarray(model.coefficients))
