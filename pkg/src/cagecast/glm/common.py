"""Shared fitting machinery: link function, Newton optimizer, fit reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..errors import SingularInformation

# Wald 95% multiplier; kept at the conventional two-decimal value so printed
# intervals line up with standard reporting.
Z_95 = 1.96


def sigmoid(z):
    """Logistic function 1/(1+exp(-z)), overflow-safe for large |z|.

    Accepts a scalar or array; returns a float for scalar input. Saturates to
    0.0/1.0 in the far tails instead of overflowing or producing NaN.
    """
    scalar = np.ndim(z) == 0
    arr = np.atleast_1d(np.asarray(z, dtype=float))
    out = np.empty_like(arr)
    pos = arr >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-arr[pos]))
    ez = np.exp(arr[~pos])
    out[~pos] = ez / (1.0 + ez)
    if scalar:
        return float(out[0])
    return out.reshape(np.shape(z))


def logit(p: float) -> float:
    return math.log(p / (1.0 - p))


def two_sided_p(z: float) -> float:
    """Two-sided normal p-value for a Wald z statistic."""
    if math.isnan(z):
        return float("nan")
    return math.erfc(abs(z) / math.sqrt(2.0))


def _exp_saturating(z: float) -> float:
    """exp that saturates to inf instead of raising on overflow."""
    try:
        return math.exp(z)
    except OverflowError:
        return float("inf")


def odds_ratio_ci(coefficient: float, std_error: float) -> tuple[float, float, float]:
    """Odds ratio exp(coef) with Wald 95% bounds exp(coef +- 1.96*se)."""
    if not std_error > 0:
        raise ValueError(f"std_error must be > 0, got {std_error}")
    return (
        _exp_saturating(coefficient),
        _exp_saturating(coefficient - Z_95 * std_error),
        _exp_saturating(coefficient + Z_95 * std_error),
    )


@dataclass(frozen=True)
class FitConfig:
    """Optimizer settings: damped Newton with a tiny ridge rescue penalty."""

    max_iterations: int = 50
    gradient_tolerance: float = 1e-8
    ridge_epsilon: float = 1e-8

    def __post_init__(self) -> None:
        if not self.gradient_tolerance > 0:
            raise ValueError("gradient_tolerance must be > 0")


@dataclass(frozen=True)
class ParamStats:
    """Wald statistics for one fitted parameter."""

    name: str
    estimate: float
    std_error: float
    z_value: float
    p_value: float
    odds_ratio: float
    ci_low: float
    ci_high: float

    @classmethod
    def from_estimate(cls, name: str, estimate: float, std_error: float) -> "ParamStats":
        if math.isnan(std_error) or std_error <= 0:
            return cls(name, estimate, float("nan"), float("nan"), float("nan"),
                       _exp_saturating(estimate), float("nan"), float("nan"))
        ratio, lo, hi = odds_ratio_ci(estimate, std_error)
        z = estimate / std_error
        return cls(name, estimate, std_error, z, two_sided_p(z), ratio, lo, hi)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "estimate": self.estimate,
            "std_error": self.std_error,
            "z_value": self.z_value,
            "p_value": self.p_value,
            "odds_ratio": self.odds_ratio,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
        }


@dataclass
class FitReport:
    """Per-parameter Wald statistics plus optimizer diagnostics."""

    parameters: list[ParamStats]
    log_likelihood: float
    iterations: int
    converged: bool
    notes: list[str] = field(default_factory=list)

    def find(self, name: str) -> ParamStats:
        for stat in self.parameters:
            if stat.name == name:
                return stat
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "parameters": [p.as_dict() for p in self.parameters],
            "log_likelihood": self.log_likelihood,
            "iterations": self.iterations,
            "converged": self.converged,
            "notes": list(self.notes),
        }

    def format_table(self) -> str:
        header = f"{'parameter':<28}{'estimate':>10}{'std err':>10}{'z':>8}{'p':>11}{'OR':>8}  95% CI"
        lines = [header, "-" * len(header)]
        for p in self.parameters:
            ci = f"[{p.ci_low:.3f}, {p.ci_high:.3f}]" if not math.isnan(p.ci_low) else "[-]"
            z = f"{p.z_value:.2f}" if not math.isnan(p.z_value) else "-"
            pv = f"{p.p_value:.2e}" if not math.isnan(p.p_value) else "-"
            se = f"{p.std_error:.3f}" if not math.isnan(p.std_error) else "-"
            lines.append(
                f"{p.name:<28}{p.estimate:>10.3f}{se:>10}{z:>8}{pv:>11}{p.odds_ratio:>8.3f}  {ci}"
            )
        lines.append(
            f"log-likelihood {self.log_likelihood:.4f}  iterations {self.iterations}  "
            f"converged {self.converged}"
        )
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


@dataclass
class NewtonResult:
    x: np.ndarray
    log_likelihood: float
    iterations: int
    converged: bool
    loglik_path: list[float]


def maximize(
    objective: Callable[[np.ndarray], tuple[float, np.ndarray, np.ndarray]],
    x0: Sequence[float],
    cfg: FitConfig,
) -> NewtonResult:
    """Damped Newton ascent on a concave objective.

    ``objective`` returns (loglik, gradient, hessian). Full Newton steps are
    halved until the log-likelihood does not decrease, so the accepted path is
    monotone (up to float noise). Convergence is a gradient sup-norm test.
    """
    x = np.array(x0, dtype=float)
    ll, grad, hess = objective(x)
    path = [ll]
    n_iter = 0
    while n_iter < cfg.max_iterations and np.max(np.abs(grad)) >= cfg.gradient_tolerance:
        step = _newton_step(hess, grad)
        scale, accepted = 1.0, False
        while scale >= 2.0 ** -40:
            candidate = x + scale * step
            cand_ll, cand_grad, cand_hess = objective(candidate)
            if np.isfinite(cand_ll) and cand_ll >= ll - 1e-12 * (1.0 + abs(ll)):
                x, ll, grad, hess = candidate, cand_ll, cand_grad, cand_hess
                accepted = True
                break
            scale *= 0.5
        n_iter += 1
        path.append(ll)
        if not accepted:
            break
    converged = bool(np.max(np.abs(grad)) < cfg.gradient_tolerance)
    return NewtonResult(x=x, log_likelihood=ll, iterations=n_iter, converged=converged,
                        loglik_path=path)


def _newton_step(hess: np.ndarray, grad: np.ndarray) -> np.ndarray:
    """Solve -H step = grad, escalating diagonal damping if -H is not PD."""
    neg_hess = -hess
    scale = max(float(np.max(np.abs(neg_hess))), 1.0)
    jitter = 0.0
    for _ in range(12):
        try:
            chol = np.linalg.cholesky(neg_hess + jitter * np.eye(len(grad)))
            return np.linalg.solve(chol.T, np.linalg.solve(chol, grad))
        except np.linalg.LinAlgError:
            jitter = scale * 1e-10 if jitter == 0.0 else jitter * 100.0
    raise SingularInformation("information matrix is numerically singular even after ridge")


def covariance_from_hessian(hess: np.ndarray) -> np.ndarray:
    """Inverse observed information at the optimum."""
    try:
        return np.linalg.inv(-hess)
    except np.linalg.LinAlgError as exc:
        raise SingularInformation(
            "information matrix is numerically singular even after ridge"
        ) from exc


def standard_errors(cov: np.ndarray) -> np.ndarray:
    """Square roots of the covariance diagonal; NaN where negative."""
    diag = np.diag(cov).copy()
    bad = diag <= 0
    diag[bad] = np.nan
    return np.sqrt(diag)
