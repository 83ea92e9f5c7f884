"""Maximum-likelihood fitting and prediction for the two model families."""

from .common import (
    FitConfig,
    FitReport,
    ParamStats,
    odds_ratio_ci,
    sigmoid,
)
from .logistic import LogisticModel, fit_binary_logistic, predict_binary, predict_proba
from .ordinal import OrdinalModel, fit_proportional_odds, predict_ordinal
from .serialize import MODEL_FORMAT, load_model, model_from_dict, model_to_dict, save_model

__all__ = [
    "FitConfig",
    "FitReport",
    "ParamStats",
    "LogisticModel",
    "OrdinalModel",
    "MODEL_FORMAT",
    "fit_binary_logistic",
    "fit_proportional_odds",
    "load_model",
    "model_from_dict",
    "model_to_dict",
    "odds_ratio_ci",
    "predict_binary",
    "predict_ordinal",
    "predict_proba",
    "save_model",
    "sigmoid",
]
