"""Versioned JSON schema for fitted model parameters."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from ..errors import ModelLoadError
from .common import FitReport
from .logistic import LogisticModel
from .ordinal import OrdinalModel

MODEL_FORMAT = "cagecast-model/1"

Model = Union[LogisticModel, OrdinalModel]


def model_to_dict(model: Model, report: Optional[FitReport] = None,
                  version: str = "unversioned") -> dict:
    doc: dict = {
        "format": MODEL_FORMAT,
        "version": version,
        "layout": model.layout,
        "coefficients": [[name, value] for name, value in
                         zip(model.coefficient_names, model.coefficients)],
    }
    if isinstance(model, LogisticModel):
        doc["kind"] = "binary_logistic"
        doc["intercept"] = model.intercept
    elif isinstance(model, OrdinalModel):
        doc["kind"] = "proportional_odds"
        doc["thresholds"] = list(model.thresholds)
        doc["categories"] = list(model.categories)
    else:
        raise TypeError(f"unsupported model type {type(model)!r}")
    if report is not None:
        doc["fit"] = {
            "log_likelihood": report.log_likelihood,
            "iterations": report.iterations,
            "converged": report.converged,
            "notes": list(report.notes),
        }
    return doc


def model_from_dict(doc: dict) -> Model:
    if doc.get("format") != MODEL_FORMAT:
        raise ModelLoadError(f"unsupported model format {doc.get('format')!r}")
    names = tuple(name for name, _ in doc["coefficients"])
    values = tuple(float(v) for _, v in doc["coefficients"])
    kind = doc.get("kind")
    if kind == "binary_logistic":
        return LogisticModel(
            intercept=float(doc["intercept"]),
            coefficient_names=names,
            coefficients=values,
            layout=doc["layout"],
        )
    if kind == "proportional_odds":
        return OrdinalModel(
            thresholds=tuple(float(t) for t in doc["thresholds"]),
            coefficient_names=names,
            coefficients=values,
            categories=tuple(int(c) for c in doc["categories"]),
            layout=doc["layout"],
        )
    raise ModelLoadError(f"unknown model kind {kind!r}")


def save_model(path, model: Model, report: Optional[FitReport] = None,
               version: str = "unversioned") -> None:
    Path(path).write_text(json.dumps(model_to_dict(model, report, version), indent=2) + "\n")


def load_model(path) -> Model:
    path = Path(path)
    if not path.exists():
        raise ModelLoadError(f"model file not found: {path}")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ModelLoadError(f"model file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ModelLoadError(f"model file {path} must hold a JSON object")
    try:
        return model_from_dict(doc)
    except (KeyError, ValueError, TypeError) as exc:
        raise ModelLoadError(f"model file {path} is malformed: {exc}") from exc
