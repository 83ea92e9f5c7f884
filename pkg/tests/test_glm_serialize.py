"""Model JSON schema round-trips and load failures."""

import json

import pytest

from cagecast.errors import ModelLoadError
from cagecast.glm import (
    MODEL_FORMAT,
    load_model,
    model_from_dict,
    model_to_dict,
    save_model,
)


class TestRoundTrip:
    def test_logistic_round_trip_exact(self, winner_model_r1, tmp_path):
        path = tmp_path / "model.json"
        save_model(path, winner_model_r1)
        loaded = load_model(path)
        assert loaded == winner_model_r1

    def test_ordinal_round_trip_exact(self, round_model, tmp_path):
        path = tmp_path / "model.json"
        save_model(path, round_model)
        loaded = load_model(path)
        assert loaded == round_model

    def test_dict_round_trip_through_json_text(self, round_model):
        doc = json.loads(json.dumps(model_to_dict(round_model)))
        assert model_from_dict(doc) == round_model

    def test_format_tag_present(self, winner_model_r2):
        doc = model_to_dict(winner_model_r2, version="demo")
        assert doc["format"] == MODEL_FORMAT
        assert doc["kind"] == "binary_logistic"
        assert doc["version"] == "demo"


class TestLoadFailures:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelLoadError):
            load_model(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ModelLoadError):
            load_model(path)

    def test_unknown_format(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"format": "other/9", "kind": "binary_logistic"}))
        with pytest.raises(ModelLoadError):
            load_model(path)

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"format": MODEL_FORMAT, "kind": "mystery",
                                    "coefficients": []}))
        with pytest.raises(ModelLoadError):
            load_model(path)
