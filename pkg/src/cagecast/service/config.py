"""Service configuration: file + flag driven, with env-var overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

CONFIG_SCHEMA = "cagecast-config/1"

ENV_LISTEN = "CAGECAST_LISTEN"
ENV_DATA_DIR = "CAGECAST_DATA_DIR"


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: str = "./data"
    listen_host: str = "127.0.0.1"
    listen_port: int = 8800
    round_model_path: Optional[str] = None
    winner_model_path: Optional[str] = None
    edge_threshold: float = 0.10
    min_odds: float = 1.20
    default_stake: float = 100.0
    replay_fixture: Optional[str] = None
    replay_speed: float = 0.0

    @classmethod
    def from_file(cls, path) -> "ServiceConfig":
        doc = json.loads(Path(path).read_text())
        if doc.get("schema") != CONFIG_SCHEMA:
            raise ValueError(f"unsupported config schema {doc.get('schema')!r}")
        known = {f for f in cls.__dataclass_fields__}
        fields = {k: v for k, v in doc.items() if k in known}
        return cls(**fields)

    def with_env_overrides(self, env=os.environ) -> "ServiceConfig":
        cfg = self
        listen = env.get(ENV_LISTEN)
        if listen:
            host, _, port = listen.rpartition(":")
            cfg = replace(cfg, listen_host=host or cfg.listen_host,
                          listen_port=int(port))
        data_dir = env.get(ENV_DATA_DIR)
        if data_dir:
            cfg = replace(cfg, data_dir=data_dir)
        return cfg

    def ensure_data_dir(self) -> Path:
        path = Path(self.data_dir)
        path.mkdir(parents=True, exist_ok=True)
        return path
