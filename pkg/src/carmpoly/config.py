"""Run configuration with flags > environment > config file > defaults."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields

ENV_PREFIX = "CARMPOLY_"
OUTPUT_FORMATS = ("json", "jsonl", "csv", "table")

_INT_FIELDS = ("max_limit", "segment_size", "threads", "oracle_bound")


@dataclass
class RunConfig:
    max_limit: int = 10**8
    segment_size: int = 10**6
    threads: int = 1
    oracle_bound: int = 60
    output_format: str = "json"

    def validate(self) -> None:
        if self.segment_size < 10**3:
            raise ValueError(f"segment_size must be >= 1000, got {self.segment_size}")
        if self.oracle_bound > 200:
            raise ValueError(f"oracle_bound must be <= 200, got {self.oracle_bound}")
        if self.oracle_bound < 1:
            raise ValueError(f"oracle_bound must be >= 1, got {self.oracle_bound}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.max_limit < 10**3:
            raise ValueError(f"max_limit must be >= 1000, got {self.max_limit}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )


def _known_keys() -> set[str]:
    return {f.name for f in fields(RunConfig)}


def load_run_config(
    config_path: str | None = None,
    overrides: dict | None = None,
    environ: dict | None = None,
) -> RunConfig:
    """Assemble the effective configuration.

    ``overrides`` holds CLI flag values (None entries are ignored); the
    config file location itself resolves as flag > CARMPOLY_CONFIG.
    """
    env = os.environ if environ is None else environ
    values: dict = {}

    path = config_path or env.get(ENV_PREFIX + "CONFIG")
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - _known_keys()
        if unknown:
            raise ValueError(f"unknown config keys in {path}: {sorted(unknown)}")
        values.update(data)

    for name in _INT_FIELDS:
        raw = env.get(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = int(raw)
    raw = env.get(ENV_PREFIX + "OUTPUT_FORMAT")
    if raw is not None:
        values["output_format"] = raw

    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = val

    cfg = RunConfig(**values)
    cfg.validate()
    return cfg
