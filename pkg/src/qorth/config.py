"""Configuration management for qorth.

Loads verification bounds from the platform config directory with env var
overrides. Priority: CLI flags > env vars > config file > defaults.
"""

from __future__ import annotations

import logging
import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

import platformdirs
import yaml

logger = logging.getLogger(__name__)

_APP_NAME = "qorth"

_INT_FIELDS = ("max_n", "max_j", "degree_bound", "jobs", "seed", "samples")


def get_config_dir() -> Path:
    """Get platform-specific config directory.

    macOS: ~/Library/Application Support/qorth/
    Windows: %APPDATA%/qorth/
    Linux: ~/.config/qorth/
    """
    return Path(platformdirs.user_config_dir(_APP_NAME))


@dataclass
class QorthConfig:
    """Bounds and run options for the verification suites."""

    max_n: int = 3
    max_j: int = 5
    degree_bound: int = 3
    jobs: int = 1
    seed: int = 0
    samples: int = 100
    log_level: str = "WARNING"
    json_path: str = ""

    def validate(self) -> list[str]:
        """Clamp out-of-range values and return a warning per change."""
        warnings: list[str] = []
        if not 0 <= self.max_n <= 4:
            warnings.append(f"max_n should be 0-4, got {self.max_n}")
            self.max_n = max(0, min(4, self.max_n))
        if not 0 <= self.max_j <= 6:
            warnings.append(f"max_j should be 0-6, got {self.max_j}")
            self.max_j = max(0, min(6, self.max_j))
        if self.degree_bound < 2:
            warnings.append(
                f"degree_bound should be at least 2, got {self.degree_bound}"
            )
            self.degree_bound = 2
        if self.jobs < 1:
            warnings.append(f"jobs should be at least 1, got {self.jobs}")
            self.jobs = 1
        if self.samples < 1:
            warnings.append(f"samples should be at least 1, got {self.samples}")
            self.samples = 1
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if self.log_level.upper() not in valid_levels:
            warnings.append(f"Unknown log_level '{self.log_level}', using WARNING")
            self.log_level = "WARNING"
        return warnings


def load_config(config_dir: Path | None = None) -> QorthConfig:
    """Load config from YAML file with env var overrides.

    Priority: env vars > config file > defaults.
    """
    if config_dir is None:
        config_dir = get_config_dir()

    config_file = config_dir / "config.yaml"
    data: dict[str, object] = {}

    if config_file.exists():
        try:
            raw = yaml.safe_load(config_file.read_text(encoding="utf-8"))
            if isinstance(raw, dict):
                data = raw
            else:
                logger.warning("Config file is not a YAML mapping, using defaults")
        except (yaml.YAMLError, OSError) as exc:
            logger.warning("Failed to parse config file: %s", exc)

    env_mappings = {
        "QORTH_MAX_N": "max_n",
        "QORTH_MAX_J": "max_j",
        "QORTH_DEGREE_BOUND": "degree_bound",
        "QORTH_JOBS": "jobs",
        "QORTH_SEED": "seed",
        "QORTH_LOG_LEVEL": "log_level",
    }
    for env_var, config_key in env_mappings.items():
        value = os.environ.get(env_var)
        if value:
            data[config_key] = value

    known_fields = {f.name for f in QorthConfig.__dataclass_fields__.values()}
    filtered: dict[str, Any] = {k: v for k, v in data.items() if k in known_fields}

    for key in _INT_FIELDS:
        if key not in filtered:
            continue
        try:
            filtered[key] = int(str(filtered[key]))
        except (ValueError, TypeError):
            logger.warning("Invalid %s value '%s', using default", key, filtered[key])
            del filtered[key]

    return QorthConfig(**filtered)


def save_config(config: QorthConfig, config_dir: Path | None = None) -> Path:
    """Save config to YAML file. Returns path to saved file."""
    if config_dir is None:
        config_dir = get_config_dir()

    config_dir.mkdir(parents=True, exist_ok=True)
    config_file = config_dir / "config.yaml"

    data = asdict(config)
    config_file.write_text(yaml.dump(data, default_flow_style=False), encoding="utf-8")

    try:
        config_file.chmod(0o600)
    except OSError as exc:
        logger.warning("Could not set permissions on %s: %s", config_file, exc)

    return config_file
