"""Shared test fixtures for qorth."""

from __future__ import annotations

from pathlib import Path

import pytest

_ENV_KEYS = (
    "QORTH_MAX_N",
    "QORTH_MAX_J",
    "QORTH_DEGREE_BOUND",
    "QORTH_JOBS",
    "QORTH_SEED",
    "QORTH_LOG_LEVEL",
    "NO_COLOR",
)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep the caller's QORTH_* variables out of every test."""
    for key in _ENV_KEYS:
        # setenv first so values the CLI writes are undone too
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)


@pytest.fixture
def config_dir(tmp_path: Path) -> Path:
    """Temporary config directory."""
    d = tmp_path / "config"
    d.mkdir()
    return d


@pytest.fixture
def output_dir(tmp_path: Path) -> Path:
    """Temporary output directory."""
    d = tmp_path / "qorth-output"
    d.mkdir()
    return d


@pytest.fixture
def fixtures_dir() -> Path:
    """Path to test fixtures directory."""
    return Path(__file__).parent / "fixtures"
