"""Tests for qorth.cli module."""

from __future__ import annotations

import argparse
import logging
import os
from pathlib import Path
from unittest.mock import patch

import pytest
from pytest_mock import MockerFixture

from qorth.cli import _algebra, _apply_flags, _build_parser, _setup_logging, main
from qorth.config import QorthConfig


class TestParser:
    """Test _build_parser."""

    def test_repeatable_suite(self) -> None:
        args = _build_parser().parse_args(
            ["verify", "--suite", "rtt", "--suite", "det", "--max-n", "2"]
        )
        assert args.subcommand == "verify"
        assert args.suite == ["rtt", "det"]
        assert args.max_n == 2
        assert args.max_j is None

    def test_suite_and_all_exclusive(self) -> None:
        with pytest.raises(SystemExit) as exc_info:
            _build_parser().parse_args(["verify", "--suite", "rtt", "--all"])
        assert exc_info.value.code == 2

    def test_reduce_defaults_to_sl2(self) -> None:
        args = _build_parser().parse_args(["reduce", "a*d"])
        assert args.algebra == "sl2"
        assert args.expr == "a*d"

    def test_rmatrix_defaults(self) -> None:
        args = _build_parser().parse_args(["rmatrix"])
        assert (args.n, args.emit) == (3, "text")

    def test_unknown_algebra(self) -> None:
        with pytest.raises(SystemExit):
            _build_parser().parse_args(["reduce", "--algebra", "so3", "x"])


class TestSetupLogging:
    """Test _setup_logging."""

    def test_debug_wins(self) -> None:
        _setup_logging(True, config_level="ERROR")
        assert logging.getLogger().level == logging.DEBUG

    def test_config_level(self) -> None:
        _setup_logging(config_level="info")
        assert logging.getLogger().level == logging.INFO

    def test_unknown_level_falls_back(self) -> None:
        _setup_logging(config_level="LOUD")
        assert logging.getLogger().level == logging.WARNING


class TestHelpers:
    """Test _algebra and _apply_flags."""

    @pytest.mark.parametrize(
        ("name", "symbols"),
        [
            ("sl2", ("b", "c", "a", "d")),
            ("c3", ("x1", "x2", "x3")),
            ("uq", ("F", "K", "Kinv", "E")),
        ],
    )
    def test_algebra(self, name: str, symbols: tuple[str, ...]) -> None:
        alphabet, _ = _algebra(name)
        assert tuple(alphabet.symbols) == symbols

    def test_apply_flags(self) -> None:
        config = QorthConfig()
        args = argparse.Namespace(
            max_n=2, max_j=None, degree_bound=4, jobs=None, seed=None, samples=None
        )
        _apply_flags(config, args)
        assert config.max_n == 2
        assert config.degree_bound == 4
        assert config.max_j == 5


class TestMain:
    """Test main()."""

    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        main(["--version"])
        assert capsys.readouterr().out.startswith("qorth ")

    def test_help_exits_zero(self) -> None:
        with pytest.raises(SystemExit) as exc_info:
            main(["--help"])
        assert exc_info.value.code == 0

    def test_no_subcommand(self, config_dir: Path) -> None:
        with (
            patch("qorth.config.get_config_dir", return_value=config_dir),
            pytest.raises(SystemExit) as exc_info,
        ):
            main([])
        assert exc_info.value.code == 2

    def test_no_color_sets_env(self, config_dir: Path) -> None:
        with patch("qorth.config.get_config_dir", return_value=config_dir):
            main(["--no-color", "reduce", "b*a"])
        assert os.environ.get("NO_COLOR") == "1"

    def test_loaded_config_is_validated(
        self, mocker: MockerFixture, capsys: pytest.CaptureFixture[str]
    ) -> None:
        loader = mocker.patch(
            "qorth.config.load_config", return_value=QorthConfig(max_n=9)
        )
        main(["--no-color", "verify", "--list"])
        loader.assert_called_once_with()
        assert "max_n should be 0-4, got 9" in capsys.readouterr().out

    def test_flag_overrides_loaded_config(
        self, mocker: MockerFixture, capsys: pytest.CaptureFixture[str]
    ) -> None:
        mocker.patch("qorth.config.load_config", return_value=QorthConfig(max_n=9))
        main(["--no-color", "verify", "--list", "--max-n", "2"])
        assert "max_n" not in capsys.readouterr().out
