"""Tests for qorth.ui module."""

from __future__ import annotations

import io
from typing import Any
from unittest.mock import patch

import pytest

from qorth.report import CheckResult, Status, SuiteReport


def _report() -> SuiteReport:
    return SuiteReport(
        "rtt",
        [
            CheckResult("instances", Status.PASS, ms=3),
            CheckResult("membership", Status.FAIL, residual="u11*u22 - 1"),
            CheckResult("degree", Status.INCONCLUSIVE, detail="bound 3 reached"),
        ],
    )


class TestUINoColor:
    """Test UI in no-color mode (plain text output)."""

    def _make_ui(self, timings: bool = False) -> Any:
        from qorth.ui import UI

        return UI(no_color=True, timings=timings)

    def test_show_report_rows(self) -> None:
        ui = self._make_ui()
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.show_report(_report())
        lines = mock_out.getvalue().splitlines()
        assert lines[0].split() == ["rtt", "instances", "pass"]
        assert lines[1].split() == ["rtt", "membership", "fail"]
        assert lines[2].strip() == "u11*u22 - 1"
        assert lines[4].strip() == "bound 3 reached"

    def test_show_report_timings(self) -> None:
        ui = self._make_ui(timings=True)
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.show_report(_report())
        assert mock_out.getvalue().splitlines()[0].endswith("3ms")

    def test_long_residual_clipped(self) -> None:
        ui = self._make_ui()
        report = SuiteReport("s", [CheckResult("c", Status.FAIL, residual="x" * 500)])
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.show_report(report)
        residual = mock_out.getvalue().splitlines()[1].strip()
        assert residual.endswith("...")
        assert len(residual) == 120

    def test_show_summary(self) -> None:
        ui = self._make_ui()
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.show_summary([_report()])
        assert mock_out.getvalue().strip() == (
            "[DONE] 1 suites: 1 passed, 1 failed, 1 inconclusive"
        )

    def test_show_error(self) -> None:
        from qorth.errors import SuiteError

        ui = self._make_ui()
        error = SuiteError("Unknown verification suite 'x'", suggestions=["Use --list"])
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.show_error(error)
        output = mock_out.getvalue()
        assert output.startswith("[ERROR] Error: Unknown verification suite 'x'")
        assert "1. Use --list" in output

    def test_show_warning(self) -> None:
        ui = self._make_ui()
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.show_warning("max_n should be 0-4, got 9")
        assert mock_out.getvalue() == "[WARN] !! max_n should be 0-4, got 9\n"

    def test_print(self) -> None:
        ui = self._make_ui()
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.print("1 + r^2*b*c")
        assert mock_out.getvalue() == "1 + r^2*b*c\n"


class TestUIRich:
    """Test UI with Rich output (default mode)."""

    def _make_ui(self) -> Any:
        from qorth.ui import UI

        return UI(no_color=False, timings=True)

    def test_show_report_rich(self) -> None:
        ui = self._make_ui()
        ui.show_report(_report())

    def test_show_error_rich(self) -> None:
        from qorth.errors import VerificationError

        ui = self._make_ui()
        err = VerificationError(
            "residue", suggestions=["Run with --debug"], log_details="u11"
        )
        ui.show_error(err)

    def test_show_warning_rich(self) -> None:
        ui = self._make_ui()
        ui.show_warning("Watch out")

    def test_show_summary_rich(self) -> None:
        ui = self._make_ui()
        ui.show_summary([_report()])

    def test_print_rich_ignores_markup(self) -> None:
        ui = self._make_ui()
        ui.print("[b] not markup")


class TestUINoColorEnv:
    """Test NO_COLOR env var detection."""

    def test_no_color_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("NO_COLOR", "1")
        from qorth.ui import _no_color

        assert _no_color() is True

    def test_color_env_unset(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("NO_COLOR", raising=False)
        from qorth.ui import _no_color

        assert _no_color() is False

    def test_env_forces_plain(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("NO_COLOR", "1")
        from qorth.ui import UI

        ui = UI()
        with patch("sys.stdout", new_callable=io.StringIO) as mock_out:
            ui.print("plain")
        assert mock_out.getvalue() == "plain\n"
