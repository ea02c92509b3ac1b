"""End-to-end tests for the qorth CLI entry points.

These tests drive ``main()`` with plain output and a temporary config
directory, from argument parsing through to stdout and the JSON report.
"""

from __future__ import annotations

import json
from collections.abc import Iterator
from pathlib import Path
from unittest.mock import patch

import pytest

from qorth.cli import main


@pytest.fixture(autouse=True)
def _isolated_config(config_dir: Path) -> Iterator[Path]:
    with patch("qorth.config.get_config_dir", return_value=config_dir):
        yield config_dir


def _run(*argv: str) -> int:
    try:
        main(["--no-color", *argv])
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


# ---------------------------------------------------------------------------
# reduce
# ---------------------------------------------------------------------------


class TestReduceE2E:
    """Test ``qorth reduce``."""

    @pytest.mark.parametrize(
        ("algebra", "expr", "expected"),
        [
            ("sl2", "a*d", "1 + r^2*b*c"),
            ("sl2", "a*b", "r^2*b*a"),
            ("sl2", "a*c*d", "r^2*c + r^4*b*c^2"),
            ("uq", "K*Kinv", "1"),
        ],
    )
    def test_normal_form(
        self,
        capsys: pytest.CaptureFixture[str],
        algebra: str,
        expr: str,
        expected: str,
    ) -> None:
        assert _run("reduce", "--algebra", algebra, expr) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_parse_error_is_usage_error(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        assert _run("reduce", "a*#") == 2
        out = capsys.readouterr().out
        assert "[ERROR]" in out
        assert "column 3" in out


# ---------------------------------------------------------------------------
# rmatrix
# ---------------------------------------------------------------------------


class TestRmatrixE2E:
    """Test ``qorth rmatrix``."""

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert _run("rmatrix", "--emit", "json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 3
        ranks = {k: v["rank"] for k, v in payload["projectors"].items()}
        assert ranks == {"plus": 5, "minus": 3, "zero": 1}

    def test_text_small(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert _run("rmatrix", "--n", "2") == 0
        assert capsys.readouterr().out.startswith("R-matrix N=2:")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


class TestVerifyE2E:
    """Test ``qorth verify``."""

    def test_unknown_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert _run("verify", "--suite", "nosuch") == 2
        assert "nosuch" in capsys.readouterr().out

    def test_no_selection(self) -> None:
        assert _run("verify") == 2

    def test_list(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert _run("verify", "--list") == 0
        out = capsys.readouterr().out
        names = [line.split()[0] for line in out.splitlines() if line.strip()]
        assert names[0] == "rtt"
        assert "appendixC" in names
        assert len(names) == 18

    def test_projectors_pass(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert _run("verify", "--suite", "projectors") == 0
        out = capsys.readouterr().out
        assert "[DONE] 1 suites: 10 passed, 0 failed, 0 inconclusive" in out

    def test_json_report_is_deterministic(self, output_dir: Path) -> None:
        first = output_dir / "a.json"
        second = output_dir / "b.json"
        assert _run("verify", "--suite", "projectors", "--json", str(first)) == 0
        assert _run("verify", "--suite", "projectors", "--json", str(second)) == 0
        assert first.read_bytes() == second.read_bytes()
        doc = json.loads(first.read_text(encoding="utf-8"))
        assert doc["suites"] == ["projectors"]
        assert doc["summary"] == {"pass": 10, "fail": 0, "inconclusive": 0}
        row = doc["checks"][0]
        assert {"suite", "check_id", "status", "residual_terms", "ms"} <= set(row)
        assert row["ms"] == 0

    def test_env_bound_is_clamped(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("QORTH_MAX_N", "9")
        assert _run("verify", "--suite", "projectors") == 0
        assert "[WARN] !! max_n should be 0-4, got 9" in capsys.readouterr().out
