"""Tests for qorth.report module."""

from __future__ import annotations

import json
from pathlib import Path

from qorth.errors import VerificationError
from qorth.freealg import Alphabet, NcPoly
from qorth.report import (
    SCHEMA_VERSION,
    CheckRecorder,
    CheckResult,
    Status,
    SuiteReport,
    build_document,
    exit_code,
    write_document,
)
from qorth.rewrite import MembershipResult
from qorth.scalar import ONE

_A = Alphabet("t", ("x", "y"))


class TestCheckResult:
    """Test single report rows."""

    def test_failing_row_gets_residual(self) -> None:
        row = CheckResult("c", Status.FAIL, detail="bad")
        assert row.residual == "bad"

    def test_failing_row_without_detail(self) -> None:
        assert CheckResult("c", Status.FAIL).residual == "failed"

    def test_passing_row_keeps_empty_residual(self) -> None:
        assert CheckResult("c", Status.PASS).residual == ""

    def test_to_dict_hides_ms_without_timings(self) -> None:
        row = CheckResult("c", Status.PASS, ms=42)
        assert row.to_dict("s")["ms"] == 0
        assert row.to_dict("s", timings=True)["ms"] == 42

    def test_to_dict_keys(self) -> None:
        row = CheckResult("c", Status.INCONCLUSIVE, detail="bound")
        assert row.to_dict("s") == {
            "suite": "s",
            "check_id": "c",
            "status": "inconclusive",
            "residual_terms": 0,
            "ms": 0,
            "detail": "bound",
            "residual": "",
        }


class TestCheckRecorder:
    """Test the recording helpers."""

    def test_zero_pass_and_fail(self) -> None:
        rec = CheckRecorder("s")
        x = NcPoly.gen(_A, "x")
        assert rec.zero("ok", lambda: x - x).status is Status.PASS
        failed = rec.zero("bad", lambda: x + NcPoly.gen(_A, "y"))
        assert failed.status is Status.FAIL
        assert failed.residual == "x + y"
        assert failed.residual_terms == 2

    def test_truth(self) -> None:
        rec = CheckRecorder("s")
        assert rec.truth("t", lambda: True).status is Status.PASS
        row = rec.truth("f", lambda: False, residual="nope")
        assert row.status is Status.FAIL
        assert row.residual == "nope"

    def test_empty_lists_failures(self) -> None:
        rec = CheckRecorder("s")
        assert rec.empty("e", list).status is Status.PASS
        row = rec.empty("f", lambda: ["a", "b"])
        assert row.residual == "a, b"
        assert row.residual_terms == 2

    def test_equal(self) -> None:
        rec = CheckRecorder("s")
        assert rec.equal("eq", lambda: (3, 3)).status is Status.PASS
        row = rec.equal("ne", lambda: (2, 3))
        assert row.residual == "got 2, expected 3"

    def test_membership_outcomes(self) -> None:
        rec = CheckRecorder("s")
        member = MembershipResult(True, [(0, (), (), ONE)])
        assert rec.membership("m", lambda: member).detail == "certificate: 1 terms"
        open_ = MembershipResult(False, [], True, "bound 3 reached")
        row = rec.membership("i", lambda: open_)
        assert row.status is Status.INCONCLUSIVE
        assert row.detail == "bound 3 reached"
        refuted = MembershipResult(False, [], False, "")
        assert rec.membership("f", lambda: refuted).status is Status.FAIL

    def test_error_becomes_failing_row(self) -> None:
        rec = CheckRecorder("s")

        def boom() -> list[str]:
            raise VerificationError("residue left", code="COVERING_RESIDUE")

        row = rec.empty("x", boom)
        assert row.status is Status.FAIL
        assert row.detail == "COVERING_RESIDUE"
        assert row.residual == "residue left"

    def test_rows_recorded_in_order(self) -> None:
        rec = CheckRecorder("s")
        rec.truth("a", lambda: True)
        rec.truth("b", lambda: False)
        assert [c.check_id for c in rec.report.checks] == ["a", "b"]
        assert rec.report.counts() == {"pass": 1, "fail": 1, "inconclusive": 0}
        assert not rec.report.ok


class TestDocument:
    """Test the JSON document and exit code."""

    def _reports(self) -> list[SuiteReport]:
        return [
            SuiteReport("one", [CheckResult("a", Status.PASS, ms=5)]),
            SuiteReport("two", [CheckResult("b", Status.FAIL, detail="x")]),
        ]

    def test_build_document(self) -> None:
        doc = build_document(self._reports())
        assert doc["schema"] == SCHEMA_VERSION
        assert doc["suites"] == ["one", "two"]
        assert doc["summary"] == {"pass": 1, "fail": 1, "inconclusive": 0}
        assert [row["check_id"] for row in doc["checks"]] == ["a", "b"]
        assert all(row["ms"] == 0 for row in doc["checks"])

    def test_document_is_deterministic(self) -> None:
        a = json.dumps(build_document(self._reports()), sort_keys=True)
        b = json.dumps(build_document(self._reports()), sort_keys=True)
        assert a == b

    def test_write_document(self, output_dir: Path) -> None:
        doc = build_document(self._reports())
        path = write_document(output_dir / "sub" / "r.json", doc)
        text = path.read_text(encoding="utf-8")
        assert text.endswith("\n")
        assert json.loads(text)["schema"] == SCHEMA_VERSION

    def test_exit_code(self) -> None:
        reports = self._reports()
        assert exit_code(reports) == 1
        assert exit_code(reports[:1]) == 0
        assert exit_code([]) == 0
