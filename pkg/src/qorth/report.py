"""Check results, per-suite reports and the versioned JSON document."""

from __future__ import annotations

import json
import logging
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from qorth.errors import QorthError
from qorth.freealg import NcPoly, Tensor2
from qorth.rewrite import MembershipResult

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CheckResult:
    """One row of a suite report. A failing row always carries a residual."""

    check_id: str
    status: Status
    detail: str = ""
    residual: str = ""
    residual_terms: int = 0
    ms: int = 0

    def __post_init__(self) -> None:
        if self.status is Status.FAIL and not self.residual:
            object.__setattr__(self, "residual", self.detail or "failed")

    def to_dict(self, suite: str, *, timings: bool = False) -> dict[str, Any]:
        return {
            "suite": suite,
            "check_id": self.check_id,
            "status": self.status.value,
            "residual_terms": self.residual_terms,
            "ms": self.ms if timings else 0,
            "detail": self.detail,
            "residual": self.residual,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for c in self.checks:
            out[c.status.value] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(c.status is Status.PASS for c in self.checks)


Residual = NcPoly | Tensor2


def _residual_size(r: Residual) -> int:
    return len(r.terms)


def _error_row(check_id: str, exc: QorthError) -> CheckResult:
    return CheckResult(check_id, Status.FAIL, detail=exc.code, residual=exc.message)


class CheckRecorder:
    """Collects timed checks for one suite.

    Every recording method takes a thunk so the elapsed time covers the
    computation. A ``QorthError`` raised by the thunk becomes a failing row.
    """

    def __init__(self, suite: str) -> None:
        self.report = SuiteReport(suite)

    def error(self, check_id: str, exc: QorthError) -> CheckResult:
        """Record a failing row for an error raised outside any check."""
        result = _error_row(check_id, exc)
        self.report.checks.append(result)
        return result

    def _run(self, check_id: str, thunk: Callable[[], CheckResult]) -> CheckResult:
        t0 = time.perf_counter()
        try:
            result = thunk()
        except QorthError as exc:
            logger.debug("%s/%s raised %s", self.report.suite, check_id, exc.code)
            result = _error_row(check_id, exc)
        ms = int((time.perf_counter() - t0) * 1000)
        result = CheckResult(
            result.check_id,
            result.status,
            result.detail,
            result.residual,
            result.residual_terms,
            ms,
        )
        self.report.checks.append(result)
        return result

    def zero(
        self, check_id: str, compute: Callable[[], Residual], detail: str = ""
    ) -> CheckResult:
        """Pass when the computed residual vanishes."""

        def thunk() -> CheckResult:
            r = compute()
            if not r:
                return CheckResult(check_id, Status.PASS, detail)
            return CheckResult(check_id, Status.FAIL, detail, str(r), _residual_size(r))

        return self._run(check_id, thunk)

    def truth(
        self,
        check_id: str,
        compute: Callable[[], bool],
        detail: str = "",
        residual: str = "",
    ) -> CheckResult:
        def thunk() -> CheckResult:
            if compute():
                return CheckResult(check_id, Status.PASS, detail)
            return CheckResult(check_id, Status.FAIL, detail, residual or "false", 1)

        return self._run(check_id, thunk)

    def empty(
        self, check_id: str, compute: Callable[[], Sequence[object]], detail: str = ""
    ) -> CheckResult:
        """Pass when the computed list of failures is empty."""

        def thunk() -> CheckResult:
            failures = list(compute())
            if not failures:
                return CheckResult(check_id, Status.PASS, detail)
            text = ", ".join(str(f) for f in failures)
            return CheckResult(check_id, Status.FAIL, detail, text, len(failures))

        return self._run(check_id, thunk)

    def equal(
        self,
        check_id: str,
        compute: Callable[[], tuple[object, object]],
        detail: str = "",
    ) -> CheckResult:
        def thunk() -> CheckResult:
            got, expected = compute()
            if got == expected:
                return CheckResult(check_id, Status.PASS, detail)
            return CheckResult(
                check_id, Status.FAIL, detail, f"got {got}, expected {expected}", 1
            )

        return self._run(check_id, thunk)

    def membership(
        self, check_id: str, compute: Callable[[], MembershipResult], detail: str = ""
    ) -> CheckResult:
        """Pass on a certificate, inconclusive when the degree bound was too small."""

        def thunk() -> CheckResult:
            m = compute()
            if m.member:
                text = detail or f"certificate: {len(m.certificate)} terms"
                return CheckResult(check_id, Status.PASS, text)
            if m.inconclusive:
                return CheckResult(check_id, Status.INCONCLUSIVE, m.diagnostic)
            residual = m.diagnostic or "not a member"
            return CheckResult(check_id, Status.FAIL, detail, residual, 1)

        return self._run(check_id, thunk)


# ---------------------------------------------------------------------------
# Document
# ---------------------------------------------------------------------------


def build_document(
    reports: Sequence[SuiteReport], *, timings: bool = False
) -> dict[str, Any]:
    rows = [c.to_dict(r.suite, timings=timings) for r in reports for c in r.checks]
    totals = {s.value: 0 for s in Status}
    for r in reports:
        for k, v in r.counts().items():
            totals[k] += v
    return {
        "schema": SCHEMA_VERSION,
        "suites": [r.suite for r in reports],
        "summary": totals,
        "checks": rows,
    }


def write_document(path: Path, document: dict[str, Any]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(document, indent=2, ensure_ascii=False)
    path.write_text(text + "\n", encoding="utf-8")
    return path


def exit_code(reports: Sequence[SuiteReport]) -> int:
    """0 iff every check passed."""
    return 0 if all(r.ok for r in reports) else 1
