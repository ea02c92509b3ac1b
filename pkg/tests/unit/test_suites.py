"""Tests for qorth.suites module."""

from __future__ import annotations

import pytest

from qorth.bundles import build_idempotent
from qorth.errors import SuiteError, VerificationError
from qorth.report import CheckRecorder, Status
from qorth.suites import BaseSuite, SuiteContext, SuiteRegistry, create_default_registry
from qorth.suites.bundle import BundlesSuite

_DEFAULT_ORDER = [
    "rtt",
    "det",
    "cofactors",
    "covering",
    "appendixC",
    "star-real",
    "star-unimodular",
    "so2",
    "coinvariants",
    "b-relations",
    "qvector",
    "cartesian",
    "bundles",
    "hopf-galois",
    "pairing",
    "casimir",
    "confluence",
    "projectors",
]


class _DummySuite(BaseSuite):
    name = "dummy"
    description = "Two trivial checks"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        rec.truth("always", lambda: True)
        rec.equal("seed", lambda: (ctx.seed, 0))


class _FailingSuite(BaseSuite):
    name = "failing"
    description = "Raises after one check"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        rec.truth("first", lambda: True)
        raise VerificationError("setup broke", code="SINGULAR_TRACE_DOMAIN")


class TestSuiteRegistry:
    """Test SuiteRegistry."""

    def test_register_and_get(self) -> None:
        reg = SuiteRegistry()
        suite = _DummySuite()
        reg.register(suite)
        assert reg.get("dummy") is suite
        assert reg.get("missing") is None

    def test_duplicate_raises(self) -> None:
        reg = SuiteRegistry()
        reg.register(_DummySuite())
        with pytest.raises(ValueError, match="already registered"):
            reg.register(_DummySuite())

    def test_require_unknown(self) -> None:
        reg = SuiteRegistry()
        reg.register(_DummySuite())
        with pytest.raises(SuiteError) as exc_info:
            reg.require("nosuch")
        assert exc_info.value.code == "SUITE_UNKNOWN"
        assert exc_info.value.log_details == "Available: dummy"

    def test_default_registry_names(self) -> None:
        assert create_default_registry().list_names() == _DEFAULT_ORDER

    def test_order_follows_registry(self) -> None:
        reg = create_default_registry()
        names = [s.name for s in reg.order(["projectors", "rtt", "projectors"])]
        assert names == ["rtt", "projectors"]

    def test_descriptions_present(self) -> None:
        for suite in create_default_registry().list_suites():
            assert suite.description


class TestBaseSuite:
    """Test BaseSuite.run."""

    def test_run_collects_checks(self) -> None:
        report = _DummySuite().run(SuiteContext())
        assert report.suite == "dummy"
        assert [c.check_id for c in report.checks] == ["always", "seed"]
        assert report.ok

    def test_context_defaults(self) -> None:
        ctx = SuiteContext()
        assert (ctx.max_n, ctx.max_j, ctx.degree_bound) == (3, 5, 3)

    def test_error_outside_checks_becomes_row(self) -> None:
        report = _FailingSuite().run(SuiteContext())
        assert [c.check_id for c in report.checks] == ["first", "aborted"]
        aborted = report.checks[1]
        assert aborted.status is Status.FAIL
        assert aborted.detail == "SINGULAR_TRACE_DOMAIN"
        assert aborted.residual == "setup broke"
        assert not report.ok


class TestBuiltinSuites:
    """Run the cheaper built-in suites."""

    def test_projectors(self) -> None:
        report = create_default_registry().require("projectors").run(SuiteContext())
        assert len(report.checks) == 10
        assert all(c.status is Status.PASS for c in report.checks), [
            (c.check_id, c.detail) for c in report.checks if c.status is not Status.PASS
        ]

    def test_bundle_trace_error_is_recorded(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        import qorth.suites.bundle as bundle

        def broken(data: object) -> object:
            raise VerificationError(
                "Singular trace argument contains a", code="SINGULAR_TRACE_DOMAIN"
            )

        monkeypatch.setattr(bundle, "trace_and_pairings", broken)
        rec = CheckRecorder("bundles")
        BundlesSuite()._trace_rows(rec, build_idempotent(0, check=False))
        assert [c.check_id for c in rec.report.checks] == ["pairings[n=0]"]
        assert rec.report.checks[0].status is Status.FAIL
        assert rec.report.checks[0].detail == "SINGULAR_TRACE_DOMAIN"

    def test_bundle_trace_rows(self) -> None:
        rec = CheckRecorder("bundles")
        BundlesSuite()._trace_rows(rec, build_idempotent(0, check=False))
        assert [c.check_id for c in rec.report.checks] == [
            "pairings[n=0]",
            "trace[n=0]",
            "rank[n=0]",
            "degree[n=0]",
        ]
        assert all(c.status is Status.PASS for c in rec.report.checks)
