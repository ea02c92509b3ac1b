"""Suite registry for qorth."""

from __future__ import annotations

import logging

from qorth.errors import ERROR_CATALOG, SuiteError
from qorth.suites.base import BaseSuite as BaseSuite
from qorth.suites.base import SuiteContext as SuiteContext

logger = logging.getLogger(__name__)


class SuiteRegistry:
    """Registry of verification suites in registration order."""

    def __init__(self) -> None:
        self._suites: dict[str, BaseSuite] = {}

    def register(self, suite: BaseSuite) -> None:
        """Register a suite. Raises ValueError on duplicate names."""
        if suite.name in self._suites:
            raise ValueError(f"Suite '{suite.name}' is already registered.")
        self._suites[suite.name] = suite

    def get(self, name: str) -> BaseSuite | None:
        return self._suites.get(name)

    def require(self, name: str) -> BaseSuite:
        """Get a suite by name or raise SUITE_UNKNOWN."""
        suite = self._suites.get(name)
        if suite is None:
            template = ERROR_CATALOG["SUITE_UNKNOWN"]
            raise SuiteError(
                f"Unknown verification suite '{name}'",
                code="SUITE_UNKNOWN",
                suggestions=template.suggestions,
                log_details=f"Available: {', '.join(self._suites)}",
            )
        return suite

    def list_suites(self) -> list[BaseSuite]:
        return list(self._suites.values())

    def list_names(self) -> list[str]:
        return list(self._suites.keys())

    def order(self, names: list[str]) -> list[BaseSuite]:
        """Resolve names into registry order, dropping repeats."""
        wanted = {self.require(n).name for n in names}
        return [s for s in self._suites.values() if s.name in wanted]


def create_default_registry() -> SuiteRegistry:
    """Create a registry with every built-in suite."""
    from qorth.suites.algebra import (
        AppendixSuite,
        CofactorsSuite,
        ConfluenceSuite,
        CoveringSuite,
        DeterminantSuite,
        ProjectorsSuite,
        RealStarSuite,
        RttSuite,
        So2Suite,
        UnimodularStarSuite,
    )
    from qorth.suites.bundle import BundlesSuite, HopfGaloisSuite
    from qorth.suites.duality import CasimirSuite, PairingSuite
    from qorth.suites.sphere import (
        BRelationsSuite,
        CartesianSuite,
        CoinvariantsSuite,
        QVectorSuite,
    )

    registry = SuiteRegistry()
    for suite in (
        RttSuite(),
        DeterminantSuite(),
        CofactorsSuite(),
        CoveringSuite(),
        AppendixSuite(),
        RealStarSuite(),
        UnimodularStarSuite(),
        So2Suite(),
        CoinvariantsSuite(),
        BRelationsSuite(),
        QVectorSuite(),
        CartesianSuite(),
        BundlesSuite(),
        HopfGaloisSuite(),
        PairingSuite(),
        CasimirSuite(),
        ConfluenceSuite(),
        ProjectorsSuite(),
    ):
        registry.register(suite)
    return registry
