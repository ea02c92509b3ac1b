"""Base suite abstract class for qorth."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar

from qorth.errors import QorthError
from qorth.report import CheckRecorder, SuiteReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteContext:
    """Bounds a suite runs with, resolved from flags, env and config."""

    max_n: int = 3
    max_j: int = 5
    degree_bound: int = 3
    seed: int = 0
    samples: int = 100


class BaseSuite(ABC):
    """Abstract base class for verification suites.

    Subclasses define ``name`` and ``description`` and record their checks
    in :meth:`checks`. Check order inside a suite is fixed by that method.
    """

    name: ClassVar[str]
    description: ClassVar[str]

    @abstractmethod
    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None: ...

    def run(self, ctx: SuiteContext) -> SuiteReport:
        rec = CheckRecorder(self.name)
        try:
            self.checks(rec, ctx)
        except QorthError as exc:
            logger.warning("suite %s stopped early: %s", self.name, exc.code)
            rec.error("aborted", exc)
        counts = rec.report.counts()
        logger.info(
            "suite %s: %d pass, %d fail, %d inconclusive",
            self.name,
            counts["pass"],
            counts["fail"],
            counts["inconclusive"],
        )
        return rec.report
