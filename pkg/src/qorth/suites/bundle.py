"""Suites on the line bundles E_n and the Hopf-Galois condition."""

from __future__ import annotations

import logging

from qorth.bundles import (
    BundleData,
    TracePairings,
    build_idempotent,
    coefficient_recursion_failures,
    comm_ux_identities,
    degree_additivity,
    dual_pairing_identities,
    id_ux_identities,
    idempotency_failures,
    mu_recursion_failures,
    selfadjoint,
    trace_and_pairings,
    trace_p1_matches,
    weight_failures,
)
from qorth.coinv import verify
from qorth.report import CheckRecorder, Status
from qorth.scalar import ONE, ZERO, Regime, Scalar
from qorth.suites.base import BaseSuite, SuiteContext

logger = logging.getLogger(__name__)


class BundlesSuite(BaseSuite):
    name = "bundles"
    description = "Idempotents p_n, their traces, rank and degree"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for n in range(-ctx.max_n, ctx.max_n + 1):
            data = build_idempotent(n, check=False)
            rec.empty(f"p^2=p[n={n}]", lambda data=data: idempotency_failures(data))
            rec.empty(f"weight-0[n={n}]", lambda data=data: weight_failures(data))
            rec.truth(
                f"selfadjoint[n={n}]",
                lambda data=data: selfadjoint(data, Regime.Q_REAL),
            )
            if abs(n) == 1:
                rec.truth(
                    f"not-selfadjoint-unimodular[n={n}]",
                    lambda data=data: not selfadjoint(data, Regime.UNIMODULAR),
                )
            self._trace_rows(rec, data)
        rec.truth("trace[p1]", trace_p1_matches)
        for n in range(1, ctx.max_n + 1):
            rec.equal(
                f"degree-additive[n={n}]", lambda n=n: (degree_additivity(n), ZERO)
            )
        for identity in comm_ux_identities() + id_ux_identities():
            rec.zero(identity[0], lambda identity=identity: verify(identity))
        rec.empty(
            "trace-coefficients", lambda: coefficient_recursion_failures(ctx.max_n)
        )
        rec.empty("mu-recursion", mu_recursion_failures)

    def _trace_rows(self, rec: CheckRecorder, data: BundleData) -> None:
        """Trace, rank and degree rows; skipped when the pairings fail."""
        n = data.n
        found: list[TracePairings] = []

        def pairings() -> bool:
            found.append(trace_and_pairings(data))
            return True

        if rec.truth(f"pairings[n={n}]", pairings).status is not Status.PASS:
            return
        pairing = found[0]
        if pairing.matches_formula is not None:
            rec.truth(
                f"trace[n={n}]",
                lambda: bool(pairing.matches_formula),
                detail=pairing.trace_text,
                residual=pairing.trace_text,
            )
        rec.equal(f"rank[n={n}]", lambda: (pairing.rank, ONE))
        rec.equal(f"degree[n={n}]", lambda: (pairing.degree, Scalar(-2 * n)))


class HopfGaloisSuite(BaseSuite):
    name = "hopf-galois"
    description = "Dual vectors pairing to 1 and the telescoping multi-index sums"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for identity in dual_pairing_identities(ctx.max_n):
            rec.zero(identity[0], lambda identity=identity: verify(identity))
