"""Suites on the coinvariant algebra B and the quantum vector space C^3_q."""

from __future__ import annotations

import logging
from itertools import product

from qorth.coinv import (
    Y_ALPHABET,
    b_relation_identities,
    c3_coaction_failures,
    centrality_residuals,
    classical_quadric,
    coinvariant_identities,
    mu_squared_values,
    quadric_residual,
    sphere_residual,
    verify,
    y_coaction_failures,
    y_coaction_matches_coproduct,
)
from qorth.freealg import NcPoly
from qorth.report import CheckRecorder
from qorth.scalar import ONE, ZERO
from qorth.suites.base import BaseSuite, SuiteContext

logger = logging.getLogger(__name__)


class CoinvariantsSuite(BaseSuite):
    name = "coinvariants"
    description = "Quadratic coinvariants of SO_q(3) written through y1, y2, y3"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for identity in coinvariant_identities():
            rec.zero(identity[0], lambda identity=identity: verify(identity))


class BRelationsSuite(BaseSuite):
    name = "b-relations"
    description = "Relations of B, the second-column quadric and the left coaction on B"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for identity in b_relation_identities():
            rec.zero(identity[0], lambda identity=identity: verify(identity))
        rec.empty("coaction-relations", y_coaction_failures)
        words = [
            NcPoly.monomial(Y_ALPHABET, w)
            for d in range(1, 3)
            for w in product(range(3), repeat=d)
        ]
        rec.empty(
            "coaction=coproduct",
            lambda: [
                Y_ALPHABET.word_text(next(iter(p.terms)))
                for p in words
                if not y_coaction_matches_coproduct(p)
            ],
        )


class QVectorSuite(BaseSuite):
    name = "qvector"
    description = "C^3_q: centrality of r and the SO_q(3) coaction"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for gen, res in centrality_residuals().items():
            rec.zero(f"central[r,{gen}]", lambda res=res: res)
        rec.empty("coaction", c3_coaction_failures)


class CartesianSuite(BaseSuite):
    name = "cartesian"
    description = "Cartesian forms of the sphere and hyperboloid in C^3_q and in B"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for label, mu2 in mu_squared_values().items():
            rec.zero(f"c3[{label}]", lambda mu2=mu2: sphere_residual(mu2))
            rec.zero(f"b[{label}]", lambda mu2=mu2: quadric_residual(mu2))
        rec.equal("classical-quadric", lambda: (classical_quadric(), (ZERO, ONE)))
