"""Suites on the defining structure of SO_q(3).

R-matrix and projectors, relations, determinant, cofactors, the covering map
and both star structures.
"""

from __future__ import annotations

import logging
import random
from itertools import product

from qorth.freealg import NcPoly
from qorth.linalg import ScalarMatrix, rank
from qorth.report import CheckRecorder
from qorth.rewrite import NaiveReducer, RewriteSystem, check_confluence
from qorth.rmatrix import (
    E_ALPHABET,
    X_ALPHABET,
    antipode_matrix,
    braid,
    build_R,
    c3_system,
    cubic_residual,
    exterior_dimensions,
    exterior_system,
    extract_epsilon,
    metric_relations,
    preregular_checks,
    quadratic_form_q,
    relations_from_projector,
    rule_relations,
    same_span,
    spectral_projectors,
    yang_baxter_residual,
)
from qorth.scalar import Regime
from qorth.slq2 import SL_ALPHABET, sl_hopf, sl_system
from qorth.soq3 import (
    U,
    antipode_identities,
    cofactor_alternatives,
    cofactor_matrix,
    cofactor_table,
    cofactor_targets,
    covering,
    covering_check,
    epsilon,
    exterior_coaction_failures,
    exterior_star_failures,
    expansion,
    in_oq,
    o2_checks,
    parse_u,
    quantum_determinant,
    rtt_instances,
    so2_failures,
    star_intertwining_failures,
    star_map,
    star_relation_failures,
    top_form_check,
    z_system,
)
from qorth.suites.base import BaseSuite, SuiteContext
from qorth.tables import (
    COMMUTATION_RELATIONS,
    QUADRATIC_FORMS,
    SECOND_COLUMN_COFACTORS,
)

logger = logging.getLogger(__name__)


def _failing_identities(pairs: list[tuple[str, NcPoly, NcPoly]]) -> list[str]:
    return [label for label, lhs, rhs in pairs if covering(lhs - rhs)]


def _differ(lhs: str, rhs: str) -> bool:
    return bool(covering(parse_u([f"{lhs} - ({rhs})"])[0]))



class ProjectorsSuite(BaseSuite):
    name = "projectors"
    description = "R-matrix, Yang-Baxter, spectral projectors, induced relations"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for n in (2, 3):
            rec.truth(
                f"yang-baxter[N={n}]", lambda n=n: yang_baxter_residual(n).is_zero()
            )
        rhat = braid(build_R(3), 3)
        proj = spectral_projectors(rhat, 3)
        ident = ScalarMatrix.identity(9)
        rec.truth(
            "resolution",
            lambda: (proj.plus + proj.minus + proj.zero - ident).is_zero(),
        )
        pairs = [("plus", "minus"), ("plus", "zero"), ("minus", "zero")]
        for a, b in pairs:
            rec.truth(
                f"orthogonal[{a},{b}]",
                lambda a=a, b=b: (getattr(proj, a) @ getattr(proj, b)).is_zero(),
            )
        rec.truth("cubic", lambda: cubic_residual(rhat, 3).is_zero())
        rec.equal(
            "ranks",
            lambda: (tuple(rank(p) for p in proj), (5, 3, 1)),
        )
        rec.truth(
            "symmetric-relations",
            lambda: same_span(
                relations_from_projector(proj.minus, X_ALPHABET),
                rule_relations(c3_system()),
            ),
            detail="P- relations span the C^3_q relations",
        )
        rec.truth(
            "exterior-relations",
            lambda: same_span(
                relations_from_projector(proj.plus + proj.zero, E_ALPHABET),
                rule_relations(exterior_system()),
            ),
        )


class RttSuite(BaseSuite):
    name = "rtt"
    description = "RTT and metric relations and the O(2) collapse"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        rec.equal("instances", lambda: (len(rtt_instances(3, U)), 81))
        rec.empty(
            "rtt-covering",
            lambda: [label for label, rel in rtt_instances(3, U) if covering(rel)],
        )
        rec.empty(
            "metric-covering",
            lambda: [k for k, rel in enumerate(metric_relations(U)) if covering(rel)],
        )
        for name, result in o2_checks(degree_bound=2).items():
            rec.membership(f"o2[{name}]", lambda result=result: result)


class DeterminantSuite(BaseSuite):
    name = "det"
    description = "Epsilon tensor, quantum determinant and the exterior coaction"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        rec.equal(
            "epsilon-components", lambda: (len(extract_epsilon().nonzero()), 7)
        )
        rec.equal(
            "exterior-dimensions", lambda: (exterior_dimensions(4), [1, 3, 3, 1, 0])
        )
        report = preregular_checks(epsilon())
        rec.empty("epsilon-cyclic", lambda: report.cyclic_failures)
        rec.equal("epsilon-rank", lambda: (report.rank, 3))
        rec.truth("epsilon-spans-c3", lambda: report.spans_c3)
        one = NcPoly.one(SL_ALPHABET)
        rec.equal("D_q=1", lambda: (covering(quantum_determinant()), one))
        eps = epsilon()
        for (a, b, c), value in eps.nonzero():
            rec.zero(
                f"expansion[{a}{b}{c}]",
                lambda a=a, b=b, c=c, value=value: covering(
                    expansion(a, b, c) - quantum_determinant().scale(value)
                ),
            )
        det = quantum_determinant()
        for sym in U.symbols:
            g = NcPoly.gen(U, sym)
            rec.zero(f"central[{sym}]", lambda g=g: covering(det * g - g * det))
        rec.truth("top-form", top_form_check)
        rec.empty("exterior-coaction", exterior_coaction_failures)


class CofactorsSuite(BaseSuite):
    name = "cofactors"
    description = "u uhat = D_q I by certified membership, cofactor tables, S(u) = uhat"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for (d, a), target in sorted(cofactor_targets().items()):
            rec.membership(
                f"u*uhat[{d}{a}]",
                lambda target=target: in_oq(target, ctx.degree_bound),
            )
        table = cofactor_table()
        for m, a in product(range(1, 4), repeat=2):

            def alternatives(m: int = m, a: int = a) -> list[str]:
                computed = cofactor_alternatives(m, a)
                listed = table[(m, a)]
                head = covering(computed[0])
                bad = [
                    f"computed[{k}]"
                    for k, p in enumerate(computed)
                    if covering(p) != head
                ]
                bad += [
                    f"listed[{k}]" for k, p in enumerate(listed) if covering(p) != head
                ]
                return bad

            rec.empty(f"alternatives[{m}{a}]", alternatives)
        s = antipode_matrix(U)
        uhat = cofactor_matrix()
        rec.empty(
            "antipode=cofactor",
            lambda: [
                f"{i + 1}{j + 1}"
                for i, j in product(range(3), repeat=2)
                if covering(s[i, j] - uhat[i, j])
            ],
        )
        rec.empty(
            "antipode-identities", lambda: _failing_identities(antipode_identities())
        )


class CoveringSuite(BaseSuite):
    name = "covering"
    description = "The covering O(SO_q(3)) -> O(SL_s(2)) and the SL Hopf axioms"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        report = covering_check()
        rec.empty("rtt", lambda: report.rtt_failures)
        rec.empty("metric", lambda: report.metric_failures)
        one = NcPoly.one(SL_ALPHABET)
        rec.equal("determinant", lambda: (report.determinant, one))
        rec.empty("coproduct", lambda: report.coproduct_failures)
        rec.empty("counit", lambda: report.counit_failures)
        hopf = sl_hopf()
        for sym in SL_ALPHABET.symbols:
            g = NcPoly.gen(SL_ALPHABET, sym)
            rec.empty(f"sl-hopf[{sym}]", lambda g=g: hopf.axiom_failures(g))


class AppendixSuite(BaseSuite):
    name = "appendixC"
    description = "Commutation relations, quadratic forms, second-column cofactors"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        for family, pairs in COMMUTATION_RELATIONS.items():
            rec.empty(
                family,
                lambda pairs=pairs: [lhs for lhs, rhs in pairs if _differ(lhs, rhs)],
            )
        for k, text in enumerate(QUADRATIC_FORMS):
            rec.zero(
                f"Q_q[{k}]=1", lambda text=text: covering(parse_u([f"{text} - 1"])[0])
            )
        one = NcPoly.one(U)
        for j in range(1, 4):
            left, right = quadratic_form_q(U, j)
            rec.zero(f"S(u)u[{j}{j}]", lambda left=left: covering(left - one))
            rec.zero(f"uS(u)[{j}{j}]", lambda right=right: covering(right - one))
        rec.empty(
            "second-column-cofactors",
            lambda: [
                f"{k}:{lhs}"
                for k, (lhs, rhs) in enumerate(SECOND_COLUMN_COFACTORS)
                if _differ(lhs, rhs)
            ],
        )


class StarSuite(BaseSuite):
    """Star structure of one regime on SO_q(3) and its comodule algebras."""

    regime: Regime

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        from qorth.coinv import (
            c3_star_failures,
            coaction_star_failures,
            y_star_failures,
        )

        regime = self.regime
        star = star_map(regime)
        rec.empty(
            "involution",
            lambda: [
                s for s in U.symbols if star(star(NcPoly.gen(U, s))) != NcPoly.gen(U, s)
            ],
        )
        rec.empty("relations", lambda: star_relation_failures(regime))
        rec.empty("covering-intertwines", lambda: star_intertwining_failures(regime))
        rec.empty("exterior", lambda: exterior_star_failures(regime))
        rec.empty("so2-coaction", lambda: coaction_star_failures(regime))
        rec.empty("sphere", lambda: y_star_failures(regime))
        rec.empty("c3", lambda: c3_star_failures(regime))


class RealStarSuite(StarSuite):
    name = "star-real"
    description = "q-real star structure (q > 0): SO_q(3, R) and the sphere"
    regime = Regime.Q_REAL


class UnimodularStarSuite(StarSuite):
    name = "star-unimodular"
    description = "q-unimodular star (|q| = 1): SO_q(1, 2) and the hyperboloid"
    regime = Regime.UNIMODULAR


class So2Suite(BaseSuite):
    name = "so2"
    description = "The SO(2) quotient, its coaction, K-invariance of weight-0 words"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        from qorth.coinv import (
            coaction_delta,
            coaction_via_coproduct,
            is_coinvariant,
        )
        from qorth.uqdual import k_fixes

        rec.empty("quotient", so2_failures)
        words = [
            NcPoly.monomial(U, w) for d in range(3) for w in product(range(9), repeat=d)
        ]
        rec.empty(
            "coaction=coproduct",
            lambda: [
                U.word_text(next(iter(p.terms)))
                for p in words
                if coaction_delta(p) != coaction_via_coproduct(p)
            ],
        )
        rec.empty(
            "coinvariant=K-invariant",
            lambda: [
                U.word_text(next(iter(p.terms)))
                for p in words
                if is_coinvariant(p) != k_fixes(p)
            ],
        )


class ConfluenceSuite(BaseSuite):
    name = "confluence"
    description = "Critical pairs of every rewriting system, random-order cross-check"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        from qorth.uqdual import uq_system

        systems: list[tuple[RewriteSystem, int]] = [
            (sl_system(), 4),
            (c3_system(), 4),
            (exterior_system(), 4),
            (uq_system(), 4),
            (z_system(), 4),
        ]
        for rs, bound in systems:
            rec.empty(
                f"critical-pairs[{rs.name}]",
                lambda rs=rs, bound=bound: [
                    cp.describe(rs.alphabet) for cp in check_confluence(rs, bound)
                ],
            )
            rec.empty(
                f"random-order[{rs.name}]",
                lambda rs=rs: _naive_disagreements(rs, ctx.samples, ctx.seed),
            )


def _naive_disagreements(rs: RewriteSystem, samples: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    naive = NaiveReducer(rs, seed)
    n = len(rs.alphabet)
    out = []
    for _ in range(samples):
        word = tuple(rng.randrange(n) for _ in range(rng.randint(1, 4)))
        p = NcPoly.monomial(rs.alphabet, word)
        if naive(p) != rs.normal_form(p):
            out.append(rs.alphabet.word_text(word))
    return out
