"""Suites on U_s(sl2): the pairing, real forms and the Casimir on B."""

from __future__ import annotations

import logging
import random

from qorth.coinv import is_coinvariant
from qorth.freealg import NcPoly
from qorth.report import CheckRecorder
from qorth.rmatrix import generator
from qorth.scalar import ETA, R, Q
from qorth.soq3 import U, covering
from qorth.suites.base import BaseSuite, SuiteContext
from qorth.uqdual import (
    REAL_FORMS,
    UQ_ALPHABET,
    action_axiom_failures,
    action_pairing_failures,
    alternate_span_matches,
    b_monomials,
    casimir_centrality,
    casimir_forms,
    casimir_preserves_b_failures,
    casimir_shift_residual,
    ef_coproduct_residual,
    eigen_residual,
    eigenvector,
    k_fixes,
    k_invariance_failures,
    l_identities,
    ladder_identities,
    pair,
    pairing_table_failures,
    qinteger_identity_failures,
    real_form_pairing_failures,
    relation_preservation_failures,
    rescaling_failures,
    span_dimension,
    uq,
    uq_hopf,
    uq_reduce,
    uq_star_failures,
)

logger = logging.getLogger(__name__)

# V_J dimension counts stay cheap up to this J
_SPAN_J = 3


def _random_pbw(rng: random.Random, max_degree: int) -> NcPoly:
    length = rng.randint(1, max_degree)
    word = tuple(rng.randrange(len(UQ_ALPHABET)) for _ in range(length))
    return uq_reduce(NcPoly.monomial(UQ_ALPHABET, word))


class PairingSuite(BaseSuite):
    name = "pairing"
    description = "Hopf maps of U_s(sl2), the pairing with SO_q(3), actions, real forms"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        hopf = uq_hopf()
        for sym in UQ_ALPHABET.symbols:
            g = NcPoly.gen(UQ_ALPHABET, sym)
            rec.empty(f"hopf[{sym}]", lambda g=g: hopf.axiom_failures(g))
        rng = random.Random(ctx.seed)
        products = [_random_pbw(rng, 3) for _ in range(min(ctx.samples, 20))]
        rec.empty(
            "hopf[random]",
            lambda: [f"{p}: {f}" for p in products for f in hopf.axiom_failures(p)],
        )
        rec.equal("<K,u11>", lambda: (pair(uq("K"), generator(U, 1, 1)), Q.inverse()))
        rec.equal("<E,u21>", lambda: (pair(uq("E"), generator(U, 2, 1)), ETA))
        rec.empty("pairing-table", pairing_table_failures)
        counit = hopf.counit
        for text in ("E", "F", "K", "E*F"):
            rec.equal(
                f"<{text},1>",
                lambda text=text: (
                    pair(uq(text), NcPoly.one(U)),
                    counit(uq_reduce(uq(text))),
                ),
            )
        rec.empty("actions-match-pairing", action_pairing_failures)
        rec.empty("actions-preserve-relations", relation_preservation_failures)
        for name, form in REAL_FORMS.items():
            rec.empty(f"star[{name}]", lambda name=name: uq_star_failures(name))
            if form.compatible:
                rec.empty(
                    f"real-form[{name}]",
                    lambda name=name: real_form_pairing_failures(name),
                )
            else:
                rec.truth(
                    f"real-form[{name}]-rejected",
                    lambda name=name: bool(real_form_pairing_failures(name)),
                    detail="negative control",
                )
        rec.empty("rescaling", lambda: rescaling_failures(R))
        rec.empty("action-axioms", lambda: action_axiom_failures(ctx.samples, ctx.seed))
        rec.empty("k-invariance", lambda: k_invariance_failures(ctx.samples, ctx.seed))


class CasimirSuite(BaseSuite):
    name = "casimir"
    description = "Casimir of U_s(sl2) and its eigenfunctions y3^J <| E^m on B"

    def checks(self, rec: CheckRecorder, ctx: SuiteContext) -> None:
        forms = casimir_forms()
        for other in ("FE", "symmetric"):
            rec.zero(f"C_q[EF={other}]", lambda other=other: forms["EF"] - forms[other])
        for gen, res in casimir_centrality().items():
            rec.zero(f"central[{gen}]", lambda res=res: res)
        rec.zero("coproduct[EF]", ef_coproduct_residual)
        for j in range(ctx.max_j + 1):
            for m in range(2 * j + 1):
                rec.zero(
                    f"eigen[J={j},m={m}]",
                    lambda j=j, m=m: eigen_residual(eigenvector(j, m), j),
                )
        for label, lhs, rhs in ladder_identities(ctx.max_j):
            rec.zero(label, lambda lhs=lhs, rhs=rhs: covering(lhs - rhs))
        for j in range(min(ctx.max_j, _SPAN_J) + 1):
            rec.equal(f"dim V_{j}", lambda j=j: (span_dimension(j), 2 * j + 1))
            rec.truth(f"alternate-basis[J={j}]", lambda j=j: alternate_span_matches(j))
        rec.empty(
            "V_J-coinvariant",
            lambda: [
                f"J={j},m={m}"
                for j in range(ctx.max_j + 1)
                for m in range(2 * j + 1)
                if not is_coinvariant(eigenvector(j, m))
            ],
        )
        monomials = b_monomials(4)
        rec.empty(
            "K-fixes-B",
            lambda: [str(b) for b in monomials if not k_fixes(b)],
        )
        rec.empty(
            "casimir-shift",
            lambda: [str(b) for b in b_monomials(2) if casimir_shift_residual(b)],
        )
        rec.empty("preserves-B", casimir_preserves_b_failures)
        for label, lhs, rhs in l_identities():
            rec.zero(label, lambda lhs=lhs, rhs=rhs: covering(lhs - rhs))
        rec.empty("q-integers", lambda: qinteger_identity_failures(2 * ctx.max_j))
