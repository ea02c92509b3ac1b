"""Presentation of O_q(N) for N = 2, 3 and the SO_q(3) decision procedure.

O_q(3)-level statements (before the determinant quotient) are decided by
bounded ideal membership over the RTT and metric relations. SO_q(3)-level
statements are decided by the double covering u -> O(SL_s(2)): the map is
injective, so ``p == 0`` in SO_q(3) exactly when the SL normal form of its
image vanishes.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from qorth.expr import parse_poly
from qorth.freealg import (
    Alphabet,
    Homomorphism,
    NcMatrix,
    NcPoly,
    StarMap,
    Tensor2,
    Word,
    linear_combination,
)
from qorth.hopf import (
    AntiHomomorphism,
    Coproduct,
    Counit,
    HopfMaps,
    matrix_coproduct,
)
from qorth.rewrite import IdealSpan, MembershipResult, RewriteSystem
from qorth.rmatrix import (
    E_ALPHABET,
    EpsilonTensor,
    antipode_matrix,
    build_R,
    exterior_system,
    extract_epsilon,
    flat,
    generator,
    generator_matrix,
    matrix_alphabet,
    metric_relations,
    prime,
    rho,
    rule_relations,
)
from qorth.scalar import ONE, ZERO, Regime, Scalar, q_power
from qorth.slq2 import SL_ALPHABET, sl_coproduct, sl_counit, sl_reduce, sl_star
from qorth.tables import COFACTORS

logger = logging.getLogger(__name__)

U = matrix_alphabet(3)
V = matrix_alphabet(2, "v")


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------


def index_weight(k: int, n: int) -> int:
    """Weight of index k: N + 1 - 2k, so that k' carries the opposite weight."""
    return n + 1 - 2 * k


def bi_weight(alphabet: Alphabet) -> Callable[[Word], Hashable]:
    """(row weight, column weight) of a word.

    RTT and metric relations are homogeneous for this grading.
    """
    n = int(round(len(alphabet) ** 0.5))
    rows = tuple(index_weight(g // n + 1, n) for g in range(len(alphabet)))
    cols = tuple(index_weight(g % n + 1, n) for g in range(len(alphabet)))

    def grade(word: Word) -> tuple[int, int]:
        return (sum(rows[g] for g in word), sum(cols[g] for g in word))

    return grade


def rtt_instances(n: int, alphabet: Alphabet | None = None) -> list[tuple[str, NcPoly]]:
    """(R u1 u2 - u2 u1 R)^{ij}_{mn} for every index quadruple, labelled ``ij,mn``.

    Entry: sum_kl R^{ij}_{kl} u_km u_ln - sum_kl u_jl u_ik R^{kl}_{mn}.
    """
    alphabet = alphabet or matrix_alphabet(n)
    r = build_R(n)
    idx = range(1, n + 1)
    out = []
    for i, j, m, nn in product(idx, idx, idx, idx):
        acc = NcPoly.zero(alphabet)
        for k, l in product(idx, idx):
            left = r[flat(i, j, n), flat(k, l, n)]
            if left:
                term = generator(alphabet, k, m) * generator(alphabet, l, nn)
                acc = acc + term.scale(left)
            right = r[flat(k, l, n), flat(m, nn, n)]
            if right:
                term = generator(alphabet, j, l) * generator(alphabet, i, k)
                acc = acc - term.scale(right)
        out.append((f"{i}{j},{m}{nn}", acc))
    return out


def generate_rtt(n: int, alphabet: Alphabet | None = None) -> list[NcPoly]:
    """Nonzero RTT relations with repeats removed, in instance order."""
    seen: list[NcPoly] = []
    for _, rel in rtt_instances(n, alphabet):
        if rel and rel not in seen and -rel not in seen:
            seen.append(rel)
    return seen


def oq_relations(n: int = 3, alphabet: Alphabet | None = None) -> list[NcPoly]:
    """RTT relations followed by the metric relations."""
    alphabet = alphabet or matrix_alphabet(n)
    return [*generate_rtt(n, alphabet), *metric_relations(alphabet)]


@dataclass(frozen=True)
class OqPresentation:
    """Generators and defining relations of O_q(N)."""

    alphabet: Alphabet
    relations: tuple[NcPoly, ...]

    @property
    def n(self) -> int:
        return int(round(len(self.alphabet) ** 0.5))

    def ideal(self, degree_bound: int) -> IdealSpan:
        grading = bi_weight(self.alphabet)
        return IdealSpan(self.alphabet, self.relations, degree_bound, grading=grading)


@lru_cache(maxsize=4)
def presentation(n: int = 3) -> OqPresentation:
    alphabet = U if n == 3 else V if n == 2 else matrix_alphabet(n)
    return OqPresentation(alphabet, tuple(oq_relations(n, alphabet)))


@lru_cache(maxsize=8)
def oq_ideal(n: int = 3, degree_bound: int = 3) -> IdealSpan:
    """Shared ideal span; echelon forms are cached per grade inside it."""
    return presentation(n).ideal(degree_bound)


def in_oq(p: NcPoly, degree_bound: int = 3) -> MembershipResult:
    """Bounded membership of ``p`` in the defining ideal of O_q(N)."""
    n = int(round(len(p.alphabet) ** 0.5))
    return oq_ideal(n, degree_bound).member(p)


# ---------------------------------------------------------------------------
# Determinant and cofactors
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def epsilon() -> EpsilonTensor:
    return extract_epsilon()


def _u(i: int, j: int) -> NcPoly:
    return generator(U, i, j)


def _sym(i: int, j: int) -> str:
    return U.symbols[(i - 1) * 3 + (j - 1)]


def _pairs() -> Iterator[tuple[int, int]]:
    return product(range(1, 4), repeat=2)


def expansion(a: int, b: int, c: int) -> NcPoly:
    """sum_{mnp} eps_mnp u_am u_bn u_cp."""
    eps = epsilon()
    return linear_combination(
        U, ((v, _u(a, m) * _u(b, n) * _u(c, p)) for (m, n, p), v in eps.nonzero())
    )


def quantum_determinant() -> NcPoly:
    """D_q = sum eps_mnp u_1m u_2n u_3p."""
    return expansion(1, 2, 3)


def cofactor_pairs(a: int) -> list[tuple[int, int]]:
    """Index pairs (b, c) with eps_abc != 0, canonical (b < c) first."""
    eps = epsilon()
    pairs = [(b, c) for b, c in product(range(1, 4), repeat=2) if eps[(a, b, c)]]
    return sorted(pairs, key=lambda bc: (bc[0] >= bc[1], bc))


def cofactor(m: int, a: int, b: int, c: int) -> NcPoly:
    """eps_abc^-1 sum_np eps_mnp u_bn u_cp."""
    eps = epsilon()
    lead = eps[(a, b, c)]
    if not lead:
        raise ValueError(f"eps_{a}{b}{c} vanishes")
    acc = linear_combination(
        U,
        (
            (eps[(m, n, p)], _u(b, n) * _u(c, p))
            for n, p in product(range(1, 4), repeat=2)
            if eps[(m, n, p)]
        ),
    )
    return acc.scale(lead.inverse())


def cofactor_alternatives(m: int, a: int) -> list[NcPoly]:
    return [cofactor(m, a, b, c) for b, c in cofactor_pairs(a)]


def cofactor_matrix() -> NcMatrix:
    """uhat with entry (m, a) the canonical cofactor of u_am."""
    return NcMatrix(
        U,
        [
            [cofactor(m, a, *cofactor_pairs(a)[0]) for a in range(1, 4)]
            for m in range(1, 4)
        ],
    )


@lru_cache(maxsize=1)
def cofactor_table() -> dict[tuple[int, int], list[NcPoly]]:
    return {key: [parse_poly(t, U) for t in texts] for key, texts in COFACTORS.items()}


def cofactor_targets() -> dict[tuple[int, int], NcPoly]:
    """(u uhat - D_q I)_{da}, each an element of the O_q(3) ideal.

    Off the diagonal the cofactors of column a are taken with b = d, so the
    entry is a repeated-row expansion; on the diagonal the canonical choice.
    """
    det = quantum_determinant()
    eps = epsilon()
    out = {}
    for d, a in product(range(1, 4), repeat=2):
        if d == a:
            b, c = cofactor_pairs(a)[0]
        else:
            b, c = next(bc for bc in cofactor_pairs(a) if bc[0] == d)
        row = expansion(d, b, c).scale(eps[(a, b, c)].inverse())
        out[(d, a)] = row - det if d == a else row
    return out


# ---------------------------------------------------------------------------
# Double covering
# ---------------------------------------------------------------------------

COVERING_IMAGES: dict[str, str] = {
    "u11": "a^2",
    "u12": "w*b*a",
    "u13": "-b^2",
    "u21": "w*c*a",
    "u22": "1 + (s + s^-1)*b*c",
    "u23": "-w*d*b",
    "u31": "-c^2",
    "u32": "-w*d*c",
    "u33": "d^2",
}


@lru_cache(maxsize=1)
def covering_map() -> Homomorphism:
    images = {k: parse_poly(v, SL_ALPHABET) for k, v in COVERING_IMAGES.items()}
    return Homomorphism(U, SL_ALPHABET, images, sl_reduce)


def covering(p: NcPoly) -> NcPoly:
    """SL normal form of the image of ``p``; word images are stored reduced."""
    return covering_map()(p)


def verify_identity(lhs: NcPoly, rhs: NcPoly) -> bool:
    """Decide lhs == rhs in SO_q(3)."""
    return not covering(lhs - rhs)


def residual(lhs: NcPoly, rhs: NcPoly) -> NcPoly:
    """SL normal form of the difference; zero exactly when the identity holds."""
    return covering(lhs - rhs)


def covering_tensor(t: Tensor2) -> Tensor2:
    return t.map_legs(
        covering, covering, left_target=SL_ALPHABET, right_target=SL_ALPHABET
    )


@dataclass
class CoveringReport:
    rtt_failures: list[str]
    metric_failures: list[int]
    determinant: NcPoly
    coproduct_failures: list[str]
    counit_failures: list[str]

    @property
    def ok(self) -> bool:
        return not (
            self.rtt_failures
            or self.metric_failures
            or self.coproduct_failures
            or self.counit_failures
        ) and self.determinant == NcPoly.one(SL_ALPHABET)


@lru_cache(maxsize=1)
def u_coproduct() -> dict[str, Tensor2]:
    return matrix_coproduct(U, 3)


def covering_check() -> CoveringReport:
    rtt = [label for label, rel in rtt_instances(3, U) if covering(rel)]
    metric = [k for k, rel in enumerate(metric_relations(U)) if covering(rel)]
    det = covering(quantum_determinant())
    table = u_coproduct()
    coprod = []
    counit = []
    for i, j in product(range(1, 4), repeat=2):
        sym = _sym(i, j)
        image = covering(_u(i, j))
        if sl_coproduct(image) != covering_tensor(table[sym]):
            coprod.append(sym)
        if sl_counit(image) != (ONE if i == j else ZERO):
            counit.append(sym)
    report = CoveringReport(rtt, metric, det, coprod, counit)
    if report.ok:
        logger.info("covering map certified on relations, determinant and Hopf maps")
    return report


# ---------------------------------------------------------------------------
# Hopf structure of the defining matrix
# ---------------------------------------------------------------------------


def _counit_values() -> dict[str, int]:
    return {_sym(i, j): int(i == j) for i, j in _pairs()}


@lru_cache(maxsize=1)
def u_hopf() -> HopfMaps:
    """Matrix coproduct, counit delta_ij and antipode S(u) = C u^t C^-1.

    The antipode axiom only holds modulo the relations; use
    :func:`antipode_identities` for it.
    """
    s = antipode_matrix(U)
    images = {_sym(i, j): s[i - 1, j - 1] for i, j in _pairs()}
    return HopfMaps(
        U,
        Coproduct(U, u_coproduct()),
        Counit(U, _counit_values()),
        AntiHomomorphism(U, images),
        lambda p: p,
    )


def antipode_identities() -> list[tuple[str, NcPoly, NcPoly]]:
    """Entries of S(u) u and u S(u) against the identity matrix."""
    u = generator_matrix(U)
    su = antipode_matrix(U)
    out = []
    for name, m in (("S(u)u", su @ u), ("uS(u)", u @ su)):
        for i, j in product(range(3), repeat=2):
            target = NcPoly.constant(U, int(i == j))
            out.append((f"{name}[{i + 1}{j + 1}]", m[i, j], target))
    return out


# ---------------------------------------------------------------------------
# Star structures
# ---------------------------------------------------------------------------


@lru_cache(maxsize=2)
def star_map(regime: Regime) -> StarMap:
    """q-real: u_jk* = q^(rho_j - rho_k) u_j'k'. q-unimodular: u_jk* = u_jk."""
    images = {}
    for j, k in product(range(1, 4), repeat=2):
        sym = _sym(j, k)
        if regime is Regime.Q_REAL:
            factor = q_power(rho(j, 3) - rho(k, 3))
            images[sym] = _u(prime(j, 3), prime(k, 3)).scale(factor)
        else:
            images[sym] = _u(j, k)
    return StarMap(U, images, regime)


@lru_cache(maxsize=2)
def exterior_star(regime: Regime) -> StarMap:
    """q-real: e_k* = q^rho_k e_k'. q-unimodular: e_k* = e_k."""
    images = {}
    for k in range(1, 4):
        sym = E_ALPHABET.symbols[k - 1]
        if regime is Regime.Q_REAL:
            mirror = NcPoly.gen(E_ALPHABET, E_ALPHABET.symbols[prime(k, 3) - 1])
            images[sym] = mirror.scale(q_power(rho(k, 3)))
        else:
            images[sym] = NcPoly.gen(E_ALPHABET, sym)
    return StarMap(E_ALPHABET, images, regime, exterior_system().normal_form)


def star_tensor(
    t: Tensor2,
    left: Callable[[NcPoly], NcPoly],
    right: Callable[[NcPoly], NcPoly],
    regime: Regime,
) -> Tensor2:
    """(sum c a (x) b)* = sum conj(c) a* (x) b*."""
    out = Tensor2.zero(t.left, t.right)
    for (lw, rw), c in t.terms.items():
        out = out + Tensor2.pure(
            left(NcPoly.monomial(t.left, lw)), right(NcPoly.monomial(t.right, rw))
        ).scale(c.conjugate(regime))
    return out


def star_relation_failures(regime: Regime) -> list[str]:
    """Defining relations whose star does not vanish in SO_q(3)."""
    star = star_map(regime)
    failures = [label for label, rel in rtt_instances(3, U) if covering(star(rel))]
    failures += [
        f"metric[{k}]"
        for k, rel in enumerate(metric_relations(U))
        if covering(star(rel))
    ]
    return failures


def star_intertwining_failures(regime: Regime) -> list[str]:
    """Generators with phi(u*) != phi(u)* for the matching SL star."""
    star = star_map(regime)
    sl = sl_star(regime)
    out = []
    for sym in U.symbols:
        g = NcPoly.gen(U, sym)
        if covering(star(g)) != sl_reduce(sl(covering(g))):
            out.append(sym)
    return out


def exterior_star_failures(regime: Regime) -> list[int]:
    """Exterior relations whose star is not in the exterior ideal."""
    star = exterior_star(regime)
    rs = exterior_system()
    return [k for k, rel in enumerate(rule_relations(rs)) if rs.normal_form(star(rel))]


# ---------------------------------------------------------------------------
# Exterior coaction
# ---------------------------------------------------------------------------


def exterior_coaction(p: NcPoly) -> Tensor2:
    """rho(e_j) = sum_k u_jk (x) e_k, extended multiplicatively.

    Right legs are kept in exterior normal form.
    """
    rs = exterior_system()
    gens = [
        sum(
            (
                Tensor2.pure(_u(j, k), NcPoly.gen(E_ALPHABET, f"e{k}"))
                for k in range(1, 4)
            ),
            Tensor2.zero(U, E_ALPHABET),
        )
        for j in range(1, 4)
    ]
    out = Tensor2.zero(U, E_ALPHABET)
    for word, c in p.terms.items():
        acc = Tensor2.one(U, E_ALPHABET)
        for g in word:
            acc = (acc * gens[g]).map_legs(None, rs.normal_form)
        out = out + acc.scale(c)
    return out


def top_form_check() -> bool:
    """rho(e1 e2 e3) == D_q (x) e1 e2 e3 on the nose."""
    top = NcPoly.from_words(E_ALPHABET, "e1", "e2", "e3")
    return exterior_coaction(top) == Tensor2.pure(quantum_determinant(), top)


def exterior_coaction_failures() -> list[int]:
    """Exterior relations whose coaction image is nonzero in SO_q(3) (x) Lambda."""
    rs = exterior_system()
    return [
        k
        for k, rel in enumerate(rule_relations(rs))
        if exterior_coaction(rel).map_legs(covering, None, left_target=SL_ALPHABET)
    ]


# ---------------------------------------------------------------------------
# SO(2) quotient
# ---------------------------------------------------------------------------

Z_ALPHABET = Alphabet("so2", ("z", "zinv"))

Z_RULES = [("z*zinv", "1"), ("zinv*z", "1")]


@lru_cache(maxsize=1)
def z_system() -> RewriteSystem:
    return RewriteSystem.from_text(Z_ALPHABET, Z_RULES, "so2")


def z_reduce(p: NcPoly) -> NcPoly:
    return z_system().normal_form(p)


def z_power(k: int) -> NcPoly:
    """z^k for any integer k."""
    sym = "z" if k >= 0 else "zinv"
    return NcPoly.monomial(Z_ALPHABET, (Z_ALPHABET.index(sym),) * abs(k))


@lru_cache(maxsize=1)
def _quotient_map() -> Homomorphism:
    images = {sym: NcPoly.zero(Z_ALPHABET) for sym in U.symbols}
    images["u11"] = z_power(1)
    images["u22"] = NcPoly.one(Z_ALPHABET)
    images["u33"] = z_power(-1)
    return Homomorphism(U, Z_ALPHABET, images, z_reduce)


def so2_quotient(p: NcPoly) -> NcPoly:
    """Kill the off-diagonal generators: u11 -> z, u22 -> 1, u33 -> zinv."""
    return _quotient_map()(p)


@lru_cache(maxsize=2)
def z_star(regime: Regime) -> StarMap:
    """q-real z* = zinv; q-unimodular z* = z."""
    if regime is Regime.Q_REAL:
        images = {"z": z_power(-1), "zinv": z_power(1)}
    else:
        images = {"z": z_power(1), "zinv": z_power(-1)}
    return StarMap(Z_ALPHABET, images, regime, z_reduce)


def so2_failures() -> list[str]:
    """Relations of O_q(3) (and D_q - 1) that survive the quotient map."""
    failures = [label for label, rel in rtt_instances(3, U) if so2_quotient(rel)]
    failures += [
        f"metric[{k}]"
        for k, rel in enumerate(metric_relations(U))
        if so2_quotient(rel)
    ]
    if so2_quotient(quantum_determinant() - ONE):
        failures.append("determinant")
    return failures


# ---------------------------------------------------------------------------
# O(2) collapse
# ---------------------------------------------------------------------------


def o2_checks(degree_bound: int = 2) -> dict[str, MembershipResult]:
    """Consequences of RTT plus metric relations for N = 2."""
    span = oq_ideal(2, degree_bound)
    targets = {
        "v11*v12": NcPoly.from_words(V, "v11", "v12"),
        "v12*v11": NcPoly.from_words(V, "v12", "v11"),
        "v11*v22 + v12*v21 - 1": parse_poly("v11*v22 + v12*v21 - 1", V),
    }
    return {name: span.member(p) for name, p in targets.items()}


def parse_u(texts: Sequence[str]) -> list[NcPoly]:
    return [parse_poly(t, U) for t in texts]


def scalar_u(c: Scalar | int) -> NcPoly:
    return NcPoly.constant(U, c)
