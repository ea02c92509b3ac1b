"""SO(2)-coinvariants of SO_q(3): the quantum sphere and hyperboloid B.

B is generated by the middle column y_k = u_k2. Elements of B are handled as
polynomials over the y alphabet and compared in SO_q(3) after embedding.
The quantum vector space C^3_q and the cartesian forms of both quadrics live
here as well.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from qorth.expr import parse_poly
from qorth.freealg import Alphabet, Homomorphism, NcPoly, StarMap, Tensor2, Word
from qorth.rmatrix import (
    X_ALPHABET,
    c3_system,
    generator,
    quadratic_central_element,
    rule_relations,
)
from qorth.scalar import ONE, Q, S, Regime, Scalar, q_power
from qorth.slq2 import SL_ALPHABET
from qorth.soq3 import (
    U,
    Z_ALPHABET,
    covering,
    index_weight,
    star_map,
    star_tensor,
    u_hopf,
    so2_quotient,
    z_power,
    z_star,
)
from qorth.tables import (
    COINVARIANT_STEPS,
    COINVARIANTS,
    SECOND_COLUMN_QUADRIC,
    Y_RELATIONS,
)

logger = logging.getLogger(__name__)

Y_ALPHABET = Alphabet("b", ("y1", "y2", "y3"))

# (check id, lhs, rhs), both sides over u
Identity = tuple[str, NcPoly, NcPoly]


# ---------------------------------------------------------------------------
# Weight grading and the SO(2) coaction
# ---------------------------------------------------------------------------


def column_weight(word: Word) -> int:
    """+1 per first-column generator, -1 per third-column generator."""
    return sum(index_weight(g % 3 + 1, 3) // 2 for g in word)


def is_coinvariant(p: NcPoly) -> bool:
    return all(column_weight(w) == 0 for w in p.terms)


def coaction_delta(p: NcPoly) -> Tensor2:
    """Right SO(2) coaction: a word maps to itself (x) z^weight."""
    out = Tensor2.zero(U, Z_ALPHABET)
    for w, c in p.terms.items():
        out = out + Tensor2.pure(NcPoly.monomial(U, w, c), z_power(column_weight(w)))
    return out


def coaction_via_coproduct(p: NcPoly) -> Tensor2:
    """(id (x) pi) Delta p, computed from the matrix coproduct."""
    return u_hopf().coproduct(p).map_legs(None, so2_quotient, right_target=Z_ALPHABET)


def coaction_star_failures(regime: Regime) -> list[str]:
    """Generators with delta(u*) != delta(u)*."""
    star = star_map(regime)
    zs = z_star(regime)
    out = []
    for sym in U.symbols:
        g = NcPoly.gen(U, sym)
        if coaction_delta(star(g)) != star_tensor(coaction_delta(g), star, zs, regime):
            out.append(sym)
    return out


# ---------------------------------------------------------------------------
# The y generators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _embedding() -> Homomorphism:
    images = {f"y{k}": generator(U, k, 2) for k in range(1, 4)}
    return Homomorphism(Y_ALPHABET, U, images)


def embed(p: NcPoly) -> NcPoly:
    """y_k -> u_k2."""
    return _embedding()(p)


def y(k: int) -> NcPoly:
    return NcPoly.gen(Y_ALPHABET, f"y{k}")


def y_poly(text: str) -> NcPoly:
    return parse_poly(text, Y_ALPHABET)


def u_poly(text: str) -> NcPoly:
    return parse_poly(text, U)


def b_covering(p: NcPoly) -> NcPoly:
    """SL normal form of an element of B given over y."""
    return covering(embed(p))


@lru_cache(maxsize=2)
def y_star(regime: Regime) -> StarMap:
    """q-real: y1* = s y3, y2* = y2, y3* = s^-1 y1. q-unimodular: y_k* = y_k."""
    if regime is Regime.Q_REAL:
        images = {"y1": y(3).scale(S), "y2": y(2), "y3": y(1).scale(S.inverse())}
    else:
        images = {f"y{k}": y(k) for k in range(1, 4)}
    return StarMap(Y_ALPHABET, images, regime)


def y_star_failures(regime: Regime) -> list[str]:
    """Generators where the y star and the restricted SO_q(3) star disagree.

    Relations of B whose star does not vanish are listed as well.
    """
    ustar = star_map(regime)
    ystar = y_star(regime)
    failures = [
        f"y{k}"
        for k in range(1, 4)
        if covering(embed(ystar(y(k))) - ustar(embed(y(k))))
    ]
    for name, lhs, rhs in Y_RELATIONS:
        rel = y_poly(lhs) - y_poly(rhs)
        if b_covering(ystar(rel)):
            failures.append(name)
    return failures


def y_coaction(p: NcPoly) -> Tensor2:
    """Left coaction y_k -> sum_m u_km (x) y_m, extended multiplicatively."""
    gens = []
    for k in range(1, 4):
        acc = Tensor2.zero(U, Y_ALPHABET)
        for m in range(1, 4):
            acc = acc + Tensor2.pure(generator(U, k, m), y(m))
        gens.append(acc)
    out = Tensor2.zero(U, Y_ALPHABET)
    for word, c in p.terms.items():
        acc = Tensor2.one(U, Y_ALPHABET)
        for g in word:
            acc = acc * gens[g]
        out = out + acc.scale(c)
    return out


def y_coaction_failures() -> list[str]:
    """B relations whose coaction image is nonzero in SO_q(3) (x) B."""
    failures = []
    for name, lhs, rhs in Y_RELATIONS:
        t = y_coaction(y_poly(lhs) - y_poly(rhs))
        image = t.map_legs(
            covering, b_covering, left_target=SL_ALPHABET, right_target=SL_ALPHABET
        )
        if image:
            failures.append(name)
    return failures


def y_coaction_matches_coproduct(p: NcPoly) -> bool:
    """y_coaction(p) agrees with Delta(embed p) after reduction of both legs."""
    left = y_coaction(p).map_legs(
        covering, b_covering, left_target=SL_ALPHABET, right_target=SL_ALPHABET
    )
    right = u_hopf().coproduct(embed(p)).map_legs(
        covering, covering, left_target=SL_ALPHABET, right_target=SL_ALPHABET
    )
    return left == right


# ---------------------------------------------------------------------------
# Identity tables
# ---------------------------------------------------------------------------


def coinvariant_identities() -> list[Identity]:
    """Quadratic coinvariants written in y, followed by the reordering steps."""
    out = [
        (lhs, u_poly(lhs), embed(y_poly(rhs))) for lhs, rhs in COINVARIANTS
    ]
    out += [
        (f"step:{lhs}", u_poly(lhs), u_poly(rhs)) for lhs, rhs in COINVARIANT_STEPS
    ]
    return out


def b_relation_identities() -> list[Identity]:
    out = [
        (name, embed(y_poly(lhs)), embed(y_poly(rhs))) for name, lhs, rhs in Y_RELATIONS
    ]
    out.append(("second-column-quadric", u_poly(SECOND_COLUMN_QUADRIC), NcPoly.zero(U)))
    return out


def verify(identity: Identity) -> NcPoly:
    """Residual of an identity in SO_q(3); zero when it holds."""
    _, lhs, rhs = identity
    return covering(lhs - rhs)


# ---------------------------------------------------------------------------
# Quantum vector space C^3_q
# ---------------------------------------------------------------------------


def c3_reduce(p: NcPoly) -> NcPoly:
    return c3_system().normal_form(p)


def x(k: int) -> NcPoly:
    return NcPoly.gen(X_ALPHABET, f"x{k}")


def centrality_residuals() -> dict[str, NcPoly]:
    """nf(r x_k - x_k r) for k = 1, 2, 3."""
    r = quadratic_central_element()
    return {f"x{k}": c3_reduce(r * x(k) - x(k) * r) for k in range(1, 4)}


def c3_coaction(p: NcPoly) -> Tensor2:
    """x_k -> sum_m u_km (x) x_m, right legs kept in C^3_q normal form."""
    gens = []
    for k in range(1, 4):
        acc = Tensor2.zero(U, X_ALPHABET)
        for m in range(1, 4):
            acc = acc + Tensor2.pure(generator(U, k, m), x(m))
        gens.append(acc)
    out = Tensor2.zero(U, X_ALPHABET)
    for word, c in p.terms.items():
        acc = Tensor2.one(U, X_ALPHABET)
        for g in word:
            acc = (acc * gens[g]).map_legs(None, c3_reduce)
        out = out + acc.scale(c)
    return out


def c3_coaction_failures() -> list[int]:
    """Relations of C^3_q whose coaction image does not vanish.

    The last index stands for r, whose image must be 1 (x) r.
    """
    rels = rule_relations(c3_system())
    out = []
    for k, rel in enumerate(rels):
        if c3_coaction(rel).map_legs(covering, None, left_target=SL_ALPHABET):
            out.append(k)
    r = quadratic_central_element()
    expected = Tensor2.pure(NcPoly.one(U), c3_reduce(r))
    image = c3_coaction(r).map_legs(covering, None, left_target=SL_ALPHABET)
    if image != expected.map_legs(covering, None, left_target=SL_ALPHABET):
        out.append(len(rels))
    return out


@lru_cache(maxsize=2)
def c3_star(regime: Regime) -> StarMap:
    """q-real: x_k* = q^rho_k x_k'. q-unimodular: x_k* = x_k."""
    if regime is Regime.Q_REAL:
        images = {"x1": x(3).scale(S), "x2": x(2), "x3": x(1).scale(S.inverse())}
    else:
        images = {f"x{k}": x(k) for k in range(1, 4)}
    return StarMap(X_ALPHABET, images, regime, c3_reduce)


def c3_star_failures(regime: Regime) -> list[str]:
    star = c3_star(regime)
    out = [
        f"relation[{k}]"
        for k, rel in enumerate(rule_relations(c3_system()))
        if c3_reduce(star(rel))
    ]
    r = quadratic_central_element()
    if c3_reduce(star(r) - r):
        out.append("r*=r")
    return out


# ---------------------------------------------------------------------------
# Cartesian coordinates
# ---------------------------------------------------------------------------

SPHERE_ALPHA_BETA = (S + S.inverse()) / 2
SPHERE_GAMMA_SQUARED = (Q + Q.inverse()) / 2
QUADRIC_ALPHA_BETA = S * (ONE + Q) / (ONE + Q**2)
QUADRIC_LINEAR = (ONE - Q) ** 2 / (ONE + Q**2)
QUADRIC_CONSTANT = 2 * Q / (ONE + Q**2)


@dataclass(frozen=True)
class CartesianForm:
    """mu^2 X1^2 + X3^2 written through alpha*beta only.

    With X1 = mu i (-alpha a + beta c)/sqrt2 and X3 = (alpha a + beta c)/sqrt2
    the square terms carry (1 - mu^4)/2 and the mixed terms (1 + mu^4)/2.
    """

    mu_squared: Scalar
    alpha_beta: Scalar

    @property
    def square_coefficient(self) -> Scalar:
        return (ONE - self.mu_squared**2) / 2

    @property
    def mixed_coefficient(self) -> Scalar:
        return (ONE + self.mu_squared**2) / 2 * self.alpha_beta

    def mixed(self, a: NcPoly, c: NcPoly) -> NcPoly:
        return (a * c + c * a).scale(self.mixed_coefficient)


def sphere_residual(mu_squared: Scalar) -> NcPoly:
    """nf(mu^2 X1^2 + X2^2 + X3^2 - 1) modulo r = 1, via r."""
    form = CartesianForm(mu_squared, SPHERE_ALPHA_BETA)
    lhs = form.mixed(x(1), x(3)) + (x(2) * x(2)).scale(SPHERE_GAMMA_SQUARED)
    return c3_reduce(lhs - quadratic_central_element())


def quadric_residual(mu_squared: Scalar) -> NcPoly:
    """mu^2 Y1^2 + Y2^2 + Y3^2 - c1 Y2 - c0 evaluated in SO_q(3)."""
    form = CartesianForm(mu_squared, QUADRIC_ALPHA_BETA)
    lhs = (
        form.mixed(y(1), y(3))
        + y(2) * y(2)
        - y(2).scale(QUADRIC_LINEAR)
        - NcPoly.constant(Y_ALPHABET, QUADRIC_CONSTANT)
    )
    return b_covering(lhs)


def classical_quadric() -> tuple[Scalar | None, Scalar | None]:
    """(linear coefficient, constant) of the B quadric at q = 1."""
    return QUADRIC_LINEAR.classical_limit(), QUADRIC_CONSTANT.classical_limit()


def mu_squared_values() -> dict[str, Scalar]:
    return {"sphere": ONE, "hyperboloid": -ONE}


def weight_sign(word: Word) -> Scalar:
    """q^-weight: the factor K picks up on a word."""
    return q_power(-column_weight(word))
