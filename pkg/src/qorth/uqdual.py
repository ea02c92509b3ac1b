"""U_s(sl2) with s = q^(1/2), its pairing with SO_q(3) and the induced actions.

The pairing is fixed on generators by three 3x3 matrices (alpha = 1). The
left and right actions are built from them word by word through the Leibniz
rules of the coproduct; products of U-generators act by composition. All
comparisons of action results go through the covering map.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from qorth.coinv import Y_ALPHABET, column_weight, embed, is_coinvariant
from qorth.expr import parse_poly, parse_scalar
from qorth.freealg import (
    Alphabet,
    Homomorphism,
    NcPoly,
    StarMap,
    Tensor2,
    Word,
    linear_combination,
)
from qorth.hopf import AntiHomomorphism, Coproduct, Counit, HopfMaps
from qorth.rewrite import RewriteSystem
from qorth.rmatrix import generator, same_span, span_rank
from qorth.scalar import ETA, ONE, Q, S, ZERO, Regime, Scalar, q_power, qint
from qorth.soq3 import U, covering, star_map, u_hopf
from qorth.tables import PAIRING_VALUES

logger = logging.getLogger(__name__)

UQ_ALPHABET = Alphabet("uq", ("F", "K", "Kinv", "E"))

UQ_RULES = [
    ("E*F", "F*E + (s - s^-1)^-1*(K - Kinv)"),
    ("E*K", "q^-1*K*E"),
    ("E*Kinv", "q*Kinv*E"),
    ("K*F", "q^-1*F*K"),
    ("Kinv*F", "q*F*Kinv"),
    ("K*Kinv", "1"),
    ("Kinv*K", "1"),
]

_F, _K, _KINV, _E = range(4)


@lru_cache(maxsize=1)
def uq_system() -> RewriteSystem:
    return RewriteSystem.from_text(UQ_ALPHABET, UQ_RULES, "uq")


def uq_reduce(p: NcPoly) -> NcPoly:
    """PBW normal form F^a K^b Kinv^c E^d with b*c = 0."""
    return uq_system().normal_form(p)


def uq(text: str) -> NcPoly:
    return parse_poly(text, UQ_ALPHABET)


def _g(symbol: str) -> NcPoly:
    return NcPoly.gen(UQ_ALPHABET, symbol)


# ---------------------------------------------------------------------------
# Hopf structure and the Casimir
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def uq_hopf() -> HopfMaps:
    one = NcPoly.one(UQ_ALPHABET)
    coproduct = Coproduct(
        UQ_ALPHABET,
        {
            "E": Tensor2.pure(_g("E"), _g("K")) + Tensor2.pure(one, _g("E")),
            "F": Tensor2.pure(_g("F"), one) + Tensor2.pure(_g("Kinv"), _g("F")),
            "K": Tensor2.pure(_g("K"), _g("K")),
            "Kinv": Tensor2.pure(_g("Kinv"), _g("Kinv")),
        },
        uq_reduce,
    )
    counit = Counit(UQ_ALPHABET, {"E": 0, "F": 0, "K": 1, "Kinv": 1})
    antipode = AntiHomomorphism(
        UQ_ALPHABET,
        {
            "E": -(_g("E") * _g("Kinv")),
            "F": -(_g("K") * _g("F")),
            "K": _g("Kinv"),
            "Kinv": _g("K"),
        },
        uq_reduce,
    )
    return HopfMaps(UQ_ALPHABET, coproduct, counit, antipode, uq_reduce)


def casimir_forms() -> dict[str, NcPoly]:
    """The Casimir written from EF, from FE and symmetrised, each reduced."""
    texts = {
        "EF": "E*F + (s - s^-1)^-2*(s^-1*K + s*Kinv)",
        "FE": "F*E + (s - s^-1)^-2*(s*K + s^-1*Kinv)",
        "symmetric": "(1/2)*(E*F + F*E) + (s + s^-1)*(2*(s - s^-1)^2)^-1*(K + Kinv)",
    }
    return {name: uq_reduce(uq(t)) for name, t in texts.items()}


def casimir() -> NcPoly:
    return casimir_forms()["EF"]


def casimir_centrality() -> dict[str, NcPoly]:
    """Reduced commutators [C_q, g] for g in E, F, K."""
    c = casimir()
    return {g: uq_reduce(c * _g(g) - _g(g) * c) for g in ("E", "F", "K")}


def casimir_shift() -> Scalar:
    """C_q - EF on K-invariant elements: (s + s^-1)/(s - s^-1)^2."""
    return (S + S.inverse()) / (S - S.inverse()) ** 2


def ef_coproduct_residual() -> Tensor2:
    """Delta(EF) - (EF(x)K + Kinv(x)EF + Kinv E(x)FK + F(x)E)."""
    ef = _g("E") * _g("F")
    expected = (
        Tensor2.pure(ef, _g("K"))
        + Tensor2.pure(_g("Kinv"), ef)
        + Tensor2.pure(_g("Kinv") * _g("E"), _g("F") * _g("K"))
        + Tensor2.pure(_g("F"), _g("E"))
    )
    hopf = uq_hopf()
    return hopf.coproduct(ef) - hopf.coproduct.reduce_legs(expected)


# ---------------------------------------------------------------------------
# Pairing
# ---------------------------------------------------------------------------

Matrix3 = tuple[tuple[Scalar, Scalar, Scalar], ...]


def _diag(a: Scalar, b: Scalar, c: Scalar) -> Matrix3:
    return ((a, ZERO, ZERO), (ZERO, b, ZERO), (ZERO, ZERO, c))


@lru_cache(maxsize=1)
def pairing_matrices() -> dict[str, Matrix3]:
    """M(f)_jk = <f, u_jk> on generators."""
    return {
        "K": _diag(Q.inverse(), ONE, Q),
        "Kinv": _diag(Q, ONE, Q.inverse()),
        "E": ((ZERO, ZERO, ZERO), (ETA, ZERO, ZERO), (ZERO, -S * ETA, ZERO)),
        "F": ((ZERO, ETA, ZERO), (ZERO, ZERO, -S.inverse() * ETA), (ZERO, ZERO, ZERO)),
    }


def pairing_table() -> dict[tuple[str, str], Scalar]:
    """Nonzero values <f, u_jk> for f a generator."""
    out = {}
    for name, m in pairing_matrices().items():
        for j, k in product(range(3), repeat=2):
            if m[j][k]:
                out[(name, f"u{j + 1}{k + 1}")] = m[j][k]
    return out


def _matrices() -> tuple[Matrix3, ...]:
    m = pairing_matrices()
    return tuple(m[s] for s in UQ_ALPHABET.symbols)


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------


class _WordAction:
    """Action of one U-generator on words of u, cached per word."""

    def __init__(self, gen: int, left: bool) -> None:
        self.gen = gen
        self.left = left
        self._cache: dict[Word, NcPoly] = {}

    def _letter(self, g: int, gen: int) -> NcPoly:
        m = _matrices()[gen]
        j, k = divmod(g, 3)
        if self.left:
            pairs = ((m[mm][k], generator(U, j + 1, mm + 1)) for mm in range(3))
        else:
            pairs = ((m[j][mm], generator(U, mm + 1, k + 1)) for mm in range(3))
        return linear_combination(U, ((c, p) for c, p in pairs if c))

    def _diagonal(self, word: Word, gen: int) -> Scalar:
        """K^(+-1) acts on a word by a scalar."""
        m = _matrices()[gen]
        acc = ONE
        for g in word:
            j, k = divmod(g, 3)
            acc = acc * (m[k][k] if self.left else m[j][j])
        return acc

    def __call__(self, word: Word) -> NcPoly:
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        if self.gen in (_K, _KINV):
            out = NcPoly.monomial(U, word, self._diagonal(word, self.gen))
        else:
            out = self._leibniz(word)
        self._cache[word] = out
        return out

    def _leibniz(self, word: Word) -> NcPoly:
        # E: Delta = E(x)K + 1(x)E; F: Delta = F(x)1 + Kinv(x)F
        acc = NcPoly.zero(U)
        for i, g in enumerate(word):
            prefix, suffix = word[:i], word[i + 1 :]
            if self.gen == _E:
                pre = NcPoly.monomial(U, prefix)
                post = NcPoly.monomial(U, suffix, self._diagonal(suffix, _K))
            else:
                pre = NcPoly.monomial(U, prefix, self._diagonal(prefix, _KINV))
                post = NcPoly.monomial(U, suffix)
            acc = acc + pre * self._letter(g, self.gen) * post
        return acc


@lru_cache(maxsize=8)
def _action(gen: int, left: bool) -> _WordAction:
    return _WordAction(gen, left)


def _apply(gen: int, left: bool, a: NcPoly) -> NcPoly:
    act = _action(gen, left)
    return linear_combination(U, ((c, act(w)) for w, c in a.terms.items()))


def left_action(f: NcPoly, a: NcPoly) -> NcPoly:
    """f |> a, with (g1 ... gr) |> a = g1 |> (... (gr |> a))."""
    out = NcPoly.zero(U)
    for word, c in f.terms.items():
        acc = a
        for gen in reversed(word):
            acc = _apply(gen, True, acc)
        out = out + acc.scale(c)
    return out


def right_action(a: NcPoly, f: NcPoly) -> NcPoly:
    """a <| f, with a <| (g1 ... gr) = (... (a <| g1)) <| gr."""
    out = NcPoly.zero(U)
    for word, c in f.terms.items():
        acc = a
        for gen in word:
            acc = _apply(gen, False, acc)
        out = out + acc.scale(c)
    return out


def pair(f: NcPoly, a: NcPoly) -> Scalar:
    """<f, a> = eps(f |> a)."""
    return u_hopf().counit(left_action(f, a))


def pairing_table_failures() -> list[str]:
    """Generator pairs <f, u_jk> disagreeing with the closed-form table."""
    out = []
    for name in UQ_ALPHABET.symbols:
        f = _g(name)
        for j, k in product(range(1, 4), repeat=2):
            key = (name, f"u{j}{k}")
            text = PAIRING_VALUES.get(key)
            want = parse_scalar(text) if text is not None else ZERO
            got = pair(f, generator(U, j, k))
            if got != want:
                out.append(f"<{name},u{j}{k}> = {got}, expected {want}")
            if pairing_table().get(key, ZERO) != want:
                out.append(f"table<{name},u{j}{k}>")
    return out


def action_pairing_failures() -> list[str]:
    """u_jk <| f = sum_m <f, u_jm> u_mk and f |> u_jk = sum_m u_jm <f, u_mk>."""
    out = []
    for name in ("K", "E", "F"):
        f = _g(name)
        for j, k in product(range(1, 4), repeat=2):
            a = generator(U, j, k)
            mid = range(1, 4)
            right = linear_combination(
                U, ((pair(f, generator(U, j, m)), generator(U, m, k)) for m in mid)
            )
            left = linear_combination(
                U, ((pair(f, generator(U, m, k)), generator(U, j, m)) for m in mid)
            )
            if right_action(a, f) != right:
                out.append(f"u{j}{k}<|{name}")
            if left_action(f, a) != left:
                out.append(f"{name}|>u{j}{k}")
    return out


def relation_preservation_failures() -> list[str]:
    """Defining relations of SO_q(3) mapped outside the ideal by a generator action."""
    from qorth.rmatrix import metric_relations
    from qorth.soq3 import rtt_instances

    rels = [rel for _, rel in rtt_instances(3, U)] + metric_relations(U)
    out = []
    for name in ("E", "F", "K"):
        f = _g(name)
        for k, rel in enumerate(rels):
            if covering(left_action(f, rel)) or covering(right_action(rel, f)):
                out.append(f"{name}:{k}")
    return out


# ---------------------------------------------------------------------------
# Real forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RealForm:
    name: str
    regime: Regime
    images: dict[str, str]
    compatible: bool


REAL_FORMS: dict[str, RealForm] = {
    "su2": RealForm(
        "su2",
        Regime.Q_REAL,
        {"E": "F*K", "F": "Kinv*E", "K": "K", "Kinv": "Kinv"},
        True,
    ),
    "sl2R": RealForm(
        "sl2R",
        Regime.UNIMODULAR,
        {"E": "-E", "F": "-F", "K": "K", "Kinv": "Kinv"},
        True,
    ),
    "su11": RealForm(
        "su11",
        Regime.Q_REAL,
        {"E": "-F*K", "F": "-Kinv*E", "K": "K", "Kinv": "Kinv"},
        False,
    ),
}


@lru_cache(maxsize=4)
def uq_star(name: str) -> StarMap:
    form = REAL_FORMS[name]
    images = {g: uq(t) for g, t in form.images.items()}
    return StarMap(UQ_ALPHABET, images, form.regime, uq_reduce)


def uq_star_failures(name: str) -> list[str]:
    """Involutivity on generators and compatibility with the PBW relations."""
    star = uq_star(name)
    out = [g for g in UQ_ALPHABET.symbols if star(star(_g(g))) != _g(g)]
    rs = uq_system()
    for k, rule in enumerate(rs.rules):
        rel = NcPoly.monomial(UQ_ALPHABET, rule.lhs) - rule.rhs
        if uq_reduce(star(rel)):
            out.append(f"rule[{k}]")
    return out


def real_form_pairing_failures(name: str) -> list[str]:
    """Pairs (f, a) of generators with <f*, a> != conj <f, S(a)*>."""
    form = REAL_FORMS[name]
    fstar = uq_star(name)
    astar = star_map(form.regime)
    antipode = u_hopf().antipode
    out = []
    for g, sym in product(UQ_ALPHABET.symbols, U.symbols):
        a = NcPoly.gen(U, sym)
        lhs = pair(fstar(_g(g)), a)
        rhs = pair(_g(g), astar(antipode(a))).conjugate(form.regime)
        if lhs != rhs:
            out.append(f"<{g}*,{sym}>")
    return out


def rescaling(alpha: Scalar) -> Homomorphism:
    """E -> alpha^-1 E, F -> alpha F, K fixed."""
    return Homomorphism(
        UQ_ALPHABET,
        UQ_ALPHABET,
        {
            "E": _g("E").scale(alpha.inverse()),
            "F": _g("F").scale(alpha),
            "K": _g("K"),
            "Kinv": _g("Kinv"),
        },
        uq_reduce,
    )


def rescaling_failures(alpha: Scalar) -> list[str]:
    """The rescaling preserves every PBW relation and the K row of the pairing."""
    phi = rescaling(alpha)
    rs = uq_system()
    out = [
        f"rule[{k}]"
        for k, rule in enumerate(rs.rules)
        if phi(NcPoly.monomial(UQ_ALPHABET, rule.lhs) - rule.rhs)
    ]
    for sym in U.symbols:
        a = NcPoly.gen(U, sym)
        if pair(phi(_g("K")), a) != pair(_g("K"), a):
            out.append(f"K:{sym}")
    return out


# ---------------------------------------------------------------------------
# Casimir eigenfunctions on B
# ---------------------------------------------------------------------------


def casimir_operator() -> NcPoly:
    """The operator EF; it differs from C_q by a constant on B."""
    return _g("E") * _g("F")


# Rows l with closed forms for E |> y_l^n, F |> y_l^n and u_l1 u_l3.
LADDER_ROWS = (1, 3)


def y_power(ell: int, n: int) -> NcPoly:
    return generator(U, ell, 2) ** n


@lru_cache(maxsize=64)
def eigenvector(j: int, m: int) -> NcPoly:
    """y3^J <| E^m."""
    return right_action(y_power(3, j), _g("E") ** m)


def alternate_eigenvector(j: int, m: int) -> NcPoly:
    """y1^J <| F^m."""
    return right_action(y_power(1, j), _g("F") ** m)


def eigenvalue(j: int) -> Scalar:
    """[J][J+1]."""
    return qint(j) * qint(j + 1)


def eigen_residual(v: NcPoly, j: int) -> NcPoly:
    return covering(left_action(casimir_operator(), v) - v.scale(eigenvalue(j)))


def ladder_identities(max_n: int) -> list[tuple[str, NcPoly, NcPoly]]:
    """E |> y_l^n and F |> y_l^n in closed form."""
    out = []
    for ell, n in product(LADDER_ROWS, range(1, max_n + 1)):
        base = y_power(ell, n - 1)
        e_rhs = (base * generator(U, ell, 3)).scale(
            -q_power(Fraction(-n, 2) + 1) * ETA * qint(n)
        )
        f_rhs = (base * generator(U, ell, 1)).scale(
            q_power(Fraction(n - 1, 2)) * ETA * qint(n)
        )
        out.append((f"E|>y{ell}^{n}", left_action(_g("E"), y_power(ell, n)), e_rhs))
        out.append((f"F|>y{ell}^{n}", left_action(_g("F"), y_power(ell, n)), f_rhs))
    return out


def span_dimension(j: int) -> int:
    """dim span{y3^J <| E^m : m = 0..2J}."""
    return span_rank([covering(eigenvector(j, m)) for m in range(2 * j + 1)])


def alternate_span_matches(j: int) -> bool:
    return same_span(
        [covering(eigenvector(j, m)) for m in range(2 * j + 1)],
        [covering(alternate_eigenvector(j, m)) for m in range(2 * j + 1)],
    )


def b_monomials(max_degree: int) -> list[NcPoly]:
    """Words in y1, y2, y3 up to ``max_degree``, embedded in u."""
    out = []
    for d in range(max_degree + 1):
        for word in product(range(3), repeat=d):
            out.append(embed(NcPoly.monomial(Y_ALPHABET, word)))
    return out


def k_fixes(a: NcPoly) -> bool:
    return left_action(_g("K"), a) == a


def casimir_shift_residual(b: NcPoly) -> NcPoly:
    """C_q |> b - EF |> b - shift * b."""
    diff = left_action(casimir(), b) - left_action(casimir_operator(), b)
    return covering(diff - b.scale(casimir_shift()))


def l_identities() -> list[tuple[str, NcPoly, NcPoly]]:
    """u_l1 u_l3 = -s^3 (1+q)^-1 y_l^2 and u_l3 u_l1 = -s^-1 (1+q)^-1 y_l^2."""
    inv = (ONE + Q).inverse()
    out = []
    for ell in LADDER_ROWS:
        y2 = y_power(ell, 2)
        out.append(
            (
                f"u{ell}1*u{ell}3",
                generator(U, ell, 1) * generator(U, ell, 3),
                y2.scale(-(S**3) * inv),
            )
        )
        out.append(
            (
                f"u{ell}3*u{ell}1",
                generator(U, ell, 3) * generator(U, ell, 1),
                y2.scale(-S.inverse() * inv),
            )
        )
    return out


def qinteger_identity_failures(max_n: int) -> list[int]:
    """[2] + q^-(n+2)/2 [n] + q^(n+2)/2 [n] = [n+1]([2][n+1] - 2[n])."""
    out = []
    for n in range(1, max_n + 1):
        half = Fraction(n + 2, 2)
        lhs = qint(2) + (q_power(-half) + q_power(half)) * qint(n)
        rhs = qint(n + 1) * (qint(2) * qint(n + 1) - 2 * qint(n))
        if lhs != rhs:
            out.append(n)
    return out


# ---------------------------------------------------------------------------
# Randomised properties
# ---------------------------------------------------------------------------


def _random_word(rng: random.Random, max_degree: int) -> NcPoly:
    d = rng.randint(0, max_degree)
    return NcPoly.monomial(U, tuple(rng.randrange(9) for _ in range(d)))


def _random_weight(rng: random.Random, degree: int, zero: bool) -> NcPoly:
    while True:
        word = tuple(rng.randrange(9) for _ in range(degree))
        if (column_weight(word) == 0) == zero:
            return NcPoly.monomial(U, word)


def k_invariance_failures(samples: int, seed: int) -> list[str]:
    """K fixes weight-0 words and moves every other word."""
    rng = random.Random(seed)
    out = []
    for k in range(samples):
        a = _random_weight(rng, rng.randint(2, 4), True)
        if not k_fixes(a):
            out.append(f"fixed[{k}]")
        b = _random_weight(rng, rng.randint(1, 4), False)
        if k_fixes(b):
            out.append(f"moved[{k}]")
    return out


def _compare(lhs: NcPoly, rhs: NcPoly) -> bool:
    return not covering(lhs - rhs)


def action_axiom_failures(samples: int, seed: int) -> list[str]:
    """Module axioms against PBW-reduced products, and commuting actions."""
    rng = random.Random(seed)
    gens = [_g(s) for s in UQ_ALPHABET.symbols]
    checks: list[tuple[str, Callable[[NcPoly, NcPoly, NcPoly], bool]]] = [
        (
            "right",
            lambda f, g, a: _compare(
                right_action(right_action(a, f), g), right_action(a, uq_reduce(f * g))
            ),
        ),
        (
            "left",
            lambda f, g, a: _compare(
                left_action(f, left_action(g, a)), left_action(uq_reduce(f * g), a)
            ),
        ),
        (
            "commute",
            lambda f, g, a: _compare(
                right_action(left_action(f, a), g), left_action(f, right_action(a, g))
            ),
        ),
    ]
    out = []
    for k in range(samples):
        f, g = rng.choice(gens), rng.choice(gens)
        a = _random_word(rng, 2)
        for name, check in checks:
            if not check(f, g, a):
                out.append(f"{name}[{k}]")
    return out


def casimir_preserves_b_failures(max_degree: int = 3) -> list[str]:
    """EF |> a stays weight 0 for weight-0 words a."""
    op = casimir_operator()
    out = []
    for d in range(1, max_degree + 1):
        for word in product(range(9), repeat=d):
            if column_weight(word) != 0:
                continue
            a = NcPoly.monomial(U, word)
            if not is_coinvariant(left_action(op, a)):
                out.append(U.word_text(word))
    return out
