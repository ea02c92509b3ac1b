"""R-matrix laboratory for the orthogonal series.

Index conventions: generators and tensor legs are numbered 1..N, and an
N^2 x N^2 matrix entry M^{ij}_{mn} sits at row (i-1)*N + (j-1), column
(m-1)*N + (n-1) (0-based storage). For N = 3 the entry R^{22}_{13} is
therefore at row 4, column 2.

The braided matrix is Rhat^{kj}_{mn} = R^{jk}_{mn}. Its spectral projectors
act on quadratic words from the left: a relation vector v (indexed by the
word g_m g_n) is a row of a projector, i.e. a left eigenvector of Rhat.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, NamedTuple

from qorth.errors import ShapeError, SpectrumError, VerificationError
from qorth.freealg import Alphabet, NcMatrix, NcPoly, Word, word_key
from qorth.linalg import ScalarMatrix, rank, rref
from qorth.rewrite import RewriteSystem
from qorth.scalar import LAMBDA, ONE, Q, ZERO, Scalar, format_scalar, q_power

logger = logging.getLogger(__name__)


def prime(i: int, n: int) -> int:
    """i' = N + 1 - i."""
    return n + 1 - i


def rho(i: int, n: int) -> Fraction:
    ip = prime(i, n)
    if i == ip:
        return Fraction(0)
    if i < ip:
        return Fraction(n, 2) - i
    return -(Fraction(n, 2) - ip)


def flat(i: int, j: int, n: int) -> int:
    """Storage index of the pair (i, j), both 1-based."""
    return (i - 1) * n + (j - 1)


def build_R(n: int) -> ScalarMatrix:
    """The orthogonal R-matrix R^{ij}_{mn} for C^N (x) C^N."""
    if n < 2:
        raise SpectrumError(
            f"R-matrix needs N >= 2, got {n}",
            suggestions=["Use --n 2 or --n 3"],
        )
    rows: dict[int, dict[int, Scalar]] = {}
    idx = range(1, n + 1)
    for i, j, m, k in product(idx, idx, idx, idx):
        value = ZERO
        if i == m and j == k:
            exponent = (1 if i == j else 0) - (1 if i == prime(j, n) else 0)
            value = value + q_power(exponent)
        if i > m:
            inner = ZERO
            if j == m and i == k:
                inner = inner + ONE
            if i == prime(j, n) and k == prime(m, n):
                inner = inner - q_power(-rho(j, n) - rho(m, n))
            value = value + LAMBDA * inner
        if value:
            rows.setdefault(flat(i, j, n), {})[flat(m, k, n)] = value
    return ScalarMatrix(n * n, n * n, rows)


def flip_matrix(n: int) -> ScalarMatrix:
    idx = range(1, n + 1)
    rows = {flat(i, j, n): {flat(j, i, n): ONE} for i in idx for j in idx}
    return ScalarMatrix(n * n, n * n, rows)


def braid(r: ScalarMatrix, n: int) -> ScalarMatrix:
    """Rhat^{kj}_{mn} = R^{jk}_{mn}: rows of R permuted by the flip."""
    return flip_matrix(n) @ r


def yang_baxter_residual(n: int) -> ScalarMatrix:
    """R12 R13 R23 - R23 R13 R12 on (C^N)^(x)3; zero for a solution."""
    r = build_R(n)
    ident = ScalarMatrix.identity(n)
    p23 = ident.kron(flip_matrix(n))
    r12 = r.kron(ident)
    r23 = ident.kron(r)
    r13 = p23 @ r12 @ p23
    return r12 @ r13 @ r23 - r23 @ r13 @ r12


def metric_matrix(n: int) -> ScalarMatrix:
    """C_{kj} = delta_{k j'} q^{-rho_k}; C is its own inverse."""
    return ScalarMatrix(
        n,
        n,
        {k - 1: {prime(k, n) - 1: q_power(-rho(k, n))} for k in range(1, n + 1)},
    )


# ---------------------------------------------------------------------------
# Spectral decomposition
# ---------------------------------------------------------------------------


class Projectors(NamedTuple):
    plus: ScalarMatrix
    minus: ScalarMatrix
    zero: ScalarMatrix


def eigenvalues(n: int) -> tuple[Scalar, Scalar, Scalar]:
    """Eigenvalues (q, -q^-1, q^(1-N)) belonging to (P+, P-, P0)."""
    return (Q, -Q.inverse(), q_power(1 - n))


def spectral_projectors(rhat: ScalarMatrix, n: int) -> Projectors:
    """Lagrange interpolation of Rhat at its three eigenvalues."""
    if n <= 2:
        raise SpectrumError(
            f"Rhat has only two distinct eigenvalues for N = {n}",
            code="SPECTRUM_DEGENERATE",
            suggestions=["The three-projector decomposition needs N > 2"],
        )
    lams = eigenvalues(n)
    for a in range(3):
        for b in range(a + 1, 3):
            if lams[a] == lams[b]:
                raise SpectrumError(
                    "Eigenvalues of the braided R-matrix coincide",
                    code="SPECTRUM_DEGENERATE",
                )
    ident = ScalarMatrix.identity(rhat.nrows)
    out = []
    for a, la in enumerate(lams):
        acc = ident
        for b, lb in enumerate(lams):
            if a == b:
                continue
            acc = acc @ (rhat - ident.scale(lb)).scale((la - lb).inverse())
        out.append(acc)
    logger.debug("projector ranks: %s", [rank(p) for p in out])
    return Projectors(*out)


def cubic_residual(rhat: ScalarMatrix, n: int) -> ScalarMatrix:
    ident = ScalarMatrix.identity(rhat.nrows)
    acc = ident
    for lam in eigenvalues(n):
        acc = acc @ (rhat - ident.scale(lam))
    return acc


# ---------------------------------------------------------------------------
# Relations and spans
# ---------------------------------------------------------------------------


def coefficient_matrix(
    polys: Sequence[NcPoly], words: Sequence[Word] | None = None
) -> tuple[ScalarMatrix, list[Word]]:
    """Rows are polynomials, columns are words in display order."""
    cols = (
        list(words)
        if words is not None
        else sorted({w for p in polys for w in p.terms}, key=word_key)
    )
    index = {w: k for k, w in enumerate(cols)}
    rows = {i: {index[w]: c for w, c in p.terms.items()} for i, p in enumerate(polys)}
    return ScalarMatrix(len(polys), len(cols), rows), cols


def span_rank(polys: Sequence[NcPoly]) -> int:
    if not polys:
        return 0
    return rank(coefficient_matrix(polys)[0])


def same_span(a: Sequence[NcPoly], b: Sequence[NcPoly]) -> bool:
    """True when the two polynomial lists span the same subspace."""
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank([*a, *b])


def relations_from_projector(p: ScalarMatrix, gens: Alphabet) -> list[NcPoly]:
    """Row-reduced basis of {sum_{mn} P^{jl}_{mn} g_m g_n}."""
    n = len(gens)
    if p.shape != (n * n, n * n):
        raise ShapeError(
            f"Projector shape {p.shape} does not match {n} generators",
            code="SHAPE_MISMATCH",
        )
    if p.is_zero():
        return []
    reduced, pivots = rref(p)
    words = [(m, k) for m in range(n) for k in range(n)]
    out = []
    for row in range(len(pivots)):
        terms = {words[col]: c for col, c in reduced.row(row).items()}
        out.append(NcPoly(gens, terms))
    return out


# ---------------------------------------------------------------------------
# Quadratic algebras of the N = 3 R-matrix
# ---------------------------------------------------------------------------

X_ALPHABET = Alphabet("c3", ("x1", "x2", "x3"))
E_ALPHABET = Alphabet("ext", ("e1", "e2", "e3"))

C3_RULES = [
    ("x2*x1", "q^-1*x1*x2"),
    ("x3*x2", "q^-1*x2*x3"),
    ("x3*x1", "x1*x3 + (s - s^-1)*x2^2"),
]

EXTERIOR_RULES = [
    ("e1*e1", "0"),
    ("e3*e3", "0"),
    ("e2*e2", "(s - s^-1)*e1*e3"),
    ("e3*e2", "-q*e2*e3"),
    ("e3*e1", "-e1*e3"),
    ("e2*e1", "-q*e1*e2"),
]


@lru_cache(maxsize=1)
def c3_system() -> RewriteSystem:
    """Quantum Euclidean space C^3_q with x1 < x2 < x3."""
    return RewriteSystem.from_text(X_ALPHABET, C3_RULES, "c3")


@lru_cache(maxsize=1)
def exterior_system() -> RewriteSystem:
    """Quantized orthogonal exterior algebra on e1, e2, e3."""
    return RewriteSystem.from_text(E_ALPHABET, EXTERIOR_RULES, "ext")


def rule_relations(rs: RewriteSystem) -> list[NcPoly]:
    """lhs - rhs for every rule."""
    return [NcPoly.monomial(rs.alphabet, rule.lhs) - rule.rhs for rule in rs.rules]


def quadratic_central_element() -> NcPoly:
    """r = q^-1/2 x1 x3 + x2^2 + q^1/2 x3 x1."""
    from qorth.expr import parse_poly

    return parse_poly("s^-1*x1*x3 + x2^2 + s*x3*x1", X_ALPHABET)


def exterior_dimensions(max_degree: int = 4) -> list[int]:
    """Number of normal words per degree (the graded dimension when confluent)."""
    rs = exterior_system()
    n = len(rs.alphabet)
    return [
        sum(1 for w in product(range(n), repeat=d) if rs.is_normal(w))
        for d in range(max_degree + 1)
    ]


# ---------------------------------------------------------------------------
# Epsilon tensor and pre-regular checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonTensor:
    """Nonzero components e_k e_m e_n = eps_{kmn} e1 e2 e3, indices 1..3."""

    components: dict[tuple[int, int, int], Scalar] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int, int]) -> Scalar:
        return self.components.get(key, ZERO)

    def nonzero(self) -> list[tuple[tuple[int, int, int], Scalar]]:
        return sorted(self.components.items())


def extract_epsilon() -> EpsilonTensor:
    rs = exterior_system()
    top = E_ALPHABET.word("e1", "e2", "e3")
    comps: dict[tuple[int, int, int], Scalar] = {}
    for k, m, n in product(range(3), repeat=3):
        nf = rs.reduce_word((k, m, n))
        if not nf:
            continue
        if set(nf.terms) != {top}:
            raise VerificationError(
                f"e{k + 1}e{m + 1}e{n + 1} reduces to {nf}, not a multiple of e1e2e3",
                suggestions=["Run `qorth verify --suite confluence` first"],
            )
        comps[(k + 1, m + 1, n + 1)] = nf.coefficient(top)
    logger.debug("epsilon tensor: %d nonzero components", len(comps))
    return EpsilonTensor(comps)


CYCLIC_WEIGHTS: tuple[Scalar, Scalar, Scalar] = (Q, ONE, Q.inverse())


@dataclass
class PreregularReport:
    cyclic_failures: list[tuple[int, int, int]]
    rank: int
    spans_c3: bool

    @property
    def ok(self) -> bool:
        return not self.cyclic_failures and self.rank == 3 and self.spans_c3


def epsilon_relations(eps: EpsilonTensor) -> list[NcPoly]:
    """{sum_{jk} eps_{ijk} x_j x_k : i = 1..3}."""
    return [
        NcPoly(
            X_ALPHABET,
            {(j - 1, k - 1): eps[(i, j, k)] for j in range(1, 4) for k in range(1, 4)},
        )
        for i in range(1, 4)
    ]


def preregular_checks(eps: EpsilonTensor) -> PreregularReport:
    failures = [
        (i, j, k)
        for i, j, k in product(range(1, 4), repeat=3)
        if eps[(i, j, k)] != CYCLIC_WEIGHTS[k - 1] * eps[(k, i, j)]
    ]
    pairs = list(product(range(1, 4), repeat=2))
    rows = {
        i - 1: {(j - 1) * 3 + (k - 1): eps[(i, j, k)] for j, k in pairs}
        for i in range(1, 4)
    }
    mat = ScalarMatrix(3, 9, rows)
    spans = same_span(epsilon_relations(eps), rule_relations(c3_system()))
    return PreregularReport(failures, rank(mat), spans)


# ---------------------------------------------------------------------------
# Defining matrices, antipode and quadratic forms
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def matrix_alphabet(n: int, prefix: str = "u") -> Alphabet:
    """Generators u11..uNN, row-major."""
    return Alphabet(
        f"{prefix}{n}",
        tuple(f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)),
    )


def generator(alphabet: Alphabet, i: int, j: int) -> NcPoly:
    """u_{ij} (1-based) of a square matrix alphabet."""
    n = int(round(len(alphabet) ** 0.5))
    return NcPoly.monomial(alphabet, ((i - 1) * n + (j - 1),))


def generator_matrix(alphabet: Alphabet) -> NcMatrix:
    n = int(round(len(alphabet) ** 0.5))
    return NcMatrix(
        alphabet,
        [[generator(alphabet, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)],
    )


def antipode_matrix(alphabet: Alphabet) -> NcMatrix:
    """S(u) = C u^t C^-1, i.e. S(u)_{ij} = q^(rho_j - rho_i) u_{j' i'}."""
    n = int(round(len(alphabet) ** 0.5))
    return NcMatrix(
        alphabet,
        [
            [
                generator(alphabet, prime(j, n), prime(i, n)).scale(
                    q_power(rho(j, n) - rho(i, n))
                )
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ],
    )


def quadratic_form_q(alphabet: Alphabet, j: int) -> tuple[NcPoly, NcPoly]:
    """The j-th diagonal entries of S(u) u and u S(u), unreduced."""
    u = generator_matrix(alphabet)
    su = antipode_matrix(alphabet)
    return (su @ u)[j - 1, j - 1], (u @ su)[j - 1, j - 1]


def metric_relations(alphabet: Alphabet) -> list[NcPoly]:
    """Entries of u C u^t C^-1 - I and C^-1 u^t C u - I."""
    n = int(round(len(alphabet) ** 0.5))
    c = metric_matrix(n)
    u = generator_matrix(alphabet)
    cmat = NcMatrix(
        alphabet,
        [[NcPoly.constant(alphabet, c[i, j]) for j in range(n)] for i in range(n)],
    )
    ident = NcMatrix.identity(alphabet, n)
    first = u @ cmat @ u.transpose() @ cmat - ident
    second = cmat @ u.transpose() @ cmat @ u - ident
    return [m[i, j] for m in (first, second) for i in range(n) for j in range(n)]


# ---------------------------------------------------------------------------
# Serialisation for the rmatrix command
# ---------------------------------------------------------------------------


def _entries(m: ScalarMatrix, n: int) -> list[dict[str, Any]]:
    out = []
    for row, col, value in m.items():
        i, j = divmod(row, n)
        a, b = divmod(col, n)
        out.append(
            {
                "row": f"{i + 1}{j + 1}",
                "col": f"{a + 1}{b + 1}",
                "value": format_scalar(value),
            }
        )
    return out


def _poly_texts(polys: Iterable[NcPoly]) -> list[str]:
    return [str(p) for p in polys]


def rmatrix_payload(n: int) -> dict[str, Any]:
    """R, its projectors and the induced relation sets as plain data."""
    r = build_R(n)
    payload: dict[str, Any] = {"n": n, "R": _entries(r, n)}
    if n <= 2:
        payload["projectors"] = {}
        payload["relations"] = {}
        return payload
    proj = spectral_projectors(braid(r, n), n)
    xs = Alphabet(f"x{n}", tuple(f"x{k}" for k in range(1, n + 1)))
    es = Alphabet(f"e{n}", tuple(f"e{k}" for k in range(1, n + 1)))
    payload["projectors"] = {
        name: {"rank": rank(p), "entries": _entries(p, n)}
        for name, p in zip(("plus", "minus", "zero"), proj)
    }
    payload["relations"] = {
        "symmetric": _poly_texts(relations_from_projector(proj.minus, xs)),
        "exterior": _poly_texts(relations_from_projector(proj.plus + proj.zero, es)),
    }
    return payload


