"""Line bundles over B: the idempotents p_n, their traces and pairings.

For n >= 0 the idempotent is |ket><bra| with ket_J = xi_jn ... xi_j1 and
bra_J = eta_j1 ... eta_jn over multi-indices J in {1,2,3}^n. For n < 0 the
vectors alpha and beta take the place of xi and eta. Entries are single
words of SO_q(3), so every check goes through the covering map.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product

from qorth.coinv import Y_ALPHABET, Identity, embed, is_coinvariant, u_poly, y, y_poly
from qorth.errors import VerificationError
from qorth.expr import parse_scalar
from qorth.freealg import NcMatrix, NcPoly
from qorth.scalar import ONE, Q, S, ZERO, Regime, Scalar, format_scalar
from qorth.slq2 import SL_ALPHABET, bc, mu_bc, singular_trace, sl_counit, sl_reduce
from qorth.soq3 import U, covering, star_map
from qorth.tables import TRACE_P1, TRACE_PRODUCTS

logger = logging.getLogger(__name__)

MultiIndex = tuple[int, ...]


def _u(i: int, j: int) -> NcPoly:
    return NcPoly.gen(U, f"u{i}{j}")


@lru_cache(maxsize=1)
def vectors() -> dict[str, tuple[NcPoly, NcPoly, NcPoly]]:
    """xi, eta, alpha and beta; sum eta_j xi_j = sum beta_j alpha_j = 1."""
    return {
        "xi": (_u(1, 1), _u(2, 1), _u(3, 1)),
        "eta": (_u(3, 3), _u(2, 3).scale(S.inverse()), _u(1, 3).scale(Q.inverse())),
        "alpha": (_u(1, 3), _u(2, 3), _u(3, 3)),
        "beta": (_u(3, 1).scale(Q), _u(2, 1).scale(S), _u(1, 1)),
    }


def multi_indices(n: int) -> list[MultiIndex]:
    """{0,1,2}^|n| in lexicographic order (0-based)."""
    return list(product(range(3), repeat=abs(n)))


def build_generators(n: int) -> tuple[list[NcPoly], list[NcPoly]]:
    """(ket, bra) for the line bundle of charge n."""
    vec = vectors()
    kets, bras = (vec["xi"], vec["eta"]) if n >= 0 else (vec["alpha"], vec["beta"])
    ket, bra = [], []
    for idx in multi_indices(n):
        k = NcPoly.one(U)
        b = NcPoly.one(U)
        for j in reversed(idx):
            k = k * kets[j]
        for j in idx:
            b = b * bras[j]
        ket.append(k)
        bra.append(b)
    return ket, bra


@dataclass
class BundleData:
    """p_n with entry (J, K) = ket_J bra_K."""

    n: int
    ket: list[NcPoly]
    bra: list[NcPoly]
    _images: dict[tuple[int, int], NcPoly] = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.ket)

    def entry(self, j: int, k: int) -> NcPoly:
        return self.ket[j] * self.bra[k]

    def image(self, j: int, k: int) -> NcPoly:
        """SL normal form of entry (j, k), cached."""
        hit = self._images.get((j, k))
        if hit is None:
            hit = covering(self.entry(j, k))
            self._images[(j, k)] = hit
        return hit

    @cached_property
    def matrix(self) -> NcMatrix:
        return NcMatrix(
            U, [[self.entry(j, k) for k in range(self.size)] for j in range(self.size)]
        )

    @cached_property
    def trace(self) -> NcPoly:
        """sum_J ket_J bra_J over u."""
        acc = NcPoly.zero(U)
        for k, b in zip(self.ket, self.bra):
            acc = acc + k * b
        return acc

    @cached_property
    def trace_image(self) -> NcPoly:
        return covering(self.trace)

    @cached_property
    def inner(self) -> NcPoly:
        """<bra|ket> = sum_J bra_J ket_J over u."""
        acc = NcPoly.zero(U)
        for k, b in zip(self.ket, self.bra):
            acc = acc + b * k
        return acc


# ---------------------------------------------------------------------------
# Idempotents
# ---------------------------------------------------------------------------


def idempotency_failures(data: BundleData) -> list[tuple[int, int]]:
    """Entries where p^2 and p differ in SO_q(3).

    Up to size 9 every entry of p^2 is summed over the middle index. Beyond,
    the sum is grouped as phi(ket_J) (sum_L phi(bra_L ket_L)) phi(bra_K).
    """
    size = data.size
    failures = []
    if size <= 9:
        for j, k in product(range(size), repeat=2):
            acc = NcPoly.zero(SL_ALPHABET)
            for m in range(size):
                acc = acc + data.image(j, m) * data.image(m, k)
            if sl_reduce(acc) != data.image(j, k):
                failures.append((j, k))
        return failures
    inner = covering(data.inner)
    kets = [covering(p) for p in data.ket]
    bras = [covering(p) for p in data.bra]
    for j, k in product(range(size), repeat=2):
        if sl_reduce(kets[j] * inner * bras[k]) != data.image(j, k):
            failures.append((j, k))
    return failures


def weight_failures(data: BundleData) -> list[tuple[int, int]]:
    return [
        (j, k)
        for j, k in product(range(data.size), repeat=2)
        if not is_coinvariant(data.entry(j, k))
    ]


@lru_cache(maxsize=32)
def bundle_data(n: int) -> BundleData:
    """Shared p_n; entry images and the trace are cached on the instance."""
    return BundleData(n, *build_generators(n))


def build_idempotent(n: int, *, check: bool = True) -> BundleData:
    """Assemble p_n; with ``check`` assert p_n^2 = p_n and weight-0 entries."""
    data = bundle_data(n)
    if not check:
        return data
    bad = idempotency_failures(data) + weight_failures(data)
    if bad:
        j, k = bad[0]
        raise VerificationError(
            f"p_{n} fails at entry ({j + 1}, {k + 1})",
            code="IDEMPOTENT_FAILURE",
            suggestions=["Run `qorth verify --suite covering` first"],
        )
    logger.debug("p_%d: %dx%d idempotent", n, data.size, data.size)
    return data


def selfadjoint(data: BundleData, regime: Regime) -> bool:
    """(p_KJ)* == p_JK for every entry."""
    star = star_map(regime)
    return all(
        covering(star(data.entry(k, j))) == data.image(j, k)
        for j, k in product(range(data.size), repeat=2)
    )


# ---------------------------------------------------------------------------
# Trace and pairings
# ---------------------------------------------------------------------------


def x_element() -> NcPoly:
    """X = (1 + q)^-1 (y2 - 1) over u."""
    return embed(y(2) - NcPoly.one(Y_ALPHABET)).scale((ONE + Q).inverse())


def x_image() -> NcPoly:
    """phi(X) = s^-1 bc."""
    return bc().scale(S.inverse())


@lru_cache(maxsize=32)
def trace_coefficient(n: int, j: int) -> Scalar:
    """C_J^(n) = prod_{k<J} (q^(2n-k) - 1); C_0 = 1."""
    acc = ONE
    for k in range(j):
        acc = acc * (Q ** (2 * n - k) - ONE)
    return acc


def expected_trace(n: int) -> NcPoly:
    """phi(1 + sum_J C_J X^J) in O(SL_s(2)), n >= 0."""
    acc = NcPoly.one(SL_ALPHABET)
    xi = x_image()
    for j in range(1, 2 * n + 1):
        acc = acc + (xi**j).scale(trace_coefficient(n, j))
    return sl_reduce(acc)


def x_coefficients(trace_image: NcPoly) -> list[Scalar]:
    """Coefficients of X^J in an element of C[bc], J = 0, 1, ..."""
    top = max((len(w) // 2 for w in trace_image.terms), default=0)
    coeffs = []
    for j in range(top + 1):
        word = SL_ALPHABET.word(*(["b"] * j + ["c"] * j))
        coeffs.append(trace_image.coefficient(word) * S**j)
    return coeffs


def mu_x(j: int) -> Scalar:
    """mu(X^J) = (-1)^J / (q^J - 1) for J >= 1."""
    return mu_bc(j) * S ** (-j)


def format_x_polynomial(coeffs: list[Scalar]) -> str:
    parts = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if j == 0 else ("X" if j == 1 else f"X^{j}")
        if not mono:
            parts.append(format_scalar(c))
        elif c == ONE:
            parts.append(mono)
        else:
            parts.append(f"({format_scalar(c)})*{mono}")
    return " + ".join(parts) if parts else "0"


@dataclass
class TracePairings:
    n: int
    trace: NcPoly
    coefficients: list[Scalar]
    rank: Scalar
    degree: Scalar
    matches_formula: bool | None

    @property
    def trace_text(self) -> str:
        return format_x_polynomial(self.coefficients)

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "trace": self.trace_text,
            "rank": format_scalar(self.rank),
            "degree": format_scalar(self.degree),
            "matches_formula": self.matches_formula,
        }


def trace_and_pairings(data: BundleData) -> TracePairings:
    """tr(p_n) in X with its counit (rank) and singular trace (degree).

    The closed trace formula is only asserted for n >= 0.
    """
    image = data.trace_image
    rank = sl_counit(image)
    degree = singular_trace(image)
    matches = image == expected_trace(data.n) if data.n >= 0 else None
    result = TracePairings(data.n, image, x_coefficients(image), rank, degree, matches)
    logger.debug("p_%d: trace %s", data.n, result.trace_text)
    return result


def trace_p1_matches() -> bool:
    """tr(p_1) equals its displayed form in y2."""
    ket, bra = build_generators(1)
    return covering(BundleData(1, ket, bra).trace) == covering(embed(y_poly(TRACE_P1)))


# ---------------------------------------------------------------------------
# Auxiliary identities and recursions
# ---------------------------------------------------------------------------


def comm_ux_identities(max_power: int = 4) -> list[Identity]:
    """u11 X^J = q^2J X^J u11, u21 X^J = q^J X^J u21, u31 X^J = X^J u31."""
    xe = x_element()
    out = []
    for j in range(1, max_power + 1):
        xj = xe**j
        for row, exp in ((1, 2 * j), (2, j), (3, 0)):
            g = _u(row, 1)
            out.append((f"u{row}1*X^{j}", g * xj, (xj * g).scale(Q**exp)))
    return out


def id_ux_identities() -> list[Identity]:
    xe = x_element()
    out = []
    for lhs, coeffs in TRACE_PRODUCTS:
        rhs = NcPoly.zero(U)
        for j, text in enumerate(coeffs):
            rhs = rhs + (xe**j).scale(parse_scalar(text))
        out.append((lhs, u_poly(lhs), rhs))
    return out


def coefficient_recursion_failures(max_n: int = 3) -> list[str]:
    """C_J^(n) = (q^(2n+1-J) - 1) C_{J-1}^(n) and the n -> n+1 shift."""
    out = []
    for n in range(1, max_n + 1):
        for j in range(1, 2 * n + 1):
            step = (Q ** (2 * n + 1 - j) - ONE) * trace_coefficient(n, j - 1)
            if trace_coefficient(n, j) != step:
                out.append(f"C_{j}^({n})")
        for j in range(0, 2 * n + 1):
            factor = (Q ** (2 * n + 2) - ONE) * (Q ** (2 * n + 1) - ONE)
            shifted = factor * trace_coefficient(n, j)
            if trace_coefficient(n + 1, j + 2) != shifted:
                out.append(f"C_{j + 2}^({n + 1})")
    return out


def mu_recursion_failures(max_power: int = 6) -> list[int]:
    """mu(X^(J+1)) = -(q^J - 1)/(q^(J+1) - 1) mu(X^J)."""
    return [
        j
        for j in range(1, max_power)
        if mu_x(j + 1) != -(Q**j - ONE) / (Q ** (j + 1) - ONE) * mu_x(j)
    ]


def degree_additivity(n: int) -> Scalar:
    """mu(tr p_n) + mu(tr p_-n); zero when degrees are opposite."""
    if n == 0:
        return ZERO
    plus = singular_trace(bundle_data(n).trace_image)
    minus = singular_trace(bundle_data(-n).trace_image)
    return plus + minus


# ---------------------------------------------------------------------------
# Hopf-Galois identities
# ---------------------------------------------------------------------------


def dual_pairing_identities(max_n: int = 3) -> list[Identity]:
    """sum eta_j xi_j = 1, sum beta_j alpha_j = 1 and the telescoping sums."""
    vec = vectors()
    one = NcPoly.one(U)
    out: list[Identity] = [
        (
            "eta.xi",
            sum((e * x for e, x in zip(vec["eta"], vec["xi"])), NcPoly.zero(U)),
            one,
        ),
        (
            "beta.alpha",
            sum((b * a for b, a in zip(vec["beta"], vec["alpha"])), NcPoly.zero(U)),
            one,
        ),
    ]
    for n in range(-max_n, max_n + 1):
        out.append((f"<bra|ket>[n={n}]", bundle_data(n).inner, one))
    return out
