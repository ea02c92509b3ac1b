"""O(SL_s(2)) with s = q^(1/2) = r^2.

Relations ab = s ba, ac = s ca, bd = s db, cd = s dc, bc = cb and
ad - s bc = 1. The alphabet is ordered b < c < a < d, and a and d are
moved to the right of b and c. Both ad and da are eliminated, so normal
words are b^j c^k a^i or b^j c^k d^l. The monomial order weighs a and d
twice as heavily as b and c, which makes the two elimination rules
decreasing.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from qorth.errors import VerificationError
from qorth.freealg import Alphabet, NcPoly, StarMap, Tensor2
from qorth.hopf import AntiHomomorphism, Coproduct, Counit, HopfMaps
from qorth.rewrite import RewriteSystem
from qorth.scalar import ONE, Q, S, ZERO, Regime, Scalar

logger = logging.getLogger(__name__)

SL_ALPHABET = Alphabet("sl2", ("b", "c", "a", "d"), weights=(1, 1, 2, 2))

SL_RULES = [
    ("a*b", "s*b*a"),
    ("a*c", "s*c*a"),
    ("c*b", "b*c"),
    ("d*b", "s^-1*b*d"),
    ("d*c", "s^-1*c*d"),
    ("a*d", "1 + s*b*c"),
    ("d*a", "1 + s^-1*b*c"),
]

_B, _C = SL_ALPHABET.word("b", "c")


@lru_cache(maxsize=1)
def sl_system() -> RewriteSystem:
    return RewriteSystem.from_text(SL_ALPHABET, SL_RULES, "sl2")


def sl_reduce(p: NcPoly) -> NcPoly:
    """PBW normal form in O(SL_s(2))."""
    return sl_system().normal_form(p)


def gen(symbol: str) -> NcPoly:
    return NcPoly.gen(SL_ALPHABET, symbol)


@lru_cache(maxsize=1)
def _counit() -> Counit:
    return Counit(SL_ALPHABET, {"a": 1, "b": 0, "c": 0, "d": 1})


def sl_counit(p: NcPoly) -> Scalar:
    """a, d -> 1 and b, c -> 0."""
    return _counit()(p)


# ---------------------------------------------------------------------------
# Singular trace
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def mu_bc(k: int) -> Scalar:
    """mu((bc)^k) = (-1)^k s^k / (q^k - 1) for k >= 1, and mu(1) = 0."""
    if k == 0:
        return ZERO
    sign = ONE if k % 2 == 0 else -ONE
    return sign * S**k / (Q**k - ONE)


def mu_y2(k: int) -> Scalar:
    """Closed form mu((y2 - 1)^k) = (-1)^k (q + 1)^k / (q^k - 1)."""
    if k == 0:
        return ZERO
    sign = ONE if k % 2 == 0 else -ONE
    return sign * (Q + ONE) ** k / (Q**k - ONE)


def _bc_power(word: tuple[int, ...]) -> int | None:
    k, rem = divmod(len(word), 2)
    if rem or word != (_B,) * k + (_C,) * k:
        return None
    return k


def singular_trace(p: NcPoly) -> Scalar:
    """Linear extension of mu over C[bc]; other words are rejected."""
    total = ZERO
    for word, c in sl_reduce(p).terms.items():
        k = _bc_power(word)
        if k is None:
            raise VerificationError(
                f"Singular trace argument contains {SL_ALPHABET.word_text(word)}",
                code="SINGULAR_TRACE_DOMAIN",
                suggestions=["Only coinvariant elements have a singular trace"],
            )
        total = total + c * mu_bc(k)
    return total


# ---------------------------------------------------------------------------
# Hopf structure and star maps
# ---------------------------------------------------------------------------


def _pure(x: str, y: str) -> Tensor2:
    return Tensor2.pure(gen(x), gen(y))


@lru_cache(maxsize=1)
def sl_hopf() -> HopfMaps:
    """Delta(v) = v (x) v, eps(v) = I and S(v) = [[d, -s^-1 b], [-s c, a]]."""
    coproduct = Coproduct(
        SL_ALPHABET,
        {
            "a": _pure("a", "a") + _pure("b", "c"),
            "b": _pure("a", "b") + _pure("b", "d"),
            "c": _pure("c", "a") + _pure("d", "c"),
            "d": _pure("c", "b") + _pure("d", "d"),
        },
        sl_reduce,
    )
    antipode = AntiHomomorphism(
        SL_ALPHABET,
        {
            "a": gen("d"),
            "b": gen("b").scale(-S.inverse()),
            "c": gen("c").scale(-S),
            "d": gen("a"),
        },
        sl_reduce,
    )
    return HopfMaps(SL_ALPHABET, coproduct, _counit(), antipode, sl_reduce)


def sl_coproduct(p: NcPoly) -> Tensor2:
    return sl_hopf().coproduct(p)


def sl_antipode(p: NcPoly) -> NcPoly:
    return sl_hopf().antipode(p)


@lru_cache(maxsize=2)
def sl_star(regime: Regime) -> StarMap:
    """q-real: a* = d, b* = -s c, c* = -s^-1 b. q-unimodular: generators fixed."""
    if regime is Regime.Q_REAL:
        images = {
            "a": gen("d"),
            "b": gen("c").scale(-S),
            "c": gen("b").scale(-S.inverse()),
            "d": gen("a"),
        }
    else:
        images = {s: gen(s) for s in SL_ALPHABET.symbols}
    return StarMap(SL_ALPHABET, images, regime, sl_reduce)


def bc() -> NcPoly:
    return NcPoly.from_words(SL_ALPHABET, "b", "c")
