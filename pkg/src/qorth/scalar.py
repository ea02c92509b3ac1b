"""Exact coefficient field K = Q(i)(r)[w]/(w^2 - 1 - r^4).

``r`` stands for q^(1/4), so q = r^4 and s = q^(1/2) = r^2. The element w is
(1 + q)^(1/2); eta = w/r = (q^(1/2) + q^(-1/2))^(1/2) therefore lives in K as
well. Rational functions in r are sympy ``FracElement`` values over ``QQ_I``,
which sympy keeps cancelled with a quadrant-normalised denominator, so equal
field elements have identical representations.

Never use ``**`` with a negative exponent on a raw ``FracElement``: sympy
skips the canonicalisation there. Go through division instead.
"""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import QQ_I
from sympy.polys.fields import FracElement, field

logger = logging.getLogger(__name__)

RF, _R = field("r", QQ_I)
_RING = RF.ring
_RPOLY = _RING.gens[0]
_W_SQUARED = RF.one + _R * _R * _R * _R


class Regime(str, Enum):
    """Coefficient conjugation regime of a star structure."""

    Q_REAL = "q-real"
    UNIMODULAR = "q-unimodular"


def _to_rf(value: Any) -> Any:
    if isinstance(value, Fraction):
        return RF(value.numerator) / RF(value.denominator)
    if isinstance(value, int):
        return RF(value)
    if isinstance(value, FracElement) and value.field == RF:
        return value
    # Q(i) constants and ring polynomials
    return RF(value)


def _conj_poly(p: Any) -> Any:
    return _RING.from_dict({m: QQ_I(c.x, -c.y) for m, c in p.items()})


def _reverse_poly(p: Any, degree: int) -> Any:
    return _RING.from_dict({(degree - m[0],): c for m, c in p.items()})


def _conj_rf(f: Any) -> Any:
    return RF.new(_conj_poly(f.numer), _conj_poly(f.denom))


def _invert_r_rf(f: Any) -> Any:
    """Substitute r -> 1/r in a rational function."""
    if not f:
        return f
    p, q = f.numer, f.denom
    dp, dq = p.degree(), q.degree()
    return RF.new(_reverse_poly(p, dp) * _RPOLY**dq, _reverse_poly(q, dq) * _RPOLY**dp)


def _eval_at_one(p: Any) -> Any:
    total = QQ_I.zero
    for c in p.values():
        total += c
    return total


def _rf_pow(f: Any, n: int) -> Any:
    result = RF.one
    base = f
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


class Scalar:
    """Element part0 + part1*w of K, immutable."""

    __slots__ = ("_hash", "_p0", "_p1")

    def __init__(self, part0: Any = 0, part1: Any = 0) -> None:
        self._p0 = _to_rf(part0)
        self._p1 = _to_rf(part1)
        self._hash: int | None = None

    @classmethod
    def _raw(cls, p0: Any, p1: Any) -> Scalar:
        obj = cls.__new__(cls)
        obj._p0 = p0
        obj._p1 = p1
        obj._hash = None
        return obj

    @property
    def part0(self) -> Any:
        return self._p0

    @property
    def part1(self) -> Any:
        return self._p1

    @property
    def is_rational_function(self) -> bool:
        """True when the w-part vanishes."""
        return not self._p1

    @staticmethod
    def _coerce(other: object) -> Scalar | None:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self._p0 + o._p0, self._p1 + o._p1)

    __radd__ = __add__

    def __sub__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self._p0 - o._p0, self._p1 - o._p1)

    def __rsub__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> Scalar:
        return Scalar._raw(-self._p0, -self._p1)

    def __mul__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, b0, b1 = self._p0, self._p1, o._p0, o._p1
        if not a1 and not b1:
            return Scalar._raw(a0 * b0, a1)
        return Scalar._raw(a0 * b0 + _W_SQUARED * a1 * b1, a0 * b1 + a1 * b0)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Multiplicative inverse via the conjugate part0 - part1*w."""
        if not self:
            raise ZeroDivisionError("inverse of zero Scalar")
        if not self._p1:
            return Scalar._raw(RF.one / self._p0, self._p1)
        norm = self._p0 * self._p0 - _W_SQUARED * self._p1 * self._p1
        return Scalar._raw(self._p0 / norm, -self._p1 / norm)

    def __truediv__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return bool(self._p0 == o._p0 and self._p1 == o._p1)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._p0, self._p1))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._p0) or bool(self._p1)

    def conjugate(self, regime: Regime) -> Scalar:
        """Apply the coefficient conjugation of ``regime``.

        q-real: i -> -i with r and w fixed. q-unimodular: i -> -i, r -> 1/r,
        w -> w*r^-2. Both are involutive automorphisms over Q.
        """
        p0 = _conj_rf(self._p0)
        p1 = _conj_rf(self._p1)
        if regime is Regime.Q_REAL:
            return Scalar._raw(p0, p1)
        p0 = _invert_r_rf(p0)
        p1 = _invert_r_rf(p1)
        return Scalar._raw(p0, p1 / (_R * _R) if p1 else p1)

    def classical_limit(self) -> Scalar | None:
        """Substitute r = 1, keeping w symbolic (w^2 = 2 there).

        Returns None when a denominator vanishes at r = 1.
        """
        parts = []
        for f in (self._p0, self._p1):
            den = _eval_at_one(f.denom)
            if not den:
                return None
            parts.append(RF(_eval_at_one(f.numer) / den))
        return Scalar._raw(parts[0], parts[1])

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(QQ_I(0, 1))  # noqa: E741
W = Scalar(0, 1)


def r_power(k: int) -> Scalar:
    """Return r^k for any integer k."""
    if k >= 0:
        return Scalar._raw(_rf_pow(_R, k), RF.zero)
    return Scalar._raw(RF.one / _rf_pow(_R, -k), RF.zero)


def q_power(exponent: int | Fraction) -> Scalar:
    """Return q^exponent; 4*exponent must be an integer."""
    scaled = Fraction(exponent) * 4
    if scaled.denominator != 1:
        raise ValueError(f"q^{exponent} is not in the coefficient field")
    return r_power(int(scaled))


R = r_power(1)
Q = q_power(1)
S = q_power(Fraction(1, 2))
LAMBDA = Q - Q.inverse()
ETA = W / R


@lru_cache(maxsize=256)
def qint(n: int) -> Scalar:
    """q-integer [n] = (r^(2n) - r^(-2n)) / (r^2 - r^(-2))."""
    return (r_power(2 * n) - r_power(-2 * n)) / (r_power(2) - r_power(-2))


# ---------------------------------------------------------------------------
# Canonical text rendering
# ---------------------------------------------------------------------------


def _as_fraction(x: Any) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _plain(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _magnitude(f: Fraction) -> str:
    """Coefficient magnitude text; empty for 1."""
    if f == 1:
        return ""
    if f.denominator == 1:
        return str(f.numerator)
    return f"({f.numerator}/{f.denominator})"


def _term_text(c: Any, k: int) -> tuple[bool, str]:
    """Render c*r^k as (negative, body) with c in Q(i)."""
    x, y = _as_fraction(c.x), _as_fraction(c.y)
    if y == 0:
        negative = x < 0
        coef = _magnitude(abs(x))
    elif x == 0:
        negative = y < 0
        m = _magnitude(abs(y))
        coef = f"{m}*i" if m else "i"
    else:
        negative = False
        imag = "i" if abs(y) == 1 else f"{_plain(abs(y))}*i"
        sign = "-" if y < 0 else "+"
        coef = f"({_plain(x)} {sign} {imag})"
    mono = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
    body = "*".join(part for part in (coef, mono) if part)
    return negative, body or "1"


def _join(pieces: list[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for idx, (negative, body) in enumerate(pieces):
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _poly_pieces(p: Any, shift: int = 0, scale: Any = None) -> list[tuple[bool, str]]:
    items = sorted(p.items(), key=lambda kv: -kv[0][0])
    pieces = []
    for (e,), c in items:
        coeff = c / scale if scale is not None else c
        pieces.append(_term_text(coeff, e - shift))
    return pieces


def _rf_pieces(f: Any) -> list[tuple[bool, str]]:
    if not f:
        return []
    den = f.denom
    if len(den) == 1:
        ((e,), c), = den.items()
        return _poly_pieces(f.numer, shift=e, scale=c)
    num_text = _join(_poly_pieces(f.numer))
    den_text = _join(_poly_pieces(den))
    return [(False, f"({num_text})/({den_text})")]


def monomial_parts(x: Scalar) -> tuple[bool, str] | None:
    """Return (negative, body) when ``x`` renders as a single term, else None."""
    if x.part1:
        if x.part0:
            return None
        pieces = _rf_pieces(x.part1)
        if len(pieces) != 1:
            return None
        negative, body = pieces[0]
        return negative, "w" if body == "1" else f"{body}*w"
    pieces = _rf_pieces(x.part0)
    if len(pieces) != 1:
        return None
    return pieces[0]


def format_scalar(x: Scalar) -> str:
    """Canonical text, e.g. ``(1/2)*r^-2 + i*w``."""
    pieces = _rf_pieces(x.part0)
    w_pieces = _rf_pieces(x.part1)
    if len(w_pieces) == 1:
        negative, body = w_pieces[0]
        pieces.append((negative, "w" if body == "1" else f"{body}*w"))
    elif w_pieces:
        pieces.append((False, f"({_join(w_pieces)})*w"))
    return _join(pieces)
