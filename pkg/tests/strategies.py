"""Hypothesis strategies for coefficient-field elements and polynomials."""

from __future__ import annotations

from hypothesis import strategies as st

from qorth.freealg import Alphabet, NcPoly, linear_combination
from qorth.scalar import ONE, ZERO, I, Scalar, W, r_power

# (integer coefficient, power of r, times i, times w)
_terms = st.tuples(
    st.integers(-3, 3), st.integers(-4, 4), st.booleans(), st.booleans()
)


@st.composite
def scalars(draw: st.DrawFn, max_terms: int = 3) -> Scalar:
    """Small elements of K: sums of c * r^k with optional i and w factors."""
    total = ZERO
    for c, k, imag, with_w in draw(st.lists(_terms, max_size=max_terms)):
        term = r_power(k) * c
        if imag:
            term = term * I
        if with_w:
            term = term * W
        total = total + term
    return total


nonzero_scalars = scalars().filter(bool)


@st.composite
def polys(
    draw: st.DrawFn, alphabet: Alphabet, max_terms: int = 3, max_len: int = 3
) -> NcPoly:
    """Sums of scalar multiples of short words over ``alphabet``."""
    words = st.lists(
        st.integers(0, len(alphabet) - 1), max_size=max_len
    ).map(tuple)
    pairs = draw(st.lists(st.tuples(scalars(max_terms=2), words), max_size=max_terms))
    return linear_combination(
        alphabet, ((c, NcPoly.monomial(alphabet, w, ONE)) for c, w in pairs)
    )
