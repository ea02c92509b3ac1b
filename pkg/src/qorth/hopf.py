"""Hopf structure maps defined on generators.

Coproducts are extended multiplicatively, antipodes anti-multiplicatively and
counits as characters. All images are reduced with the algebra's normal form
so that residuals of the Hopf axioms can be tested for exact zero.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass

from qorth.errors import AlgebraError
from qorth.freealg import (
    EMPTY,
    Alphabet,
    NcPoly,
    Reducer,
    Tensor2,
    Word,
    linear_combination,
)
from qorth.scalar import ONE, ZERO, Scalar

logger = logging.getLogger(__name__)

Triple = dict[tuple[Word, Word, Word], Scalar]


def _identity(p: NcPoly) -> NcPoly:
    return p


class Coproduct:
    """Algebra map A -> A (x) A given on generators.

    Word images are cached by prefix and reduced legwise after every product.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        table: Mapping[str, Tensor2],
        reducer: Reducer | None = None,
    ) -> None:
        missing = [s for s in alphabet.symbols if s not in table]
        if missing:
            raise AlgebraError(f"Coproduct undefined on {', '.join(missing)}")
        self.alphabet = alphabet
        self._reduce = reducer or _identity
        self._table = tuple(self.reduce_legs(table[s]) for s in alphabet.symbols)
        self._cache: dict[Word, Tensor2] = {EMPTY: Tensor2.one(alphabet, alphabet)}

    def reduce_legs(self, t: Tensor2) -> Tensor2:
        return t.map_legs(self._reduce, self._reduce)

    def word_image(self, word: Word) -> Tensor2:
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        img = self.reduce_legs(self.word_image(word[:-1]) * self._table[word[-1]])
        self._cache[word] = img
        return img

    def __call__(self, p: NcPoly) -> Tensor2:
        acc = Tensor2.zero(self.alphabet, self.alphabet)
        for w, c in p.terms.items():
            acc = acc + self.word_image(w).scale(c)
        return acc


class Counit:
    """Character A -> K given on generators."""

    def __init__(self, alphabet: Alphabet, values: Mapping[str, Scalar | int]) -> None:
        self.alphabet = alphabet
        self._values = tuple(
            v if isinstance(v, Scalar) else Scalar(v)
            for v in (values[s] for s in alphabet.symbols)
        )

    def word_value(self, word: Word) -> Scalar:
        acc = ONE
        for g in word:
            acc = acc * self._values[g]
            if not acc:
                return ZERO
        return acc

    def __call__(self, p: NcPoly) -> Scalar:
        total = ZERO
        for w, c in p.terms.items():
            total = total + c * self.word_value(w)
        return total


class AntiHomomorphism:
    """Linear map with (g1 ... gn) -> f(gn) ... f(g1)."""

    def __init__(
        self,
        alphabet: Alphabet,
        images: Mapping[str, NcPoly],
        reducer: Reducer | None = None,
    ) -> None:
        missing = [s for s in alphabet.symbols if s not in images]
        if missing:
            raise AlgebraError(f"Antipode undefined on {', '.join(missing)}")
        self.alphabet = alphabet
        self._images = tuple(images[s] for s in alphabet.symbols)
        self._reduce = reducer or _identity
        self._cache: dict[Word, NcPoly] = {EMPTY: NcPoly.one(alphabet)}

    def word_image(self, word: Word) -> NcPoly:
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        img = self._reduce(self._images[word[-1]] * self.word_image(word[:-1]))
        self._cache[word] = img
        return img

    def __call__(self, p: NcPoly) -> NcPoly:
        return linear_combination(
            self.alphabet, ((c, self.word_image(w)) for w, c in p.terms.items())
        )


@dataclass
class HopfMaps:
    """Coproduct, counit and antipode of one algebra plus its normal form."""

    alphabet: Alphabet
    coproduct: Coproduct
    counit: Counit
    antipode: AntiHomomorphism
    reduce: Reducer

    def _apply_left(self, t: Tensor2, f: Callable[[Word], Tensor2]) -> Triple:
        out: Triple = {}
        for (lw, rw), c in t.terms.items():
            for (a, b), v in f(lw).terms.items():
                _accumulate(out, (a, b, rw), c * v)
        return out

    def _apply_right(self, t: Tensor2, f: Callable[[Word], Tensor2]) -> Triple:
        out: Triple = {}
        for (lw, rw), c in t.terms.items():
            for (a, b), v in f(rw).terms.items():
                _accumulate(out, (lw, a, b), c * v)
        return out

    def coassociativity_residual(self, p: NcPoly) -> Triple:
        """(Delta (x) id) Delta p - (id (x) Delta) Delta p as word triples."""
        d = self.coproduct(p)
        left = self._apply_left(d, self.coproduct.word_image)
        right = self._apply_right(d, self.coproduct.word_image)
        for k, v in right.items():
            _accumulate(left, k, -v)
        return left

    def counit_residuals(self, p: NcPoly) -> tuple[NcPoly, NcPoly]:
        """(eps (x) id) Delta p - p and (id (x) eps) Delta p - p."""
        d = self.coproduct(p)
        left = linear_combination(
            self.alphabet,
            (
                (c * self.counit.word_value(lw), NcPoly.monomial(self.alphabet, rw))
                for (lw, rw), c in d.terms.items()
            ),
        )
        right = linear_combination(
            self.alphabet,
            (
                (c * self.counit.word_value(rw), NcPoly.monomial(self.alphabet, lw))
                for (lw, rw), c in d.terms.items()
            ),
        )
        p = self.reduce(p)
        return left - p, right - p

    def antipode_residuals(self, p: NcPoly) -> tuple[NcPoly, NcPoly]:
        """m(S (x) id) Delta p - eps(p) and m(id (x) S) Delta p - eps(p)."""
        d = self.coproduct(p)
        unit = NcPoly.constant(self.alphabet, self.counit(p))
        left = linear_combination(
            self.alphabet,
            (
                (c, self.antipode.word_image(lw) * NcPoly.monomial(self.alphabet, rw))
                for (lw, rw), c in d.terms.items()
            ),
        )
        right = linear_combination(
            self.alphabet,
            (
                (c, NcPoly.monomial(self.alphabet, lw) * self.antipode.word_image(rw))
                for (lw, rw), c in d.terms.items()
            ),
        )
        return self.reduce(left) - unit, self.reduce(right) - unit

    def axiom_failures(self, p: NcPoly) -> list[str]:
        """Names of the Hopf axioms that fail on ``p``."""
        failures = []
        if self.coassociativity_residual(p):
            failures.append("coassociativity")
        if any(self.counit_residuals(p)):
            failures.append("counit")
        if any(self.antipode_residuals(p)):
            failures.append("antipode")
        return failures


def _accumulate(out: Triple, key: tuple[Word, Word, Word], value: Scalar) -> None:
    s = out.get(key)
    nv = value if s is None else s + value
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def matrix_coproduct(alphabet: Alphabet, n: int) -> dict[str, Tensor2]:
    """Delta(u_ij) = sum_k u_ik (x) u_kj for an n x n generator matrix."""
    table = {}
    for i in range(n):
        for j in range(n):
            terms = {((i * n + k,), (k * n + j,)): ONE for k in range(n)}
            table[alphabet.symbols[i * n + j]] = Tensor2(alphabet, alphabet, terms)
    return table
