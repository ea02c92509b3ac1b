"""Free noncommutative polynomials over the scalar field.

Words are tuples of generator indices into an :class:`Alphabet`. Polynomials,
tensor-square elements and matrices are immutable once built; arithmetic
returns new objects with zero coefficients dropped.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Union

from qorth.errors import AlgebraError, ShapeError
from qorth.scalar import ONE, ZERO, Regime, Scalar, format_scalar, monomial_parts

logger = logging.getLogger(__name__)

Word = tuple[int, ...]
ScalarLike = Union[Scalar, int]

EMPTY: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator symbols; the order drives monomial orders.

    ``weights`` are the per-generator degrees used by weighted monomial orders
    (1 for every generator unless given).
    """

    name: str
    symbols: tuple[str, ...]
    weights: tuple[int, ...] = ()
    _index: dict[str, int] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if len(set(self.symbols)) != len(self.symbols):
            raise AlgebraError(f"Alphabet {self.name!r} has repeated symbols")
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * len(self.symbols))
        elif len(self.weights) != len(self.symbols):
            raise AlgebraError(
                f"Alphabet {self.name!r}: one weight per symbol expected"
            )
        self._index.update({s: i for i, s in enumerate(self.symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AlgebraError(
                f"Generator {symbol!r} is not in alphabet {self.name!r}",
                suggestions=[f"Known generators: {', '.join(self.symbols)}"],
            ) from None

    def word(self, *symbols: str) -> Word:
        return tuple(self.index(s) for s in symbols)

    def weighted_degree(self, word: Word) -> int:
        return sum(self.weights[g] for g in word)

    def word_text(self, word: Word) -> str:
        """Render a word with runs compressed, e.g. ``a^2*b``."""
        if not word:
            return "1"
        parts: list[str] = []
        run_gen, run_len = word[0], 1
        for g in word[1:]:
            if g == run_gen:
                run_len += 1
                continue
            parts.append(self._run(run_gen, run_len))
            run_gen, run_len = g, 1
        parts.append(self._run(run_gen, run_len))
        return "*".join(parts)

    def _run(self, gen: int, length: int) -> str:
        sym = self.symbols[gen]
        return sym if length == 1 else f"{sym}^{length}"


def word_key(word: Word) -> tuple[int, Word]:
    """Deterministic display order: length, then lexicographic."""
    return (len(word), word)


def _check_alphabet(a: Alphabet, b: Alphabet) -> None:
    if a is not b and a != b:
        raise AlgebraError(
            f"Alphabet mismatch: {a.name!r} vs {b.name!r}", code="ALGEBRA_MISMATCH"
        )


def _as_scalar(c: ScalarLike) -> Scalar:
    return c if isinstance(c, Scalar) else Scalar(c)


class NcPoly:
    """Finite sum of Scalar-weighted words over one alphabet."""

    __slots__ = ("_terms", "alphabet")

    def __init__(
        self, alphabet: Alphabet, terms: Mapping[Word, Scalar] | None = None
    ) -> None:
        self.alphabet = alphabet
        self._terms: dict[Word, Scalar] = (
            {w: c for w, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def _wrap(cls, alphabet: Alphabet, terms: dict[Word, Scalar]) -> NcPoly:
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj._terms = terms
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> NcPoly:
        return cls._wrap(alphabet, {})

    @classmethod
    def one(cls, alphabet: Alphabet) -> NcPoly:
        return cls._wrap(alphabet, {EMPTY: ONE})

    @classmethod
    def constant(cls, alphabet: Alphabet, c: ScalarLike) -> NcPoly:
        c = _as_scalar(c)
        return cls._wrap(alphabet, {EMPTY: c} if c else {})

    @classmethod
    def monomial(cls, alphabet: Alphabet, word: Word, c: ScalarLike = 1) -> NcPoly:
        c = _as_scalar(c)
        return cls._wrap(alphabet, {tuple(word): c} if c else {})

    @classmethod
    def gen(cls, alphabet: Alphabet, symbol: str) -> NcPoly:
        return cls._wrap(alphabet, {(alphabet.index(symbol),): ONE})

    @classmethod
    def from_words(
        cls, alphabet: Alphabet, *symbols: str, coeff: ScalarLike = 1
    ) -> NcPoly:
        """Monomial ``coeff * s1 s2 ...`` from symbol names."""
        return cls.monomial(alphabet, alphabet.word(*symbols), coeff)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Word, Scalar]:
        return self._terms

    def items(self) -> list[tuple[Word, Scalar]]:
        """Terms in deterministic display order."""
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), ZERO)

    def constant_term(self) -> Scalar:
        return self._terms.get(EMPTY, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Maximal word length; -1 for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    def __iter__(self) -> Iterator[tuple[Word, Scalar]]:
        return iter(self._terms.items())

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: object) -> NcPoly | None:
        if isinstance(other, NcPoly):
            _check_alphabet(self.alphabet, other.alphabet)
            return other
        if isinstance(other, (Scalar, int)):
            return NcPoly.constant(self.alphabet, other)
        return None

    def __add__(self, other: object) -> NcPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for w, c in o._terms.items():
            s = terms.get(w)
            if s is None:
                terms[w] = c
            else:
                s = s + c
                if s:
                    terms[w] = s
                else:
                    del terms[w]
        return NcPoly._wrap(self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self) -> NcPoly:
        return NcPoly._wrap(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: object) -> NcPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> NcPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: ScalarLike) -> NcPoly:
        c = _as_scalar(c)
        if not c:
            return NcPoly.zero(self.alphabet)
        if c == ONE:
            return self
        return NcPoly._wrap(self.alphabet, {w: v * c for w, v in self._terms.items()})

    def __mul__(self, other: object) -> NcPoly:
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other: object) -> NcPoly:
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> NcPoly:
        if n < 0:
            raise AlgebraError("Negative powers of polynomials are not defined")
        result = NcPoly.one(self.alphabet)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Scalar, int)):
            other = NcPoly.constant(self.alphabet, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def map_coefficients(self, f: Callable[[Scalar], Scalar]) -> NcPoly:
        return NcPoly(self.alphabet, {w: f(c) for w, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"NcPoly({self.alphabet.name}: {format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    """Concatenation product, term-collected."""
    _check_alphabet(p.alphabet, q.alphabet)
    terms: dict[Word, Scalar] = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            w = w1 + w2
            c = c1 * c2
            s = terms.get(w)
            terms[w] = c if s is None else s + c
    return NcPoly(p.alphabet, terms)


def linear_combination(
    alphabet: Alphabet, pairs: Iterable[tuple[ScalarLike, NcPoly]]
) -> NcPoly:
    terms: dict[Word, Scalar] = {}
    for c, p in pairs:
        c = _as_scalar(c)
        if not c:
            continue
        _check_alphabet(alphabet, p.alphabet)
        for w, v in p.terms.items():
            s = terms.get(w)
            terms[w] = v * c if s is None else s + v * c
    return NcPoly(alphabet, terms)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def format_poly(p: NcPoly) -> str:
    """Canonical text, e.g. ``1 + r^2*b*c``."""
    if not p:
        return "0"
    out: list[str] = []
    for idx, (word, c) in enumerate(p.items()):
        mono = p.alphabet.word_text(word) if word else ""
        single = monomial_parts(c)
        if single is not None:
            negative, body = single
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
        else:
            negative = False
            body = f"({format_scalar(c)})" + (f"*{mono}" if mono else "")
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# Homomorphisms and star maps
# ---------------------------------------------------------------------------

Reducer = Callable[[NcPoly], NcPoly]


class Homomorphism:
    """Algebra map defined on generators, extended multiplicatively.

    Images of words are cached by prefix: image(w) = reduce(image(w[:-1]) * g).
    """

    def __init__(
        self,
        source: Alphabet,
        target: Alphabet,
        images: Mapping[str, NcPoly],
        reducer: Reducer | None = None,
    ) -> None:
        missing = [s for s in source.symbols if s not in images]
        if missing:
            raise AlgebraError(f"Homomorphism undefined on {', '.join(missing)}")
        self.source = source
        self.target = target
        self._images = tuple(images[s] for s in source.symbols)
        for img in self._images:
            _check_alphabet(target, img.alphabet)
        self._reduce = reducer or (lambda p: p)
        self._cache: dict[Word, NcPoly] = {EMPTY: NcPoly.one(target)}

    def word_image(self, word: Word) -> NcPoly:
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        img = self._reduce(self.word_image(word[:-1]) * self._images[word[-1]])
        self._cache[word] = img
        return img

    def __call__(self, p: NcPoly) -> NcPoly:
        _check_alphabet(self.source, p.alphabet)
        return linear_combination(
            self.target, ((c, self.word_image(w)) for w, c in p.terms.items())
        )


class StarMap:
    """Antilinear anti-automorphism fixed by generator images and a regime."""

    def __init__(
        self,
        alphabet: Alphabet,
        images: Mapping[str, NcPoly],
        regime: Regime,
        reducer: Reducer | None = None,
    ) -> None:
        missing = [s for s in alphabet.symbols if s not in images]
        if missing:
            raise AlgebraError(
                f"Star map undefined on {', '.join(missing)}",
                suggestions=["Give an image for every generator of the alphabet"],
            )
        self.alphabet = alphabet
        self.regime = regime
        self._images = tuple(images[s] for s in alphabet.symbols)
        self._reduce = reducer or (lambda p: p)
        self._cache: dict[Word, NcPoly] = {EMPTY: NcPoly.one(alphabet)}

    def word_image(self, word: Word) -> NcPoly:
        """(g1 ... gn)* = gn* ... g1*."""
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        img = self._reduce(self._images[word[-1]] * self.word_image(word[:-1]))
        self._cache[word] = img
        return img

    def __call__(self, p: NcPoly) -> NcPoly:
        _check_alphabet(self.alphabet, p.alphabet)
        return linear_combination(
            self.alphabet,
            (
                (c.conjugate(self.regime), self.word_image(w))
                for w, c in p.terms.items()
            ),
        )


def star(p: NcPoly, genmap: Mapping[str, NcPoly], regime: Regime) -> NcPoly:
    """Apply the star structure given by ``genmap`` in ``regime``."""
    return StarMap(p.alphabet, genmap, regime)(p)


# ---------------------------------------------------------------------------
# Tensor squares
# ---------------------------------------------------------------------------


class Tensor2:
    """Finite sum of Scalar-weighted pairs of words, an element of A (x) B."""

    __slots__ = ("_terms", "left", "right")

    def __init__(
        self,
        left: Alphabet,
        right: Alphabet,
        terms: Mapping[tuple[Word, Word], Scalar] | None = None,
    ) -> None:
        self.left = left
        self.right = right
        self._terms: dict[tuple[Word, Word], Scalar] = (
            {k: c for k, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def pure(cls, a: NcPoly, b: NcPoly) -> Tensor2:
        """a (x) b."""
        terms: dict[tuple[Word, Word], Scalar] = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                terms[(w1, w2)] = c1 * c2
        return cls(a.alphabet, b.alphabet, terms)

    @classmethod
    def zero(cls, left: Alphabet, right: Alphabet) -> Tensor2:
        return cls(left, right)

    @classmethod
    def one(cls, left: Alphabet, right: Alphabet) -> Tensor2:
        return cls(left, right, {(EMPTY, EMPTY): ONE})

    @property
    def terms(self) -> Mapping[tuple[Word, Word], Scalar]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: Tensor2) -> None:
        _check_alphabet(self.left, other.left)
        _check_alphabet(self.right, other.right)

    def __add__(self, other: Tensor2) -> Tensor2:
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k)
            terms[k] = c if s is None else s + c
        return Tensor2(self.left, self.right, terms)

    def __neg__(self) -> Tensor2:
        return Tensor2(self.left, self.right, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Tensor2) -> Tensor2:
        return self + (-other)

    def scale(self, c: ScalarLike) -> Tensor2:
        c = _as_scalar(c)
        terms = {k: v * c for k, v in self._terms.items()}
        return Tensor2(self.left, self.right, terms)

    def __mul__(self, other: Tensor2) -> Tensor2:
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd."""
        self._check(other)
        terms: dict[tuple[Word, Word], Scalar] = {}
        for (l1, r1), c1 in self._terms.items():
            for (l2, r2), c2 in other._terms.items():
                k = (l1 + l2, r1 + r2)
                c = c1 * c2
                s = terms.get(k)
                terms[k] = c if s is None else s + c
        return Tensor2(self.left, self.right, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return (
            self.left == other.left
            and self.right == other.right
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def map_legs(
        self,
        left_map: Callable[[NcPoly], NcPoly] | None = None,
        right_map: Callable[[NcPoly], NcPoly] | None = None,
        *,
        left_target: Alphabet | None = None,
        right_target: Alphabet | None = None,
    ) -> Tensor2:
        """Apply linear maps to each leg and recollect.

        Each map is evaluated once per distinct word. ``left_target`` and
        ``right_target`` name the codomain alphabets when a map changes them.
        """
        lcache: dict[Word, NcPoly] = {}
        rcache: dict[Word, NcPoly] = {}
        acc: dict[tuple[Word, Word], Scalar] = {}
        left_alpha = left_target or self.left
        right_alpha = right_target or self.right
        for (lw, rw), c in self._terms.items():
            lp = lcache.get(lw)
            if lp is None:
                lp = NcPoly.monomial(self.left, lw)
                lp = left_map(lp) if left_map else lp
                lcache[lw] = lp
            rp = rcache.get(rw)
            if rp is None:
                rp = NcPoly.monomial(self.right, rw)
                rp = right_map(rp) if right_map else rp
                rcache[rw] = rp
            left_alpha, right_alpha = lp.alphabet, rp.alphabet
            for w1, c1 in lp.terms.items():
                for w2, c2 in rp.terms.items():
                    k = (w1, w2)
                    v = c * c1 * c2
                    s = acc.get(k)
                    acc[k] = v if s is None else s + v
        return Tensor2(left_alpha, right_alpha, acc)

    def contract(
        self, pairing: Callable[[Word, Word], NcPoly], alphabet: Alphabet
    ) -> NcPoly:
        """Sum c * pairing(left, right) over the terms."""
        return linear_combination(
            alphabet, ((c, pairing(lw, rw)) for (lw, rw), c in self._terms.items())
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (lw, rw), c in sorted(
            self._terms.items(), key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1]))
        ):
            left, right = self.left.word_text(lw), self.right.word_text(rw)
            parts.append(f"({format_scalar(c)})*{left} (x) {right}")
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class NcMatrix:
    """Rectangular matrix of NcPoly entries, 0-based indices."""

    __slots__ = ("alphabet", "cols", "entries", "rows")

    def __init__(self, alphabet: Alphabet, entries: Sequence[Sequence[NcPoly]]) -> None:
        self.alphabet = alphabet
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise ShapeError(
                "NcMatrix rows have different lengths", code="SHAPE_MISMATCH"
            )
        self.entries: tuple[tuple[NcPoly, ...], ...] = tuple(map(tuple, entries))

    @classmethod
    def identity(cls, alphabet: Alphabet, n: int) -> NcMatrix:
        zero = NcPoly.zero(alphabet)
        one = NcPoly.one(alphabet)
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(alphabet, rows)

    @classmethod
    def column(cls, alphabet: Alphabet, items: Sequence[NcPoly]) -> NcMatrix:
        return cls(alphabet, [[p] for p in items])

    @classmethod
    def row(cls, alphabet: Alphabet, items: Sequence[NcPoly]) -> NcMatrix:
        return cls(alphabet, [list(items)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> NcPoly:
        i, j = idx
        return self.entries[i][j]

    def transpose(self) -> NcMatrix:
        return NcMatrix(self.alphabet, [list(col) for col in zip(*self.entries)])

    def apply_entrywise(self, f: Callable[[NcPoly], NcPoly]) -> NcMatrix:
        return apply_entrywise(self, f)

    def __matmul__(self, other: NcMatrix) -> NcMatrix:
        return matrix_mul(self, other)

    def __sub__(self, other: NcMatrix) -> NcMatrix:
        if self.shape != other.shape:
            raise ShapeError(
                f"Cannot subtract {other.shape} from {self.shape}",
                code="SHAPE_MISMATCH",
            )
        return NcMatrix(
            self.alphabet,
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __str__(self) -> str:
        rows = ("[" + ", ".join(str(p) for p in row) + "]" for row in self.entries)
        return "\n".join(rows)


def matrix_mul(a: NcMatrix, b: NcMatrix, reducer: Reducer | None = None) -> NcMatrix:
    """Matrix product with entry products taken A-entry times B-entry."""
    if a.cols != b.rows:
        raise ShapeError(
            f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}",
            code="SHAPE_MISMATCH",
        )
    _check_alphabet(a.alphabet, b.alphabet)
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = NcPoly.zero(a.alphabet)
            for k in range(a.cols):
                acc = acc + a.entries[i][k] * b.entries[k][j]
            row.append(reducer(acc) if reducer else acc)
        out.append(row)
    return NcMatrix(a.alphabet, out)


def apply_entrywise(a: NcMatrix, f: Callable[[NcPoly], NcPoly]) -> NcMatrix:
    entries = [[f(p) for p in row] for row in a.entries]
    alphabet = entries[0][0].alphabet if entries and entries[0] else a.alphabet
    return NcMatrix(alphabet, entries)
