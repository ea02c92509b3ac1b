"""Rewriting engine: normal forms, critical pairs and bounded ideal membership.

A :class:`RewriteSystem` orients each relation as ``lhs -> rhs`` with every
word of ``rhs`` strictly below ``lhs`` in the weighted degree-lexicographic
order of the alphabet. Normal forms are computed largest word first, so each
intermediate word is rewritten exactly once with its fully collected
coefficient.
"""

from __future__ import annotations

import heapq
import logging
import random
import threading
from collections import Counter
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import Any

from qorth.errors import AlgebraError
from qorth.freealg import EMPTY, Alphabet, NcPoly, Word, linear_combination
from qorth.linalg import SemiEchelon
from qorth.scalar import ONE, ZERO, Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    """Reduction rule ``lhs -> rhs``."""

    lhs: Word
    rhs: NcPoly


def order_key(alphabet: Alphabet, word: Word) -> tuple[int, Word]:
    """Weighted degree first, then lexicographic in the alphabet order."""
    return (alphabet.weighted_degree(word), word)


class RewriteSystem:
    """Ordered rule list over one alphabet with a cached word normal form."""

    def __init__(
        self, alphabet: Alphabet, rules: Iterable[Rule], name: str = ""
    ) -> None:
        self.alphabet = alphabet
        self.name = name or alphabet.name
        self.rules: tuple[Rule, ...] = tuple(rules)
        seen: set[Word] = set()
        for idx, rule in enumerate(self.rules):
            if not rule.lhs:
                raise AlgebraError(
                    f"{self.name}: rule {idx} has an empty left-hand side"
                )
            if rule.lhs in seen:
                lhs = alphabet.word_text(rule.lhs)
                raise AlgebraError(f"{self.name}: duplicate left-hand side {lhs}")
            seen.add(rule.lhs)
            top = order_key(alphabet, rule.lhs)
            for w in rule.rhs.terms:
                if order_key(alphabet, w) >= top:
                    raise AlgebraError(
                        f"{self.name}: rule {alphabet.word_text(rule.lhs)} -> "
                        f"{rule.rhs} is not decreasing",
                        code="ALGEBRA_RULE_NOT_DECREASING",
                    )
        self._by_first: dict[int, list[int]] = {}
        for idx, rule in enumerate(self.rules):
            self._by_first.setdefault(rule.lhs[0], []).append(idx)
        self._nf_cache: dict[Word, NcPoly] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_text(
        cls, alphabet: Alphabet, rules: Sequence[tuple[str, str]], name: str = ""
    ) -> RewriteSystem:
        """Build from ``("x2*x1", "q^-1*x1*x2")`` style pairs."""
        from qorth.expr import parse_poly

        built = []
        for lhs_text, rhs_text in rules:
            lhs = parse_poly(lhs_text, alphabet)
            ((word, coeff),) = lhs.terms.items()
            if coeff != ONE:
                raise AlgebraError(
                    f"Rule left-hand side {lhs_text!r} must be a bare word"
                )
            built.append(Rule(word, parse_poly(rhs_text, alphabet)))
        return cls(alphabet, built, name)

    def __repr__(self) -> str:
        return f"RewriteSystem({self.name!r}, {len(self.rules)} rules)"

    def find_match(self, word: Word) -> tuple[int, int] | None:
        """Leftmost position, then lowest rule index: (position, rule index)."""
        for pos, g in enumerate(word):
            for idx in self._by_first.get(g, ()):
                lhs = self.rules[idx].lhs
                if word[pos : pos + len(lhs)] == lhs:
                    return pos, idx
        return None

    def all_matches(self, word: Word) -> list[tuple[int, int]]:
        out = []
        for pos, g in enumerate(word):
            for idx in self._by_first.get(g, ()):
                lhs = self.rules[idx].lhs
                if word[pos : pos + len(lhs)] == lhs:
                    out.append((pos, idx))
        return out

    def is_normal(self, word: Word) -> bool:
        return self.find_match(word) is None

    def _heap_key(self, word: Word) -> tuple[int, tuple[int, ...]]:
        return (-self.alphabet.weighted_degree(word), tuple(-g for g in word))

    def _collect(self, start: dict[Word, Scalar]) -> NcPoly:
        pending: dict[Word, Scalar] = dict(start)
        heap = [(self._heap_key(w), w) for w in pending]
        heapq.heapify(heap)
        result: dict[Word, Scalar] = {}
        while heap:
            _, word = heapq.heappop(heap)
            c = pending.pop(word, None)
            if c is None or not c:
                continue
            cached = self._nf_cache.get(word)
            if cached is not None:
                for w, v in cached.terms.items():
                    s = result.get(w)
                    result[w] = v * c if s is None else s + v * c
                continue
            match = self.find_match(word)
            if match is None:
                s = result.get(word)
                result[word] = c if s is None else s + c
                continue
            pos, idx = match
            rule = self.rules[idx]
            prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
            for w, v in rule.rhs.terms.items():
                nw = prefix + w + suffix
                s = pending.get(nw)
                if s is None:
                    pending[nw] = v * c
                    heapq.heappush(heap, (self._heap_key(nw), nw))
                else:
                    pending[nw] = s + v * c
        return NcPoly(self.alphabet, result)

    def reduce_word(self, word: Word) -> NcPoly:
        """Normal form of a single word, cached."""
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        nf = self._collect({word: ONE})
        with self._lock:
            self._nf_cache[word] = nf
        return nf

    def normal_form(self, p: NcPoly) -> NcPoly:
        if p.alphabet != self.alphabet:
            raise AlgebraError(
                f"{self.name}: polynomial over {p.alphabet.name!r}",
                code="ALGEBRA_MISMATCH",
            )
        return self._collect(dict(p.terms))

    __call__ = normal_form

    @property
    def cache_size(self) -> int:
        return len(self._nf_cache)


def normal_form(p: NcPoly, rs: RewriteSystem) -> NcPoly:
    return rs.normal_form(p)


class NaiveReducer:
    """Reference reducer rewriting a random match of a random reducible term.

    Shares no code path with :meth:`RewriteSystem.normal_form` beyond the rule
    list; agreement of the two is evidence of confluence.
    """

    def __init__(self, rs: RewriteSystem, seed: int = 0) -> None:
        self.rs = rs
        self._rng = random.Random(seed)

    def __call__(self, p: NcPoly) -> NcPoly:
        terms: dict[Word, Scalar] = dict(p.terms)
        while True:
            reducible = sorted(w for w in terms if self.rs.all_matches(w))
            if not reducible:
                return NcPoly(self.rs.alphabet, terms)
            word = self._rng.choice(reducible)
            pos, idx = self._rng.choice(self.rs.all_matches(word))
            c = terms.pop(word)
            rule = self.rs.rules[idx]
            for w, v in rule.rhs.terms.items():
                nw = word[:pos] + w + word[pos + len(rule.lhs) :]
                nv = terms.get(nw, ZERO) + v * c
                if nv:
                    terms[nw] = nv
                else:
                    terms.pop(nw, None)


# ---------------------------------------------------------------------------
# Critical pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CriticalPair:
    """An ambiguity whose two resolutions do not meet."""

    word: Word
    rule_a: int
    rule_b: int
    residual: NcPoly

    def describe(self, alphabet: Alphabet) -> str:
        return (
            f"{alphabet.word_text(self.word)} (rules {self.rule_a}, {self.rule_b}): "
            f"{self.residual}"
        )


Ambiguity = tuple[Word, int, int, NcPoly, NcPoly]


def _ambiguities(rs: RewriteSystem, max_degree: int) -> Iterable[Ambiguity]:
    alpha = rs.alphabet
    for i, ri in enumerate(rs.rules):
        for j, rj in enumerate(rs.rules):
            li, lj = ri.lhs, rj.lhs
            # overlaps: suffix of li equals prefix of lj
            for k in range(1, min(len(li), len(lj))):
                if li[-k:] != lj[:k]:
                    continue
                word = li + lj[k:]
                if len(word) > max_degree:
                    continue
                left = ri.rhs * NcPoly.monomial(alpha, lj[k:])
                right = NcPoly.monomial(alpha, li[:-k]) * rj.rhs
                yield word, i, j, left, right
            # inclusions: lj strictly inside li
            if i != j and len(lj) <= len(li) and len(li) <= max_degree:
                for pos in range(len(li) - len(lj) + 1):
                    if li[pos : pos + len(lj)] != lj:
                        continue
                    inner = (
                        NcPoly.monomial(alpha, li[:pos])
                        * rj.rhs
                        * NcPoly.monomial(alpha, li[pos + len(lj) :])
                    )
                    yield li, i, j, ri.rhs, inner


def check_confluence(
    rs: RewriteSystem, max_overlap_degree: int = 4
) -> list[CriticalPair]:
    """Resolve every overlap and inclusion up to the bound; return the failures."""
    failures: list[CriticalPair] = []
    checked = 0
    for word, i, j, left, right in _ambiguities(rs, max_overlap_degree):
        checked += 1
        residual = rs.normal_form(left - right)
        if residual:
            failures.append(CriticalPair(word, i, j, residual))
    logger.debug(
        "%s: %d ambiguities checked, %d unresolved", rs.name, checked, len(failures)
    )
    return failures


# ---------------------------------------------------------------------------
# Bounded ideal membership
# ---------------------------------------------------------------------------

Grading = Callable[[Word], Hashable]
CertificateTerm = tuple[int, Word, Word, Scalar]


@dataclass(frozen=True)
class MembershipProblem:
    relations: tuple[NcPoly, ...]
    target: NcPoly
    degree_bound: int | None = None
    grading: Grading | None = None

    @property
    def bound(self) -> int:
        if self.degree_bound is not None:
            return self.degree_bound
        return max(self.target.degree(), 0) + 1


@dataclass
class MembershipResult:
    member: bool
    certificate: list[CertificateTerm] = field(default_factory=list)
    inconclusive: bool = False
    diagnostic: str = ""

    def to_dict(self, alphabet: Alphabet) -> dict[str, object]:
        return {
            "member": self.member,
            "diagnostic": self.diagnostic,
            "certificate": [
                {
                    "relation": idx,
                    "left": alphabet.word_text(left),
                    "right": alphabet.word_text(right),
                    "coefficient": str(c),
                }
                for idx, left, right, c in self.certificate
            ],
        }


def _proportional(target: NcPoly, rel: NcPoly) -> Scalar | None:
    if len(target) != len(rel) or not rel:
        return None
    word, c0 = next(iter(rel.terms.items()))
    t0 = target.terms.get(word)
    if t0 is None:
        return None
    ratio = t0 / c0
    return ratio if rel.scale(ratio) == target else None


def _words(alphabet: Alphabet, length: int) -> Iterable[Word]:
    return product(range(len(alphabet)), repeat=length)


def _grade_of(grading: Grading, p: NcPoly) -> Hashable:
    grades = {grading(w) for w in p.terms}
    if len(grades) != 1:
        raise AlgebraError("Relation is not homogeneous for the chosen grading")
    return grades.pop()


def _add_tuples(a: Any, b: Any) -> Hashable:
    return tuple(x + y for x, y in zip(a, b))


class IdealSpan:
    """Degree-bounded span of {m1 * g * m2} for a fixed relation list.

    When a grading is given (an additive word function that makes every
    relation homogeneous), only products in the target's grade are generated.
    Echelon forms are cached per grade.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        relations: Sequence[NcPoly],
        degree_bound: int,
        grading: Grading | None = None,
        add_grades: Callable[[Hashable, Hashable], Hashable] | None = None,
    ) -> None:
        self.alphabet = alphabet
        self.relations = tuple(r for r in relations if r)
        self.degree_bound = degree_bound
        self.grading = grading
        self._add = add_grades or _add_tuples
        self._rel_grades = (
            [_grade_of(grading, r) for r in self.relations] if grading else None
        )
        self._cache: dict[Hashable, SemiEchelon] = {}
        self._lock = threading.Lock()

    def _in_grade(self, left: Word, idx: int, right: Word, grade: Hashable) -> bool:
        if self.grading is None or self._rel_grades is None:
            return True
        inner = self._add(self.grading(left), self._rel_grades[idx])
        return self._add(inner, self.grading(right)) == grade

    def _echelon(self, grade: Hashable) -> SemiEchelon:
        with self._lock:
            hit = self._cache.get(grade)
            if hit is not None:
                return hit
            rows: list[tuple[tuple[int, Word, Word], dict[Word, Scalar]]] = []
            counts: Counter[Word] = Counter()
            for idx, rel in enumerate(self.relations):
                room = self.degree_bound - rel.degree()
                for total in range(room + 1):
                    for split in range(total + 1):
                        for left in _words(self.alphabet, split):
                            for right in _words(self.alphabet, total - split):
                                if not self._in_grade(left, idx, right, grade):
                                    continue
                                row = {
                                    left + w + right: c for w, c in rel.terms.items()
                                }
                                rows.append(((idx, left, right), row))
                                counts.update(row.keys())
            ech = SemiEchelon(
                counts, lambda w: (self.alphabet.weighted_degree(w), w), track=True
            )
            for tag, row in rows:
                ech.add(row, tag)
            logger.debug(
                "ideal span grade=%s: %d products, rank %d, %d columns",
                grade,
                len(rows),
                ech.rank,
                len(counts),
            )
            self._cache[grade] = ech
            return ech

    def member(self, target: NcPoly) -> MembershipResult:
        if not target:
            return MembershipResult(True)
        for idx, rel in enumerate(self.relations):
            ratio = _proportional(target, rel)
            if ratio is not None:
                return MembershipResult(True, [(idx, EMPTY, EMPTY, ratio)])
        if target.degree() > self.degree_bound:
            return MembershipResult(
                False,
                inconclusive=True,
                diagnostic=f"inconclusive at bound {self.degree_bound}",
            )
        if self.grading is None:
            grades: list[Hashable] = [None]
            parts = {None: target}
        else:
            parts = {}
            for w, c in target.terms.items():
                g = self.grading(w)
                parts.setdefault(g, NcPoly.zero(self.alphabet))
                parts[g] = parts[g] + NcPoly.monomial(self.alphabet, w, c)
            grades = sorted(parts, key=repr)
        certificate: list[CertificateTerm] = []
        for g in grades:
            combo = self._echelon(g).express(dict(parts[g].terms))
            if combo is None:
                return MembershipResult(
                    False,
                    inconclusive=True,
                    diagnostic=f"inconclusive at bound {self.degree_bound}",
                )
            certificate.extend(
                (idx, left, right, c)
                for (idx, left, right), c in sorted(combo.items(), key=lambda kv: kv[0])
            )
        return MembershipResult(True, certificate)

    def replay(self, certificate: Sequence[CertificateTerm]) -> NcPoly:
        """Recombine a certificate into the polynomial it certifies."""
        return linear_combination(
            self.alphabet,
            (
                (
                    c,
                    NcPoly.monomial(self.alphabet, left)
                    * self.relations[idx]
                    * NcPoly.monomial(self.alphabet, right),
                )
                for idx, left, right, c in certificate
            ),
        )


def ideal_member(mp: MembershipProblem) -> MembershipResult:
    """Decide target in the two-sided ideal up to the degree bound."""
    alphabet = mp.target.alphabet
    span = IdealSpan(alphabet, mp.relations, mp.bound, mp.grading)
    return span.member(mp.target)
