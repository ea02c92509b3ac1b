"""Tests for qorth.slq2 module."""

from __future__ import annotations

import pytest

from qorth.errors import VerificationError
from qorth.expr import parse_poly
from qorth.freealg import NcPoly
from qorth.rewrite import NaiveReducer, check_confluence
from qorth.scalar import ONE, ZERO, Q, Regime, S
from qorth.slq2 import (
    SL_ALPHABET,
    bc,
    mu_bc,
    mu_y2,
    sl_antipode,
    sl_counit,
    sl_hopf,
    sl_reduce,
    sl_star,
    sl_system,
    singular_trace,
)


def _p(text: str) -> NcPoly:
    return parse_poly(text, SL_ALPHABET)


class TestNormalForm:
    """Test the PBW normal form of O(SL_s(2))."""

    def test_determinant(self) -> None:
        assert str(sl_reduce(_p("a*d"))) == "1 + r^2*b*c"
        assert sl_reduce(_p("d*a")) == _p("1 + s^-1*b*c")

    @pytest.mark.parametrize(
        "relation",
        ["a*b - s*b*a", "a*c - s*c*a", "b*d - s*d*b", "c*d - s*d*c", "b*c - c*b"],
    )
    def test_relations_vanish(self, relation: str) -> None:
        assert not sl_reduce(_p(relation))

    def test_reordering(self) -> None:
        assert str(sl_reduce(_p("a*b"))) == "r^2*b*a"
        assert str(sl_reduce(_p("b*a"))) == "b*a"

    def test_confluent(self) -> None:
        assert check_confluence(sl_system(), 4) == []

    @pytest.mark.parametrize("text", ["b*a*d", "c*a*d", "a*d*b", "a*d*c", "d*a*b"])
    def test_elimination_across_middle_letters(self, text: str) -> None:
        assert sl_reduce(_p(text)) == NaiveReducer(sl_system(), seed=3)(_p(text))

    def test_product_of_all_generators(self) -> None:
        assert not sl_reduce(_p("a*b*c*d - s^2*b*c - s^3*b*c*b*c"))

    def test_normal_words_separate_a_and_d(self) -> None:
        for word in sl_reduce(_p("(a + d)^2*b*c*(a + d)")).terms:
            text = SL_ALPHABET.word_text(word)
            assert not ("a" in text and "d" in text)

    def test_quantum_determinant_in_both_orders(self) -> None:
        assert sl_reduce(_p("a*d - s*b*c")) == 1
        assert sl_reduce(_p("d*a - s^-1*c*b")) == 1


class TestHopf:
    """Test the Hopf structure."""

    def test_axioms_on_generators(self) -> None:
        hopf = sl_hopf()
        for sym in SL_ALPHABET.symbols:
            assert hopf.axiom_failures(NcPoly.gen(SL_ALPHABET, sym)) == []

    def test_axioms_on_product(self) -> None:
        assert sl_hopf().axiom_failures(_p("a*b*c")) == []

    def test_counit(self) -> None:
        assert sl_counit(_p("a*d + b")) == ONE
        assert sl_counit(bc()) == ZERO

    def test_antipode(self) -> None:
        assert sl_antipode(_p("a")) == _p("d")
        assert sl_antipode(_p("b")) == _p("-s^-1*b")


class TestStar:
    """Test the two star structures."""

    def test_q_real_involutive(self) -> None:
        star = sl_star(Regime.Q_REAL)
        for sym in SL_ALPHABET.symbols:
            g = NcPoly.gen(SL_ALPHABET, sym)
            assert star(star(g)) == g

    def test_q_real_preserves_determinant(self) -> None:
        star = sl_star(Regime.Q_REAL)
        assert not star(_p("a*d - s*b*c - 1"))

    def test_unimodular_reverses_products(self) -> None:
        star = sl_star(Regime.UNIMODULAR)
        assert star(_p("a*b")) == sl_reduce(_p("b*a"))
        assert not star(_p("a*b - s*b*a"))


class TestSingularTrace:
    """Test the trace on C[bc]."""

    def test_values(self) -> None:
        assert mu_bc(0) == ZERO
        assert mu_bc(1) == -S / (Q - 1)
        assert mu_bc(2) == S * S / (Q * Q - 1)
        assert singular_trace(bc()) == mu_bc(1)
        assert singular_trace(NcPoly.one(SL_ALPHABET)) == ZERO

    def test_linear(self) -> None:
        p = bc() * bc() + bc().scale(Q)
        assert singular_trace(p) == mu_bc(2) + Q * mu_bc(1)

    def test_reduces_first(self) -> None:
        assert singular_trace(_p("c*b")) == mu_bc(1)

    def test_domain_error(self) -> None:
        with pytest.raises(VerificationError) as exc_info:
            singular_trace(_p("a"))
        assert exc_info.value.code == "SINGULAR_TRACE_DOMAIN"

    def test_mu_y2_closed_form(self) -> None:
        assert mu_y2(1) == -(Q + 1) / (Q - 1)
        assert mu_y2(2) == (Q + 1) ** 2 / (Q * Q - 1)
