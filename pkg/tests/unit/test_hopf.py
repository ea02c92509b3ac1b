"""Tests for qorth.hopf module."""

from __future__ import annotations

import pytest

from qorth.errors import AlgebraError
from qorth.freealg import Alphabet, NcPoly, Tensor2
from qorth.hopf import AntiHomomorphism, Coproduct, Counit, HopfMaps, matrix_coproduct

X = Alphabet("line", ("x",))


def _x() -> NcPoly:
    return NcPoly.gen(X, "x")


def _line(antipode_sign: int = -1) -> HopfMaps:
    """Polynomials in one primitive generator."""
    one = NcPoly.one(X)
    coproduct = Coproduct(X, {"x": Tensor2.pure(_x(), one) + Tensor2.pure(one, _x())})
    antipode = AntiHomomorphism(X, {"x": _x().scale(antipode_sign)})
    return HopfMaps(X, coproduct, Counit(X, {"x": 0}), antipode, lambda p: p)


class TestCoproduct:
    """Test multiplicative extension of the coproduct."""

    def test_square_of_primitive(self) -> None:
        hopf = _line()
        one = NcPoly.one(X)
        expected = (
            Tensor2.pure(_x() * _x(), one)
            + Tensor2.pure(_x(), _x()).scale(2)
            + Tensor2.pure(one, _x() * _x())
        )
        assert hopf.coproduct(_x() * _x()) == expected

    def test_missing_generator(self) -> None:
        with pytest.raises(AlgebraError, match="undefined"):
            Coproduct(X, {})

    def test_matrix_coproduct(self) -> None:
        u = Alphabet("u", ("u11", "u12", "u21", "u22"))
        table = matrix_coproduct(u, 2)
        g = {s: NcPoly.gen(u, s) for s in u.symbols}
        assert table["u12"] == Tensor2.pure(g["u11"], g["u12"]) + Tensor2.pure(
            g["u12"], g["u22"]
        )


class TestCounitAntipode:
    """Test characters and anti-multiplicative maps."""

    def test_counit_is_character(self) -> None:
        counit = Counit(X, {"x": 3})
        assert counit(_x() * _x() + 1) == 10

    def test_antipode_reverses(self) -> None:
        ab = Alphabet("ab", ("a", "b"))
        a, b = NcPoly.gen(ab, "a"), NcPoly.gen(ab, "b")
        anti = AntiHomomorphism(ab, {"a": a, "b": b})
        assert anti(a * b * b) == b * b * a


class TestAxioms:
    """Test the Hopf axiom residuals."""

    def test_primitive_line_is_hopf(self) -> None:
        hopf = _line()
        for p in (_x(), _x() * _x(), _x() * _x() * _x() + 2):
            assert hopf.axiom_failures(p) == []

    def test_wrong_antipode_detected(self) -> None:
        assert _line(antipode_sign=1).axiom_failures(_x()) == ["antipode"]
