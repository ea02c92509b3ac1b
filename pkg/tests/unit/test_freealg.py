"""Tests for qorth.freealg module."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from qorth.errors import AlgebraError, ShapeError
from qorth.freealg import (
    Alphabet,
    Homomorphism,
    NcMatrix,
    NcPoly,
    StarMap,
    Tensor2,
    linear_combination,
)
from qorth.scalar import ONE, I, R, Regime
from tests.strategies import polys

AB = Alphabet("ab", ("x", "y"))
OTHER = Alphabet("other", ("x", "y"))


def _x() -> NcPoly:
    return NcPoly.gen(AB, "x")


def _y() -> NcPoly:
    return NcPoly.gen(AB, "y")


class TestAlphabet:
    """Test generator alphabets."""

    def test_default_weights(self) -> None:
        assert AB.weights == (1, 1)

    def test_repeated_symbols_rejected(self) -> None:
        with pytest.raises(AlgebraError, match="repeated"):
            Alphabet("bad", ("x", "x"))

    def test_weight_count_checked(self) -> None:
        with pytest.raises(AlgebraError):
            Alphabet("bad", ("x", "y"), (1,))

    def test_index_and_word(self) -> None:
        assert AB.index("y") == 1
        assert AB.word("y", "x", "x") == (1, 0, 0)
        assert "x" in AB
        assert "z" not in AB

    def test_unknown_symbol(self) -> None:
        with pytest.raises(AlgebraError, match="not in alphabet"):
            AB.index("z")

    def test_word_text_compresses_runs(self) -> None:
        assert AB.word_text(()) == "1"
        assert AB.word_text((0, 0, 1)) == "x^2*y"

    def test_weighted_degree(self) -> None:
        weighted = Alphabet("w", ("a", "b"), (2, 1))
        assert weighted.weighted_degree((0, 1, 1)) == 4


class TestNcPoly:
    """Test noncommutative polynomial arithmetic."""

    def test_noncommutative_product(self) -> None:
        assert _x() * _y() != _y() * _x()
        assert (_x() * _y()).coefficient((0, 1)) == ONE

    def test_cancellation_drops_terms(self) -> None:
        p = _x() * _y() - _x() * _y()
        assert not p
        assert p.degree() == -1

    def test_scalar_ops(self) -> None:
        p = 2 * _x() + 1
        assert p.constant_term() == ONE
        assert p - 1 == _x() * 2
        assert _x().scale(0) == NcPoly.zero(AB)

    def test_equality_with_constant(self) -> None:
        assert NcPoly.one(AB) == 1
        assert NcPoly.constant(AB, R) != 1

    def test_power(self) -> None:
        assert (_x() + _y()) ** 2 == _x() ** 2 + _x() * _y() + _y() * _x() + _y() ** 2
        with pytest.raises(AlgebraError):
            _x() ** -1

    def test_alphabet_mismatch(self) -> None:
        with pytest.raises(AlgebraError) as exc_info:
            _ = _x() + NcPoly.gen(OTHER, "x")
        assert exc_info.value.code == "ALGEBRA_MISMATCH"

    def test_format(self) -> None:
        assert str(_x() * _y() - 2 * _y()) == "-2*y + x*y"
        assert str((R + 1) * _x()) == "(r + 1)*x"
        assert str(NcPoly.zero(AB)) == "0"
        assert str(I * _x()) == "i*x"

    def test_linear_combination(self) -> None:
        p = linear_combination(AB, [(2, _x()), (R, _y()), (0, _x())])
        assert p == 2 * _x() + R * _y()

    def test_from_words(self) -> None:
        assert NcPoly.from_words(AB, "x", "y", coeff=3) == 3 * (_x() * _y())

    @settings(max_examples=25, deadline=None)
    @given(polys(AB), polys(AB), polys(AB))
    def test_associative_and_distributive(
        self, a: NcPoly, b: NcPoly, c: NcPoly
    ) -> None:
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestMaps:
    """Test homomorphisms and star maps."""

    def test_homomorphism_swaps(self) -> None:
        swap = Homomorphism(AB, AB, {"x": _y(), "y": _x()})
        assert swap(_x() * _x() * _y()) == _y() * _y() * _x()

    def test_homomorphism_needs_every_generator(self) -> None:
        with pytest.raises(AlgebraError, match="undefined"):
            Homomorphism(AB, AB, {"x": _y()})

    def test_star_reverses_and_conjugates(self) -> None:
        star = StarMap(AB, {"x": _x(), "y": _y()}, Regime.Q_REAL)
        assert star(I * _x() * _y()) == -I * (_y() * _x())

    def test_star_unimodular_inverts_r(self) -> None:
        star = StarMap(AB, {"x": _x(), "y": _y()}, Regime.UNIMODULAR)
        assert star(R * _x()) == R.inverse() * _x()

    @settings(max_examples=25, deadline=None)
    @given(polys(AB))
    def test_star_involutive(self, p: NcPoly) -> None:
        star = StarMap(AB, {"x": _y(), "y": _x()}, Regime.UNIMODULAR)
        assert star(star(p)) == p


class TestTensor2:
    """Test the tensor square."""

    def test_pure_product(self) -> None:
        a = Tensor2.pure(_x(), _y())
        b = Tensor2.pure(_y(), _x())
        assert a * b == Tensor2.pure(_x() * _y(), _y() * _x())

    def test_cancellation(self) -> None:
        a = Tensor2.pure(_x(), _y())
        assert not (a - a)
        assert (a - a) == Tensor2.zero(AB, AB)

    def test_map_legs(self) -> None:
        swap = Homomorphism(AB, AB, {"x": _y(), "y": _x()})
        t = Tensor2.pure(_x() + 1, _y())
        assert t.map_legs(swap, None) == Tensor2.pure(_y() + 1, _y())

    def test_one(self) -> None:
        t = Tensor2.pure(_x(), _y())
        assert Tensor2.one(AB, AB) * t == t


class TestNcMatrix:
    """Test polynomial matrices."""

    def test_identity_product(self) -> None:
        m = NcMatrix(AB, [[_x(), _y()], [_y(), _x()]])
        assert NcMatrix.identity(AB, 2) @ m == m
        assert m @ NcMatrix.identity(AB, 2) == m

    def test_product_keeps_order(self) -> None:
        a = NcMatrix.row(AB, [_x(), _y()])
        b = NcMatrix.column(AB, [_y(), _x()])
        assert (a @ b)[0, 0] == _x() * _y() + _y() * _x()

    def test_transpose(self) -> None:
        m = NcMatrix(AB, [[_x(), _y()]])
        assert m.transpose().shape == (2, 1)
        assert m.transpose()[1, 0] == _y()

    def test_shape_errors(self) -> None:
        with pytest.raises(ShapeError):
            NcMatrix(AB, [[_x()], [_x(), _y()]])
        with pytest.raises(ShapeError):
            _ = NcMatrix.row(AB, [_x(), _y()]) @ NcMatrix.row(AB, [_x(), _y()])
        with pytest.raises(ShapeError):
            _ = NcMatrix.identity(AB, 2) - NcMatrix.identity(AB, 3)

    def test_is_zero(self) -> None:
        m = NcMatrix.identity(AB, 2)
        assert (m - m).is_zero()
