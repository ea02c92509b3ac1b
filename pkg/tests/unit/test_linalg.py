"""Tests for qorth.linalg module."""

from __future__ import annotations

import pytest

from qorth.errors import ShapeError
from qorth.linalg import ScalarMatrix, SemiEchelon, rank, rref
from qorth.scalar import ONE, Q, R, Scalar, W


class TestScalarMatrix:
    """Test sparse scalar matrices."""

    def test_identity_product(self) -> None:
        m = ScalarMatrix.from_lists([[1, R], [0, Q]])
        assert ScalarMatrix.identity(2) @ m == m
        assert m @ ScalarMatrix.identity(2) == m

    def test_zero_entries_dropped(self) -> None:
        m = ScalarMatrix.from_lists([[0, 0], [0, 1]])
        assert m.nnz() == 1
        assert (m - m).is_zero()

    def test_kron(self) -> None:
        a = ScalarMatrix.from_lists([[1, 2], [0, 1]])
        k = a.kron(ScalarMatrix.identity(2))
        assert k.shape == (4, 4)
        assert k[0, 2] == Scalar(2)
        assert k[1, 3] == Scalar(2)
        assert k[0, 3] == Scalar(0)

    def test_transpose(self) -> None:
        m = ScalarMatrix.from_lists([[1, R, 0]])
        t = m.transpose()
        assert t.shape == (3, 1)
        assert t[1, 0] == R

    def test_shape_mismatch(self) -> None:
        with pytest.raises(ShapeError):
            _ = ScalarMatrix.identity(2) + ScalarMatrix.identity(3)
        with pytest.raises(ShapeError):
            _ = ScalarMatrix.zeros(2, 3) @ ScalarMatrix.zeros(2, 3)

    def test_lower_triangular(self) -> None:
        assert ScalarMatrix.from_lists([[1, 0], [R, 1]]).is_lower_triangular()
        assert not ScalarMatrix.from_lists([[1, R], [0, 1]]).is_lower_triangular()

    def test_items_sorted(self) -> None:
        m = ScalarMatrix(2, 2, {1: {0: ONE}, 0: {1: R}})
        assert [(i, j) for i, j, _ in m.items()] == [(0, 1), (1, 0)]


class TestRank:
    """Test exact rank and row reduction."""

    def test_rank_rational(self) -> None:
        assert rank(ScalarMatrix.from_lists([[1, R], [R, R * R]])) == 1
        assert rank(ScalarMatrix.identity(3)) == 3

    def test_rank_with_w(self) -> None:
        m = ScalarMatrix.from_lists([[W, ONE], [ONE + Q, W]])
        assert rank(m) == 1

    def test_rref(self) -> None:
        reduced, pivots = rref(ScalarMatrix.from_lists([[2, 4], [1, 3]]))
        assert reduced == ScalarMatrix.identity(2)
        assert pivots == (0, 1)


class TestSemiEchelon:
    """Test incremental elimination with certificates."""

    def test_dependent_rows(self) -> None:
        ech = SemiEchelon()
        assert ech.add({0: ONE, 1: R})
        assert not ech.add({0: R, 1: R * R})
        assert ech.rank == 1

    def test_express(self) -> None:
        ech = SemiEchelon(track=True)
        ech.add({"a": ONE, "b": ONE}, tag="first")
        ech.add({"b": ONE, "c": ONE}, tag="second")
        combo = ech.express({"a": ONE, "b": Scalar(2), "c": ONE})
        assert combo == {"first": ONE, "second": ONE}
        assert ech.express({"c": ONE}) is None

    def test_contains(self) -> None:
        ech = SemiEchelon()
        ech.add({0: ONE})
        assert ech.contains({0: Q})
        assert not ech.contains({1: ONE})
