"""Tests for qorth.expr module."""

from __future__ import annotations

import pytest

from qorth.errors import ParseError
from qorth.expr import parse_poly, parse_scalar, polys
from qorth.freealg import Alphabet, NcPoly
from qorth.scalar import ETA, ONE, I, Q, R, S, W, Scalar

AB = Alphabet("ab", ("a", "b"))


class TestParsePoly:
    """Test polynomial expressions over an alphabet."""

    def test_product_order(self) -> None:
        p = parse_poly("a*b - b*a", AB)
        assert p == NcPoly.from_words(AB, "a", "b") - NcPoly.from_words(AB, "b", "a")

    def test_precedence(self) -> None:
        a = NcPoly.gen(AB, "a")
        assert parse_poly("1 + 2*a^2", AB) == 1 + 2 * (a * a)
        assert parse_poly("-(a + 1)", AB) == -a - 1

    def test_scalar_constants(self) -> None:
        p = parse_poly("q*a + s*b", AB)
        assert p.coefficient((0,)) == Q
        assert p.coefficient((1,)) == S

    def test_division_by_scalar(self) -> None:
        p = parse_poly("a/(1 + q)", AB)
        assert p.coefficient((0,)) == 1 / (1 + Q)

    def test_polys_helper(self) -> None:
        assert [str(p) for p in polys(AB, "a", "b^2")] == ["a", "b^2"]

    def test_whitespace_ignored(self) -> None:
        assert parse_poly("  a *  b ", AB) == parse_poly("a*b", AB)

    @pytest.mark.parametrize("text", ["a*b ", "a*b\t\n", " a * b  "])
    def test_trailing_whitespace(self, text: str) -> None:
        assert parse_poly(text, AB) == parse_poly("a*b", AB)


class TestParseScalar:
    """Test coefficient expressions."""

    @pytest.mark.parametrize(
        ("text", "value"),
        [
            ("r^-1*w", ETA),
            ("i", I),
            ("(1/2)*r^-2", R ** (-2) / 2),
            ("w^2", 1 + Q),
            ("s^-2", Q.inverse()),
            ("7", Scalar(7)),
        ],
    )
    def test_values(self, text: str, value: Scalar) -> None:
        assert parse_scalar(text) == value

    def test_empty_is_error(self) -> None:
        with pytest.raises(ParseError, match="Empty expression"):
            parse_scalar("")

    def test_w_inverse(self) -> None:
        assert parse_scalar("1/w") * W == ONE


class TestParseErrors:
    """Test error reporting."""

    def test_unexpected_character_column(self) -> None:
        with pytest.raises(ParseError) as exc_info:
            parse_poly("a # b", AB)
        assert exc_info.value.code == "PARSE_UNEXPECTED"
        assert exc_info.value.column == 3

    def test_unknown_generator(self) -> None:
        with pytest.raises(ParseError) as exc_info:
            parse_poly("a*z", AB)
        assert exc_info.value.code == "PARSE_UNKNOWN_GENERATOR"
        assert exc_info.value.column == 3

    def test_division_by_generator(self) -> None:
        with pytest.raises(ParseError, match="non-scalar"):
            parse_poly("a/b", AB)

    def test_division_by_zero(self) -> None:
        with pytest.raises(ParseError, match="zero"):
            parse_poly("a/(q - q)", AB)

    def test_negative_power_of_generator(self) -> None:
        with pytest.raises(ParseError, match="Negative power"):
            parse_poly("a^-1", AB)

    def test_unbalanced_parenthesis(self) -> None:
        with pytest.raises(ParseError, match="Expected"):
            parse_poly("(a + b", AB)

    def test_trailing_operator(self) -> None:
        with pytest.raises(ParseError):
            parse_poly("a +", AB)
