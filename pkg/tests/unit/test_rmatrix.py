"""Tests for qorth.rmatrix module."""

from __future__ import annotations

from fractions import Fraction

import pytest

from qorth.errors import ShapeError, SpectrumError
from qorth.expr import parse_poly
from qorth.freealg import Alphabet, NcPoly
from qorth.linalg import ScalarMatrix, rank
from qorth.rewrite import check_confluence
from qorth.rmatrix import (
    E_ALPHABET,
    X_ALPHABET,
    braid,
    build_R,
    c3_system,
    cubic_residual,
    exterior_dimensions,
    exterior_system,
    extract_epsilon,
    flat,
    metric_matrix,
    preregular_checks,
    quadratic_central_element,
    quadratic_form_q,
    relations_from_projector,
    rho,
    rmatrix_payload,
    same_span,
    span_rank,
    spectral_projectors,
    yang_baxter_residual,
)
from qorth.scalar import ONE, Q
from qorth.soq3 import U, covering


class TestRMatrix:
    """Test the orthogonal R-matrix."""

    def test_rho_values(self) -> None:
        assert [rho(i, 3) for i in (1, 2, 3)] == [Fraction(1, 2), 0, Fraction(-1, 2)]

    def test_diagonal_entries(self) -> None:
        r = build_R(3)
        assert r[flat(1, 1, 3), flat(1, 1, 3)] == Q
        assert r[flat(1, 3, 3), flat(1, 3, 3)] == Q.inverse()
        assert r[flat(2, 2, 3), flat(2, 2, 3)] == ONE

    def test_too_small(self) -> None:
        with pytest.raises(SpectrumError):
            build_R(1)

    @pytest.mark.parametrize("n", [2, 3])
    def test_yang_baxter(self, n: int) -> None:
        assert yang_baxter_residual(n).is_zero()

    def test_metric_is_involutive(self) -> None:
        c = metric_matrix(3)
        assert c @ c == ScalarMatrix.identity(3)

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_quadratic_forms_are_one(self, j: int) -> None:
        one = NcPoly.one(U)
        left, right = quadratic_form_q(U, j)
        assert not covering(left - one)
        assert not covering(right - one)


class TestProjectors:
    """Test the spectral decomposition of the braided R-matrix."""

    def test_cubic(self) -> None:
        assert cubic_residual(braid(build_R(3), 3), 3).is_zero()

    def test_resolution_and_ranks(self) -> None:
        proj = spectral_projectors(braid(build_R(3), 3), 3)
        assert proj.plus + proj.minus + proj.zero == ScalarMatrix.identity(9)
        assert (proj.plus @ proj.minus).is_zero()
        assert proj.plus @ proj.plus == proj.plus
        assert [rank(p) for p in proj] == [5, 3, 1]

    def test_degenerate_for_two(self) -> None:
        with pytest.raises(SpectrumError) as exc_info:
            spectral_projectors(braid(build_R(2), 2), 2)
        assert exc_info.value.code == "SPECTRUM_DEGENERATE"

    def test_relations_shape_checked(self) -> None:
        with pytest.raises(ShapeError):
            relations_from_projector(ScalarMatrix.identity(4), X_ALPHABET)


class TestQuadraticAlgebras:
    """Test C^3_q and the exterior algebra."""

    def test_c3_confluent(self) -> None:
        assert check_confluence(c3_system()) == []

    def test_exterior_confluent(self) -> None:
        assert check_confluence(exterior_system()) == []

    def test_exterior_dimensions(self) -> None:
        assert exterior_dimensions(4) == [1, 3, 3, 1, 0]

    def test_central_element(self) -> None:
        rs = c3_system()
        r = quadratic_central_element()
        for sym in X_ALPHABET.symbols:
            x = parse_poly(sym, X_ALPHABET)
            assert not rs.normal_form(x * r - r * x)

    def test_epsilon(self) -> None:
        eps = extract_epsilon()
        assert eps[(1, 2, 3)] == ONE
        assert len(eps.nonzero()) == 7
        assert eps[(1, 1, 2)] == 0

    def test_preregular(self) -> None:
        report = preregular_checks(extract_epsilon())
        assert report.cyclic_failures == []
        assert report.rank == 3
        assert report.spans_c3
        assert report.ok


class TestSpans:
    """Test span comparisons of relation lists."""

    def test_span_rank(self) -> None:
        a = Alphabet("ab", ("a", "b"))
        polys = [parse_poly(t, a) for t in ("a + b", "a - b", "a")]
        assert span_rank(polys) == 2
        assert span_rank([]) == 0

    def test_same_span(self) -> None:
        a = Alphabet("ab", ("a", "b"))
        first = [parse_poly(t, a) for t in ("a + b", "a - b")]
        second = [parse_poly(t, a) for t in ("a", "b")]
        assert same_span(first, second)
        assert not same_span(first[:1], second[:1])


class TestPayload:
    """Test the data behind the rmatrix command."""

    def test_payload_three(self) -> None:
        payload = rmatrix_payload(3)
        assert payload["n"] == 3
        assert {e["row"] for e in payload["R"]} <= {
            f"{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)
        }
        ranks = {name: p["rank"] for name, p in payload["projectors"].items()}
        assert ranks == {"plus": 5, "minus": 3, "zero": 1}
        assert len(payload["relations"]["symmetric"]) == 3
        assert len(payload["relations"]["exterior"]) == 6

    def test_payload_two_has_no_projectors(self) -> None:
        payload = rmatrix_payload(2)
        assert payload["projectors"] == {}
        assert payload["relations"] == {}
        assert payload["R"]

    def test_symmetric_relations_match_c3(self) -> None:
        from qorth.rmatrix import rule_relations

        proj = spectral_projectors(braid(build_R(3), 3), 3)
        derived = relations_from_projector(proj.minus, X_ALPHABET)
        assert same_span(derived, rule_relations(c3_system()))

    def test_exterior_relations_match(self) -> None:
        from qorth.rmatrix import rule_relations

        proj = spectral_projectors(braid(build_R(3), 3), 3)
        derived = relations_from_projector(proj.plus + proj.zero, E_ALPHABET)
        assert same_span(derived, rule_relations(exterior_system()))
