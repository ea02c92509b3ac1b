"""Tests for qorth.bundles module."""

from __future__ import annotations

import pytest

from qorth.bundles import (
    BundleData,
    build_generators,
    build_idempotent,
    bundle_data,
    coefficient_recursion_failures,
    comm_ux_identities,
    degree_additivity,
    dual_pairing_identities,
    expected_trace,
    format_x_polynomial,
    id_ux_identities,
    idempotency_failures,
    mu_recursion_failures,
    mu_x,
    multi_indices,
    selfadjoint,
    trace_and_pairings,
    trace_coefficient,
    trace_p1_matches,
    weight_failures,
)
from qorth.coinv import verify
from qorth.errors import VerificationError
from qorth.freealg import NcPoly
from qorth.scalar import ONE, ZERO, Q, Regime, Scalar
from qorth.slq2 import SL_ALPHABET
from qorth.soq3 import U, covering


class TestGenerators:
    """Test the ket and bra vectors."""

    def test_multi_indices(self) -> None:
        assert len(multi_indices(2)) == 9
        assert len(multi_indices(-2)) == 9
        assert multi_indices(0) == [()]

    def test_charge_zero(self) -> None:
        ket, bra = build_generators(0)
        assert ket == [NcPoly.one(U)]
        assert bra == [NcPoly.one(U)]

    def test_ket_order(self) -> None:
        ket, _ = build_generators(2)
        # J = (1, 2) in 1-based indices gives xi_2 xi_1
        assert ket[1] == NcPoly.from_words(U, "u21", "u11")

    def test_dual_pairings(self) -> None:
        for identity in dual_pairing_identities(2):
            assert not verify(identity), identity[0]


class TestIdempotents:
    """Test p_n for small charges."""

    @pytest.mark.parametrize("n", [-1, 0, 1])
    def test_idempotent(self, n: int) -> None:
        data = build_idempotent(n)
        assert data.size == 3 ** abs(n)
        assert idempotency_failures(data) == []
        assert weight_failures(data) == []

    @pytest.mark.parametrize("n", [-1, 1])
    def test_selfadjoint_q_real(self, n: int) -> None:
        assert selfadjoint(build_idempotent(n, check=False), Regime.Q_REAL)

    @pytest.mark.parametrize("n", [-1, 1])
    def test_not_selfadjoint_unimodular(self, n: int) -> None:
        assert not selfadjoint(build_idempotent(n, check=False), Regime.UNIMODULAR)

    def test_instances_are_shared(self) -> None:
        data = bundle_data(1)
        assert build_idempotent(1, check=False) is data
        assert data.trace_image == covering(data.trace)
        assert data.image(0, 0) is data.image(0, 0)

    def test_broken_projector_rejected(self) -> None:
        ket, bra = build_generators(1)
        data = BundleData(1, ket, [b.scale(2) for b in bra])
        assert idempotency_failures(data)

    def test_build_raises_on_failure(self, monkeypatch: pytest.MonkeyPatch) -> None:
        import qorth.bundles as bundles

        monkeypatch.setattr(bundles, "idempotency_failures", lambda data: [(0, 1)])
        with pytest.raises(VerificationError) as exc_info:
            bundles.build_idempotent(1)
        assert exc_info.value.code == "IDEMPOTENT_FAILURE"
        assert "(1, 2)" in exc_info.value.message


class TestTraces:
    """Test traces, rank and degree."""

    def test_charge_zero(self) -> None:
        result = trace_and_pairings(build_idempotent(0))
        assert result.rank == ONE
        assert result.degree == ZERO
        assert result.matches_formula is True
        assert result.trace_text == "1"

    @pytest.mark.parametrize("n", [-2, -1, 1, 2])
    def test_rank_and_degree(self, n: int) -> None:
        result = trace_and_pairings(build_idempotent(n, check=False))
        assert result.rank == ONE
        assert result.degree == Scalar(-2 * n)

    def test_formula_only_for_nonnegative(self) -> None:
        negative = trace_and_pairings(build_idempotent(-1, check=False))
        assert negative.matches_formula is None
        assert trace_and_pairings(build_idempotent(2, check=False)).matches_formula

    def test_trace_p1(self) -> None:
        assert trace_p1_matches()

    def test_expected_trace_zero(self) -> None:
        assert expected_trace(0) == NcPoly.one(SL_ALPHABET)

    def test_to_dict(self) -> None:
        data = trace_and_pairings(build_idempotent(0)).to_dict()
        assert data == {
            "n": 0,
            "trace": "1",
            "rank": "1",
            "degree": "0",
            "matches_formula": True,
        }

    @pytest.mark.parametrize("n", [1, 2])
    def test_degree_additive(self, n: int) -> None:
        assert degree_additivity(n) == ZERO


class TestCoefficients:
    """Test the closed-form coefficients and recursions."""

    def test_trace_coefficient(self) -> None:
        assert trace_coefficient(3, 0) == ONE
        assert trace_coefficient(1, 1) == Q**2 - 1
        assert trace_coefficient(1, 2) == (Q**2 - 1) * (Q - 1)

    def test_mu_x(self) -> None:
        assert mu_x(1) == -1 / (Q - 1)
        assert mu_x(2) == 1 / (Q**2 - 1)

    def test_recursions(self) -> None:
        assert coefficient_recursion_failures(3) == []
        assert mu_recursion_failures(6) == []

    def test_format_x_polynomial(self) -> None:
        assert format_x_polynomial([]) == "0"
        assert format_x_polynomial([ONE, ONE]) == "1 + X"
        assert format_x_polynomial([ONE, ZERO, Scalar(2)]) == "1 + (2)*X^2"

    def test_auxiliary_identities(self) -> None:
        for identity in comm_ux_identities(2) + id_ux_identities():
            assert not verify(identity), identity[0]
