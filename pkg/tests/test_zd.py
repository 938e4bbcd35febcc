"""Equalizer synthesis: derivation, targeting, recovery, self-control scan."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdpool import (
    DegenerateSpreadError,
    DomainError,
    GameParameters,
    InfeasibleTargetError,
    MixedStrategy,
    ParameterError,
    PayoffVectors,
    UndefinedPayoffError,
    ZDCoefficients,
    controlled_payoff,
    derive_p2_p3,
    equalizer_coefficients,
    expected_payoffs,
    press_dyson_determinant,
    self_control_report,
    strategy_for_target,
)
from zdpool.tolerances import ANALYTIC_TOL, CONTROL_TOL

PAYOFFS = PayoffVectors.from_parameters(GameParameters())
S_M = PAYOFFS.miner
S_P = PAYOFFS.pool

unit = st.floats(0.0, 1.0, allow_nan=False)
interior = st.floats(0.02, 0.98)
opponents = st.tuples(interior, interior, interior, interior)


class TestDeriveP2P3:
    def test_reference_pin_corners(self):
        assert derive_p2_p3(0.9, 0.2, PAYOFFS) == pytest.approx((0.3, 0.8), abs=1e-12)

    def test_full_cooperation_corners_are_infeasible(self):
        p2, p3 = derive_p2_p3(1.0, 1.0, PAYOFFS)
        assert (p2, p3) == pytest.approx((-1.0, 3.0), abs=1e-12)

    def test_opposite_corners(self):
        assert derive_p2_p3(0.0, 1.0, PAYOFFS) == pytest.approx((-4.0, 5.0), abs=1e-12)

    def test_plain_sequence_accepted(self):
        assert derive_p2_p3(0.9, 0.2, S_M) == pytest.approx((0.3, 0.8), abs=1e-12)

    def test_corner_validation(self):
        with pytest.raises(ParameterError):
            derive_p2_p3(1.5, 0.2, PAYOFFS)

    def test_zero_spread_rejected(self):
        with pytest.raises(DegenerateSpreadError):
            derive_p2_p3(0.9, 0.2, (3.0, 5.0, 0.0, 3.0))

    @given(unit, unit)
    @settings(max_examples=100)
    def test_completed_column_is_affine(self, p1, p4):
        # whatever (p2, p3) come out, the full column must lie in the
        # span of the miner payoffs and the ones vector
        p2, p3 = derive_p2_p3(p1, p4, PAYOFFS)
        column = np.array([p1 - 1.0, p2 - 1.0, p3, p4])
        basis = np.column_stack([S_M, np.ones(4)])
        coeffs, *_ = np.linalg.lstsq(basis, column, rcond=None)
        assert np.max(np.abs(basis @ coeffs - column)) < 1e-9


class TestControlledPayoff:
    def test_reference_pin(self):
        assert controlled_payoff(0.9, 0.2, PAYOFFS) == pytest.approx(8.0 / 3.0, abs=1e-12)

    def test_extremes(self):
        assert controlled_payoff(1.0, 1.0, PAYOFFS) == 3.0
        assert controlled_payoff(0.0, 0.0, PAYOFFS) == 2.0

    def test_vanishing_weights_undefined(self):
        with pytest.raises(UndefinedPayoffError):
            controlled_payoff(1.0, 0.0, PAYOFFS)

    @given(unit, unit)
    @settings(max_examples=100)
    def test_range(self, p1, p4):
        if (1.0 - p1) + p4 == 0.0:
            return
        value = controlled_payoff(p1, p4, PAYOFFS)
        assert S_M[3] - 1e-12 <= value <= S_M[0] + 1e-12

    def test_monotone_in_corners(self):
        # with rho > sigma the controlled payoff rises with either corner
        grid = np.linspace(0.0, 1.0, 21)
        for p4 in (0.2, 0.6, 1.0):
            values = [controlled_payoff(p1, p4, PAYOFFS) for p1 in grid if p1 < 1.0 or p4 > 0.0]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
        for p1 in (0.0, 0.5, 0.95):
            values = [controlled_payoff(p1, p4, PAYOFFS) for p4 in grid if p1 < 1.0 or p4 > 0.0]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


class TestStrategyForTarget:
    def test_maximum_target(self):
        zd = strategy_for_target(3.0, PAYOFFS)
        assert zd.strategy.probs == pytest.approx((1.0, 0.3666666666666667, 0.95, 0.31666666666666665), abs=1e-15)
        assert zd.target_payoff == 3.0
        assert controlled_payoff(zd.strategy[0], zd.strategy[3], PAYOFFS) == pytest.approx(3.0, abs=CONTROL_TOL)

    def test_minimum_target_with_explicit_scale(self):
        zd = strategy_for_target(2.0, PAYOFFS, scale=1.0 / 3.0)
        assert zd.strategy.probs == pytest.approx((2.0 / 3.0, 0.0, 2.0 / 3.0, 0.0), abs=1e-15)
        assert zd.coefficients.beta == pytest.approx(-1.0 / 3.0)
        assert zd.coefficients.gamma == pytest.approx(2.0 / 3.0)
        assert zd.coefficients.pinned_payoff == pytest.approx(2.0, abs=1e-15)

    def test_interior_target_default_scale(self):
        zd = strategy_for_target(8.0 / 3.0, PAYOFFS)
        assert zd.strategy.probs == pytest.approx((0.88125, 0.16875, 0.95, 0.2375), abs=1e-12)

    def test_out_of_range_targets(self):
        for target in (1.999, 3.001, 9.0, -4.0):
            with pytest.raises(InfeasibleTargetError):
                strategy_for_target(target, PAYOFFS)

    def test_scale_override_past_feasibility(self):
        with pytest.raises(InfeasibleTargetError, match="binding component"):
            strategy_for_target(2.0, PAYOFFS, scale=0.9)

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(InfeasibleTargetError):
            strategy_for_target(2.5, PAYOFFS, scale=0.0)

    @given(st.floats(2.0, 3.0))
    @settings(max_examples=150)
    def test_components_feasible_and_target_hit(self, target):
        zd = strategy_for_target(target, PAYOFFS)
        p = zd.strategy.probs
        assert all(0.0 <= x <= 1.0 for x in p)
        assert controlled_payoff(p[0], p[3], PAYOFFS) == pytest.approx(target, abs=CONTROL_TOL)
        assert zd.coefficients.pinned_payoff == pytest.approx(target, abs=CONTROL_TOL)

    @given(st.floats(2.01, 2.99), opponents)
    @settings(max_examples=100, deadline=None)
    def test_pin_holds_against_any_opponent(self, target, q):
        zd = strategy_for_target(target, PAYOFFS)
        outcome = expected_payoffs(zd.strategy, MixedStrategy(q), PAYOFFS)
        assert abs(outcome.miner - target) < 1e-6

    def test_pin_survives_classical_opponents(self):
        classics = ((1, 1, 1, 1), (0, 0, 0, 0), (1, 1, 0, 0), (1, 0, 0, 1))
        for target in (2.0 + 1e-9, 2.4, 8.0 / 3.0, 3.0):
            zd = strategy_for_target(target, PAYOFFS)
            for q in classics:
                outcome = expected_payoffs(zd.strategy, q, PAYOFFS)
                assert abs(outcome.miner - target) < 1e-8

    @given(st.floats(2.0, 3.0), opponents)
    @settings(max_examples=100, deadline=None)
    def test_zero_determinant_of_pinned_column(self, target, q):
        zd = strategy_for_target(target, PAYOFFS)
        f = zd.coefficients.beta * np.array(S_M) + zd.coefficients.gamma
        assert abs(press_dyson_determinant(zd.strategy, q, f)) < ANALYTIC_TOL


class TestEqualizerCoefficients:
    def test_roundtrip_through_synthesis(self):
        for target in (2.1, 2.5, 2.9):
            zd = strategy_for_target(target, PAYOFFS)
            recovered = equalizer_coefficients(zd.strategy, PAYOFFS)
            assert recovered.beta == pytest.approx(zd.coefficients.beta, abs=1e-12)
            assert recovered.gamma == pytest.approx(zd.coefficients.gamma, abs=1e-12)
            assert recovered.pinned_payoff == pytest.approx(target, abs=1e-10)

    def test_reference_pin(self):
        coeffs = equalizer_coefficients((0.9, 0.3, 0.8, 0.2), PAYOFFS)
        assert coeffs.pinned_payoff == pytest.approx(8.0 / 3.0, abs=1e-12)
        assert coeffs.alpha == 0.0

    def test_non_equalizer_rejected(self):
        with pytest.raises(DomainError):
            equalizer_coefficients((0.9, 0.9, 0.1, 0.2), PAYOFFS)

    def test_zero_beta_pins_nothing(self):
        with pytest.raises(UndefinedPayoffError):
            ZDCoefficients(alpha=0.0, beta=0.0, gamma=1.0).pinned_payoff


class TestSelfControl:
    def test_grid_finds_single_degenerate_corner(self):
        report = self_control_report(PAYOFFS, grid_step=0.05)
        assert len(report.feasible_points) == 1
        point = report.feasible_points[0]
        assert (point.p1, point.p2, point.p3, point.p4) == (1.0, 1.0, 0.0, 0.0)
        assert point.alpha == 0.0 and point.gamma == 0.0
        assert report.only_degenerate

    def test_fine_grid_same_verdict(self):
        report = self_control_report(PAYOFFS, grid_step=0.01)
        assert report.total_points == 101 * 101
        assert len(report.feasible_points) == 1
        assert report.only_degenerate

    def test_point_queries(self):
        report = self_control_report(PAYOFFS, grid_step=0.5)
        origin = report.point(0.0, 0.0)
        assert origin.p2 == pytest.approx(3.0)
        assert origin.p3 == pytest.approx(-3.0)
        assert "p2 > 1" in origin.violations and "p3 < 0" in origin.violations
        assert not origin.feasible
        center = report.point(0.5, 0.5)
        assert center.p2 == pytest.approx(3.5)
        assert center.p3 == pytest.approx(-2.5)
        assert center.violations == ("p2 > 1", "p3 < 0")

    def test_pool_vector_used_not_miner(self):
        report = self_control_report(PAYOFFS, grid_step=0.5)
        assert report.s_p == S_P

    def test_grid_step_validated(self):
        with pytest.raises(ParameterError):
            self_control_report(PAYOFFS, grid_step=0.0)

    @given(unit, unit)
    @settings(max_examples=100)
    def test_feasible_points_pin_nothing(self, p1, p4):
        # any feasible corner pair must carry vanishing coefficients
        point = self_control_report(PAYOFFS, grid_step=0.5).point(p1, p4)
        if point.feasible:
            assert abs(point.alpha) < 1e-9 and abs(point.gamma) < 1e-9
