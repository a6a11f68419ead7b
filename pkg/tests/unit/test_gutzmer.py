"""Tests for Gutzmer's formula, its polarization, the K-average identity and the converse check."""

import math

import numpy as np
import pytest

from src.exceptions import CapabilityError, InputError
from src.gutzmer import (
    converse_decay_check,
    gutzmer_check,
    gutzmer_lhs,
    gutzmer_rhs,
    gutzmer_weight,
    k_average_difference,
    k_average_verify,
    polarized_gutzmer,
    torus_average_identity,
)
from src.phase_space.actions import group_action, haar_sample
from src.phase_space.models import MultiIndex, PhasePoint
from src.spectral.expansion import HermiteExpansion
from src.spectral.operations import poisson_semigroup

POINT_2D = PhasePoint.from_parts([0.3, -0.2], [0.2, 0.1], [0.1, 0.4], [-0.1, 0.3])


class TestGutzmerWeights:
    """Tests for k!(n-1)!/(k+n-1)!."""

    def test_one_dimension(self):
        assert all(gutzmer_weight(k, 1) == 1.0 for k in range(10))

    def test_higher_dimensions(self):
        assert gutzmer_weight(2, 2) == pytest.approx(1 / 3)
        assert gutzmer_weight(3, 3) == pytest.approx(1 / 10)


class TestGutzmerOneDimension:
    """Deterministic checks in one dimension."""

    def test_ground_state_on_imaginary_axis(self, h0, imaginary_point):
        """For h_0 at z = i/2 both sides equal phi_0(i, 0) = e^{1/4}."""
        rhs, tail = gutzmer_rhs(h0, imaginary_point)
        assert rhs == pytest.approx(math.exp(0.25))
        assert tail == 0.0
        assert gutzmer_lhs(h0, imaginary_point).value.real == pytest.approx(rhs, rel=1e-10)

    def test_random_expansion(self, random_expansion_1d, generic_point):
        report = gutzmer_check(random_expansion_1d, generic_point)
        assert report.passed
        assert report.rel_error < 1e-9
        assert report.lhs_stderr is None
        assert report.gh_order == 14
        assert report.torus_points == 14

    def test_report_records_point(self, h0_plus_half_h3, generic_point):
        report = gutzmer_check(h0_plus_half_h3, generic_point)
        assert report.x == [0.4]
        assert report.y == [-0.6]
        assert report.u == [0.9]
        assert report.v == [0.3]

    def test_real_point_reduces_to_norm(self, random_expansion_1d):
        """At real (x, u) both sides equal ||f||^2."""
        p = PhasePoint.real([0.7], [-0.4])
        norm = random_expansion_1d.norm_squared()
        assert gutzmer_rhs(random_expansion_1d, p)[0] == pytest.approx(norm, rel=1e-13)
        assert gutzmer_lhs(random_expansion_1d, p).value.real == pytest.approx(norm, rel=1e-10)

    def test_polarized(self, random_expansion_1d, h0_plus_half_h3, generic_point):
        result = polarized_gutzmer(random_expansion_1d, h0_plus_half_h3, generic_point)
        assert result.lhs == pytest.approx(result.rhs, rel=1e-9)

    def test_polarized_is_hermitian(self, random_expansion_1d, h0_plus_half_h3, generic_point):
        forward = polarized_gutzmer(random_expansion_1d, h0_plus_half_h3, generic_point)
        backward = polarized_gutzmer(h0_plus_half_h3, random_expansion_1d, generic_point)
        assert backward.rhs == pytest.approx(np.conj(forward.rhs), rel=1e-12)

    def test_polarized_orthogonal_levels(self, generic_point):
        """Expansions on different levels pair to zero."""
        result = polarized_gutzmer(HermiteExpansion.basis((1,)), HermiteExpansion.basis((2,)), generic_point)
        assert result.rhs == 0
        assert abs(result.lhs) < 1e-10

    def test_dimension_mismatch(self, h0):
        with pytest.raises(InputError):
            gutzmer_check(h0, POINT_2D)

    def test_imaginary_part_above_cap(self, h0):
        with pytest.raises(CapabilityError):
            gutzmer_rhs(h0, PhasePoint.from_parts([0.0], [50.0], [0.0], [0.0]))


class TestGutzmerHigherDimensions:
    """Torus identity and Monte Carlo checks for n >= 2."""

    def test_torus_identity(self, random_expansion_2d):
        lhs, rhs = torus_average_identity(random_expansion_2d, POINT_2D)
        assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_rhs_real_point(self, random_expansion_2d):
        p = PhasePoint.real([0.3, -0.5], [1.0, 0.2])
        rhs, _ = gutzmer_rhs(random_expansion_2d, p)
        assert rhs == pytest.approx(random_expansion_2d.norm_squared(), rel=1e-13)

    def test_monte_carlo_requires_seed(self):
        F = HermiteExpansion.basis((1, 0))
        with pytest.raises(InputError):
            gutzmer_lhs(F, POINT_2D)

    @pytest.mark.slow
    def test_monte_carlo_check(self, mc_options):
        F = HermiteExpansion.from_coefficients(2, {(0, 0): 1.0, (1, 0): 0.5, (0, 1): 0.25j})
        report = gutzmer_check(F, POINT_2D, mc_options.model_copy(update={"mc_sigma": 5.0}))
        assert report.passed
        assert report.lhs_stderr is not None and report.lhs_stderr > 0
        assert report.seed == 7
        assert report.mc_samples == 4000

    @pytest.mark.slow
    def test_monte_carlo_is_reproducible(self, mc_options):
        F = HermiteExpansion.basis((1, 0))
        first = gutzmer_lhs(F, POINT_2D, mc_options)
        second = gutzmer_lhs(F, POINT_2D, mc_options.model_copy(update={"workers": 3}))
        assert first.value == second.value
        assert first.stderr == second.stderr


class TestKInvariance:
    """Both sides are unchanged when the point is moved by sigma in U(n)."""

    def test_lhs_one_dimension(self, random_expansion_1d, generic_point, rng):
        expected = gutzmer_lhs(random_expansion_1d, generic_point).value.real
        for _ in range(3):
            moved = group_action(haar_sample(1, rng), generic_point)
            assert gutzmer_lhs(random_expansion_1d, moved).value.real == pytest.approx(expected, rel=1e-10)

    def test_rhs_one_dimension(self, random_expansion_1d, generic_point, rng):
        expected, _ = gutzmer_rhs(random_expansion_1d, generic_point)
        for _ in range(10):
            moved = group_action(haar_sample(1, rng), generic_point)
            assert gutzmer_rhs(random_expansion_1d, moved)[0] == pytest.approx(expected, rel=1e-12)

    def test_rhs_two_dimensions(self, random_expansion_2d, rng):
        expected, _ = gutzmer_rhs(random_expansion_2d, POINT_2D)
        for _ in range(10):
            moved = group_action(haar_sample(2, rng), POINT_2D)
            assert not moved.isclose(POINT_2D)
            assert gutzmer_rhs(random_expansion_2d, moved)[0] == pytest.approx(expected, rel=1e-12)


class TestRhsMonotonicity:
    """The right side grows along imaginary rays with x = u = 0."""

    HEIGHTS = np.linspace(0.0, 1.5, 16)

    def test_in_y(self, random_expansion_1d):
        values = [
            gutzmer_rhs(random_expansion_1d, PhasePoint.from_parts([0.0], [y], [0.0], [0.3]))[0]
            for y in self.HEIGHTS
        ]
        assert np.all(np.diff(values) >= 0.0)
        assert values[-1] > values[0]

    def test_in_v(self, random_expansion_1d):
        values = [
            gutzmer_rhs(random_expansion_1d, PhasePoint.from_parts([0.0], [-0.4], [0.0], [v]))[0]
            for v in self.HEIGHTS
        ]
        assert np.all(np.diff(values) >= 0.0)

    def test_two_dimensions(self, random_expansion_2d):
        direction = np.array([0.6, -0.8])
        values = [
            gutzmer_rhs(random_expansion_2d, PhasePoint.from_parts([0, 0], s * direction, [0, 0], [0.2, 0.1]))[0]
            for s in self.HEIGHTS
        ]
        assert np.all(np.diff(values) >= 0.0)


class TestKAverage:
    """Tests for the K-average of Phi_{alpha,alpha}."""

    @pytest.mark.parametrize("a", [0, 1, 2, 4])
    def test_circle_is_exact(self, a):
        result = k_average_verify(MultiIndex.of(a), PhasePoint.real([0.6], [0.8]))
        assert result.stderr == 0.0
        assert result.residual < 1e-12

    def test_needs_real_point(self, generic_point):
        with pytest.raises(InputError):
            k_average_verify(MultiIndex.of(1), generic_point)

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            k_average_verify(MultiIndex.of(1, 0), PhasePoint.real([0.6], [0.8]))

    @pytest.mark.slow
    def test_two_dimensions(self, mc_options):
        xu = PhasePoint.real([0.6, -0.3], [0.2, 0.5])
        result = k_average_verify(MultiIndex.of(1, 1), xu, mc_options)
        assert result.residual <= max(5.0 * result.stderr, 1e-12)
        assert result.seed == 7

    @pytest.mark.slow
    def test_level_equivalence(self, mc_options):
        """Indices of the same level have the same K-average."""
        xu = PhasePoint.real([0.6, -0.3], [0.2, 0.5])
        estimate = k_average_difference(MultiIndex.of(2, 0), MultiIndex.of(0, 2), xu, mc_options)
        assert abs(estimate.estimate) <= 5.0 * estimate.stderr


class TestConverse:
    """Tests for the decay side of the converse statement."""

    @pytest.fixture
    def smooth(self):
        return poisson_semigroup(HermiteExpansion.from_levels(1, [1.0] * 49), 0.7)

    def test_inside_tube(self, smooth):
        report = converse_decay_check(smooth, PhasePoint.from_parts([0.0], [0.35], [0.0], [0.0]))
        assert report.bounded
        assert report.r == pytest.approx(0.35)
        assert report.t_hat == pytest.approx(0.7, rel=1e-10)
        assert np.isfinite(report.rhs)
        assert report.rhs == pytest.approx(sum(report.terms))

    def test_outside_tube(self, smooth):
        report = converse_decay_check(smooth, PhasePoint.from_parts([0.0], [0.6], [0.0], [0.8]))
        assert report.r == pytest.approx(1.0)
        assert not report.bounded

    def test_terms_match_rhs(self, smooth, generic_point):
        report = converse_decay_check(smooth, generic_point)
        assert report.rhs == pytest.approx(gutzmer_rhs(smooth, generic_point)[0], rel=1e-12)
