"""Tests for Gauss-Hermite and torus rules, checked integrals and Haar Monte Carlo."""

import math

import numpy as np
import pytest

from src.config import get_settings
from src.exceptions import AccuracyError, CapabilityError, InputError
from src.quadrature.integrals import gaussian_envelope_integral, torus_integral, torus_line_integral
from src.quadrature.monte_carlo import chunk_sizes, haar_integral_mc
from src.quadrature.rules import doubling_pair, gauss_hermite_rule, torus_rule


class TestGaussHermiteRule:
    """Tests for the Golub-Welsch rule."""

    @pytest.mark.parametrize("m", [1, 2, 7, 40, 160])
    def test_weights_sum_to_sqrt_pi(self, m):
        assert gauss_hermite_rule(m).weights.sum() == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    def test_nodes_antisymmetric(self):
        rule = gauss_hermite_rule(41)
        np.testing.assert_array_equal(rule.nodes, -rule.nodes[::-1])
        assert rule.nodes[20] == 0.0

    def test_exact_for_polynomials(self):
        """A 3-point rule integrates xi^4 e^{-xi^2} exactly: 3 sqrt(pi) / 4."""
        rule = gauss_hermite_rule(3)
        assert rule.weights @ rule.nodes**4 == pytest.approx(0.75 * math.sqrt(math.pi), rel=1e-13)

    def test_odd_values_contract_to_zero(self, rule_40):
        assert rule_40.contract(rule_40.nodes**3) == 0.0

    def test_grid_shape(self):
        assert gauss_hermite_rule(5).grid(3).shape == (125, 3)

    def test_cached(self):
        assert gauss_hermite_rule(24) is gauss_hermite_rule(24)

    @pytest.mark.parametrize("m", [0, -3, 2.5])
    def test_invalid_order(self, m):
        with pytest.raises(InputError):
            gauss_hermite_rule(m)

    def test_order_above_cap(self):
        with pytest.raises(CapabilityError):
            gauss_hermite_rule(get_settings().gh_order_max + 1)

    def test_doubling_pair(self, rule_40):
        coarse, fine = doubling_pair(rule_40)
        assert (coarse.order, fine.order) == (40, 80)

    def test_doubling_pair_at_top_order(self):
        top = get_settings().gh_order_max
        coarse, fine = doubling_pair(gauss_hermite_rule(top))
        assert (coarse.order, fine.order) == (top // 2, top)


class TestCheckedIntegrals:
    """Tests for integrals with the order-doubling check."""

    def test_complex_centre(self, rule_40):
        """int e^{-(xi - c)^2} d xi = sqrt(pi) for complex c."""
        c = 0.3 + 0.8j
        value = gaussian_envelope_integral(lambda p: np.exp(-((p[..., 0] - c) ** 2)), [c], rule=rule_40)
        assert value == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    def test_scaled_envelope_in_two_dimensions(self):
        """int e^{-|xi|^2 / 4} over R^2 = 4 pi."""
        value = gaussian_envelope_integral(
            lambda p: np.exp(-0.25 * np.sum(p * p, axis=-1)), [0.0, 0.0], 2.0, gauss_hermite_rule(8)
        )
        assert value == pytest.approx(4.0 * math.pi, rel=1e-13)

    def test_unconverged_integral_raises(self):
        """xi^20 e^{-xi^2} is beyond both the 4- and the 8-point rule."""
        with pytest.raises(AccuracyError) as exc_info:
            gaussian_envelope_integral(
                lambda p: p[..., 0] ** 20 * np.exp(-p[..., 0] ** 2), [0.0], rule=gauss_hermite_rule(4)
            )

        assert exc_info.value.rtol == get_settings().quadrature_rtol

    def test_unchecked_uses_one_rule(self):
        value = gaussian_envelope_integral(
            lambda p: p[..., 0] ** 20 * np.exp(-p[..., 0] ** 2), [0.0], rule=gauss_hermite_rule(4), check=False
        )
        assert np.isfinite(value)

    def test_non_positive_scale(self, rule_40):
        with pytest.raises(InputError):
            gaussian_envelope_integral(lambda p: np.exp(-p[..., 0] ** 2), [0.0], 0.0, rule_40)

    def test_torus_integral(self):
        assert torus_integral(lambda t: np.cos(t[:, 0]) ** 2, points=8) == pytest.approx(math.pi, rel=1e-14)
        assert abs(torus_integral(lambda t: np.exp(3j * t[:, 0]), points=8)) < 1e-14

    def test_torus_integral_two_angles(self):
        value = torus_integral(lambda t: np.cos(t[:, 0] - t[:, 1]) ** 2, points=8, n=2)
        assert value == pytest.approx(2.0 * math.pi**2, rel=1e-13)

    def test_torus_rule_rejects_zero_points(self):
        with pytest.raises(InputError):
            torus_rule(0)

    def test_torus_line_integral(self):
        """int_0^{2 pi} int e^{-(xi - cos theta)^2} d xi d theta = 2 pi sqrt(pi)."""

        def g(thetas, xi):
            return np.exp(-((xi[..., 0] - np.cos(thetas[..., 0])) ** 2))

        value = torus_line_integral(g, np.cos, 1, points=8, rule=gauss_hermite_rule(8))
        assert value == pytest.approx(2.0 * math.pi**1.5, rel=1e-13)


class TestHaarMonteCarlo:
    """Tests for Monte Carlo over U(n)."""

    def test_chunk_sizes(self):
        assert chunk_sizes(10, 4) == [4, 4, 2]
        assert chunk_sizes(8, 4) == [4, 4]

    def test_mean_of_entry_modulus(self):
        """int |sigma_11|^2 d sigma = 1/n."""
        estimate = haar_integral_mc(lambda s: np.abs(s[:, 0, 0]) ** 2, 2, samples=4000, seed=3)
        assert estimate.agrees_with(0.5, sigma=5.0)
        assert estimate.samples == 4000
        assert estimate.seed == 3

    def test_independent_of_workers(self):
        def g(s):
            return np.abs(s[:, 0, 1]) ** 2

        single = haar_integral_mc(g, 3, samples=3000, seed=5, chunk_size=512)
        pooled = haar_integral_mc(g, 3, samples=3000, seed=5, chunk_size=512, workers=4)
        assert single.estimate == pooled.estimate
        assert single.stderr == pooled.stderr

    def test_requires_seed(self):
        with pytest.raises(InputError):
            haar_integral_mc(lambda s: np.ones(len(s)), 2, samples=10)

    def test_circle_is_deterministic_only(self):
        with pytest.raises(InputError):
            haar_integral_mc(lambda s: np.ones(len(s)), 1, samples=10, seed=1)


class TestHaarStandardError:
    """The Monte Carlo standard error shrinks like samples^{-1/2}."""

    def test_log_log_slope(self):
        sizes = np.array([1000, 4000, 16000])
        stderrs = [
            haar_integral_mc(lambda s: np.abs(s[:, 0, 0]) ** 2, 2, samples=int(size), seed=11).stderr
            for size in sizes
        ]
        slope = np.polyfit(np.log(sizes), np.log(stderrs), 1)[0]
        assert slope == pytest.approx(-0.5, abs=0.1)

    def test_stderr_matches_uniform_spread(self):
        """|sigma_11|^2 is uniform on [0, 1] for U(2), so the spread is 12^{-1/2}."""
        estimate = haar_integral_mc(lambda s: np.abs(s[:, 0, 0]) ** 2, 2, samples=16000, seed=11)
        assert estimate.stderr * math.sqrt(16000) == pytest.approx(1.0 / math.sqrt(12.0), rel=0.05)
