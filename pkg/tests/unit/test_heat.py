"""Tests for heat kernels, the Laguerre-heat integrals, the image norm and torus orthogonality."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.exceptions import CapabilityError, DomainError, InputError
from src.gutzmer import (
    HeatWeight,
    OrthogonalityVariant,
    heat_kernel_integral,
    heat_kernel_p,
    heat_kernel_total,
    image_norm,
    image_norm_closed,
    laguerre_heat_closed,
    laguerre_heat_integral,
    orthogonality_1d,
    orthogonality_expected,
)
from src.phase_space.actions import act, group_action, haar_sample, haar_unitaries
from src.phase_space.models import PhasePoint
from src.spectral.expansion import HermiteExpansion
from src.spectral.operations import semigroup


class TestHeatKernel:
    """Tests for p_t on R^{2n}."""

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("t", [0.25, 0.5, 1.0])
    def test_total_mass(self, n, t):
        assert heat_kernel_integral(t, n) == pytest.approx(heat_kernel_total(t, n), rel=1e-12)

    def test_value_at_origin(self):
        assert heat_kernel_p(0.5, [0.0], [0.0]) == pytest.approx(1.0 / (2.0 * math.pi * math.sinh(0.5)))

    def test_shape_mismatch(self):
        with pytest.raises(InputError):
            heat_kernel_p(0.5, [0.0, 1.0], [0.0])

    def test_time_must_be_positive(self):
        with pytest.raises(ValidationError):
            HeatWeight(t=0.0, n=1)

    def test_image_weight_at_origin(self):
        weight = HeatWeight(t=0.25, n=1)
        assert weight.image_weight([0.0], [0.0]) == pytest.approx(2.0 / math.sqrt(math.sinh(1.0)))


class TestHeatKernelInvariance:
    """p_t(sigma.(y, v)) = p_t(y, v) for sigma in U(n)."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_haar_sweep(self, n, rng):
        y, v = rng.standard_normal((2, n))
        expected = heat_kernel_p(0.7, y, v)
        for _ in range(100):
            moved = group_action(haar_sample(n, rng), PhasePoint.real(y, v))
            assert heat_kernel_p(0.7, moved.x, moved.u) == pytest.approx(expected, rel=1e-12)

    def test_batched_orbit(self, rng):
        sigmas = haar_unitaries(2, 100, rng)
        y, v = np.array([0.4, -0.3]), np.array([0.8, 0.1])
        moved_y, moved_v = act(sigmas, y, v)
        values = heat_kernel_p(0.7, moved_y.real, moved_v.real)
        assert values.shape == (100,)
        np.testing.assert_allclose(values, heat_kernel_p(0.7, y, v), rtol=1e-12)


class TestLaguerreHeat:
    """Tests for the weighted integrals of phi_k against p_{2t}."""

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("t", [0.05, 0.1])
    def test_ground_level_calibration(self, n, t):
        """The k = 0 integral is 2^{-n} e^{2nt}."""
        result = laguerre_heat_integral(0, n, t)
        assert result.value == pytest.approx(laguerre_heat_closed(0, n, t), rel=1e-10)
        assert result.model == laguerre_heat_closed(0, n, t)

    @pytest.mark.parametrize("k", [0, 2, 5])
    def test_consecutive_ratio(self, k):
        t = 0.1
        lower = laguerre_heat_integral(k, 1, t).value
        upper = laguerre_heat_integral(k + 1, 1, t).value
        assert upper / lower == pytest.approx(math.exp(4 * t), rel=1e-10)

    def test_diverges_for_large_t(self):
        """coth(2t) must exceed 2."""
        with pytest.raises(DomainError):
            laguerre_heat_integral(1, 1, 0.3)


class TestImageNorm:
    """Tests for the U_t-weighted norm of e^{-tH} f."""

    def test_closed_form_constant(self, random_expansion_2d):
        t = 0.2
        value = image_norm_closed(semigroup(random_expansion_2d, t), t)
        assert value == pytest.approx(2.0 * math.pi * random_expansion_2d.norm_squared(), rel=1e-12)

    @pytest.mark.parametrize("t", [0.1, 0.25, 0.5])
    def test_quadrature_matches_constant(self, h0_plus_half_h3, t):
        ratio = image_norm(semigroup(h0_plus_half_h3, t), t) / h0_plus_half_h3.norm_squared()
        assert ratio == pytest.approx(math.sqrt(2.0 * math.pi), rel=1e-6)

    def test_unsmoothed_high_level_rejected(self):
        F = HermiteExpansion.from_coefficients(1, {(0,): 1.0, (60,): 1.0})
        with pytest.raises(DomainError):
            image_norm(F, 0.25)


class TestOrthogonality:
    """Tests for the one-dimensional torus-orbit orthogonality relations."""

    def test_worked_value(self):
        """Variant A at eta = 1 and k = j = 0 gives 2 pi e."""
        result = orthogonality_1d(0, 0, 1.0, OrthogonalityVariant.A)
        assert result.value == pytest.approx(2.0 * math.pi * math.e, rel=1e-10)
        assert result.expected == pytest.approx(2.0 * math.pi * math.e)

    @pytest.mark.parametrize("variant", ["A", "B"])
    @pytest.mark.parametrize("eta", [0.5, 1.5])
    def test_diagonal(self, variant, eta):
        for k in range(5):
            result = orthogonality_1d(k, k, eta, variant)
            assert result.value == pytest.approx(result.expected, rel=1e-9)

    @pytest.mark.parametrize("variant", list(OrthogonalityVariant))
    def test_off_diagonal(self, variant):
        for k, j in [(0, 1), (1, 3), (2, 5), (4, 2)]:
            result = orthogonality_1d(k, j, 1.0, variant)
            assert result.expected == 0.0
            assert abs(result.value) <= 1e-10 * result.scale

    def test_expected_variants(self):
        """Variant A carries the extra factor e^{eta^2}."""
        a = orthogonality_expected(2, 0.8, OrthogonalityVariant.A)
        b = orthogonality_expected(2, 0.8, OrthogonalityVariant.B)
        assert a / b == pytest.approx(math.exp(0.64))
        assert b > 2.0 * math.pi

    def test_height_above_cap(self):
        with pytest.raises(CapabilityError):
            orthogonality_1d(0, 0, 100.0, "A")

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            orthogonality_1d(0, 0, 1.0, "C")

    def test_expected_positive(self):
        values = [orthogonality_expected(k, 1.0, OrthogonalityVariant.B) for k in range(6)]
        assert np.all(np.diff(values) > 0)
