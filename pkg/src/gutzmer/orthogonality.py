"""Orthogonality relations for Hermite functions along torus orbits in one dimension.

Variant A (z = i eta, w = 0):
    int int e^{-2 xi eta cos theta} h_k(xi + i eta sin theta) conj(h_j(...)) = 2 pi L_k^0(-2 eta^2) e^{eta^2} delta_kj
Variant B (z = eta, w = i eta):
    int int e^{2 xi eta sin theta - eta^2 cos 2theta} h_k(xi + eta sin theta + i eta cos theta) conj(h_j(...))
        = 2 pi L_k^0(-2 eta^2) delta_kj
"""

from enum import Enum

import numpy as np
from numpy.typing import NDArray

from src.config import get_settings
from src.exceptions import CapabilityError
from src.gutzmer.formula import DEFAULT_OPTIONS
from src.gutzmer.models import OrthogonalityResult, QuadratureOptions
from src.quadrature.integrals import torus_line_integral
from src.quadrature.rules import gauss_hermite_rule
from src.special_functions.hermite import check_degree, hermite_functions
from src.special_functions.laguerre import laguerre_polys


class OrthogonalityVariant(str, Enum):
    """Which phase point generates the relation."""

    A = "A"
    B = "B"


def orthogonality_expected(k: int, eta: float, variant: OrthogonalityVariant) -> float:
    """Diagonal value 2 pi L_k^0(-2 eta^2), times e^{eta^2} for variant A."""
    value = 2.0 * np.pi * float(laguerre_polys(k, 0.0, np.float64(-2.0 * eta * eta))[k])
    if variant == OrthogonalityVariant.A:
        value *= np.exp(eta * eta)
    return value


def orthogonality_1d(
    k: int,
    j: int,
    eta: float,
    variant: OrthogonalityVariant | str,
    options: QuadratureOptions = DEFAULT_OPTIONS,
) -> OrthogonalityResult:
    """Integrate one relation numerically.

    Returns:
        The integral, the closed-form value (0 off the diagonal) and the diagonal
        scale sqrt(d_k d_j) against which off-diagonal values are judged.
    """
    k, j = check_degree(k), check_degree(j)
    variant = OrthogonalityVariant(variant)
    y_cap = get_settings().y_cap
    if abs(eta) > y_cap:
        raise CapabilityError("|eta|", abs(eta), y_cap)
    top = max(k, j)
    # the theta integrand is a trigonometric polynomial of degree k + j
    gh_order = options.gh_order or top + 2
    points = options.torus_points or k + j + 2

    def arguments(thetas: NDArray, xi: NDArray) -> NDArray:
        if variant == OrthogonalityVariant.A:
            return xi + 1j * eta * np.sin(thetas)
        return xi + eta * np.sin(thetas) + 1j * eta * np.cos(thetas)

    def kernel(thetas: NDArray, xi: NDArray) -> NDArray:
        if variant == OrthogonalityVariant.A:
            return np.exp(-2.0 * xi * eta * np.cos(thetas))
        return np.exp(2.0 * xi * eta * np.sin(thetas) - eta * eta * np.cos(2.0 * thetas))

    def integrand(thetas: NDArray, xi: NDArray) -> NDArray:
        table = hermite_functions(top, arguments(thetas, xi))
        return (kernel(thetas, xi) * table[k] * np.conj(table[j]))[..., 0]

    def centers(thetas: NDArray) -> NDArray:
        if variant == OrthogonalityVariant.A:
            return -eta * np.cos(thetas)
        return np.zeros_like(thetas)

    value = torus_line_integral(
        integrand,
        centers,
        1,
        points,
        gauss_hermite_rule(gh_order),
        rtol=options.rtol,
        what=f"orthogonality relation {variant.value}",
    )
    diagonal_k = orthogonality_expected(k, eta, variant)
    diagonal_j = orthogonality_expected(j, eta, variant)
    return OrthogonalityResult(
        value=complex(value),
        expected=diagonal_k if k == j else 0.0,
        scale=float(np.sqrt(diagonal_k * diagonal_j)),
    )
