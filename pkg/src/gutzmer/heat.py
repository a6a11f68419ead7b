"""Heat kernels and the weighted norm characterizing the image of e^{-tH}."""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import AccuracyError, DomainError, InputError
from src.gutzmer.formula import DEFAULT_OPTIONS, gutzmer_weight
from src.gutzmer.models import HeatWeight, LaguerreHeatResult, QuadratureOptions
from src.quadrature.integrals import gaussian_envelope_integral
from src.quadrature.rules import gauss_hermite_rule
from src.special_functions.hermite import check_degree
from src.special_functions.laguerre import laguerre_fn_values
from src.spectral.expansion import HermiteExpansion

logger = logging.getLogger(__name__)

# convergence of the Laguerre-heat integral is required as coth(2t) > 2
LAGUERRE_HEAT_COTH_MIN = 2.0


def heat_kernel_p(t: float, y: ArrayLike, v: ArrayLike) -> float | NDArray:
    """p_t(y, v) = (2 pi)^{-n} (sinh t)^{-n} e^{-coth(t)(|y|^2 + |v|^2)/4}."""
    y = np.asarray(y, dtype=float)
    v = np.asarray(v, dtype=float)
    if y.shape != v.shape:
        raise InputError(f"y and v must have the same shape, got {y.shape} and {v.shape}")
    n = y.shape[-1] if y.ndim else 1
    value = HeatWeight(t=t, n=n).heat_kernel(np.atleast_1d(y), np.atleast_1d(v))
    return float(value) if np.ndim(value) == 0 else value


def heat_kernel_total(t: float, n: int) -> float:
    """int p_t(y, v) dy dv = (2 / cosh t)^n."""
    HeatWeight(t=t, n=n)
    return float((2.0 / np.cosh(t)) ** n)


def heat_kernel_integral(t: float, n: int, order: int = 8) -> float:
    """int p_t over R^{2n} by Gauss-Hermite quadrature with the kernel's own width."""
    weight = HeatWeight(t=t, n=n)
    scale = 2.0 * np.sqrt(np.tanh(t))

    def integrand(points: NDArray) -> NDArray:
        return weight.heat_kernel(points[..., :n], points[..., n:])

    value = gaussian_envelope_integral(
        integrand, np.zeros(2 * n), scale, gauss_hermite_rule(order), what="heat kernel mass"
    )
    return float(np.real(value))


def laguerre_heat_closed(k: int, n: int, t: float) -> float:
    """Closed form 2^{-n} e^{2(2k+n)t} of the Laguerre-heat integral."""
    return float(2.0 ** (-n) * np.exp(2.0 * (2 * k + n) * t))


def laguerre_heat_integral(
    k: int, n: int, t: float, options: QuadratureOptions = DEFAULT_OPTIONS
) -> LaguerreHeatResult:
    """k!(n-1)!/(k+n-1)! int phi_k(2iy, 2iv) p_{2t}(2y, 2v) dy dv.

    The integrand is L_k^{n-1}(-2r^2) times e^{-(coth(2t) - 1) r^2}, integrated by a
    2n-dimensional Gauss-Hermite rule of that width.

    Raises:
        DomainError: Unless coth(2t) > 2.
    """
    k = check_degree(k)
    weight = HeatWeight(t=2.0 * t, n=n)
    coth = 1.0 / np.tanh(2.0 * t)
    if not coth > LAGUERRE_HEAT_COTH_MIN:
        raise DomainError(f"Laguerre-heat integral needs coth(2t) > 2, got {coth:.4g} at t = {t}")
    scale = 1.0 / np.sqrt(coth - 1.0)
    order = options.gh_order or k + 2

    def integrand(points: NDArray) -> NDArray:
        y, v = points[..., :n], points[..., n:]
        phi = laguerre_fn_values(k, n, 2j * y, 2j * v)[k].real
        return phi * weight.heat_kernel(2.0 * y, 2.0 * v)

    value = gaussian_envelope_integral(
        integrand,
        np.zeros(2 * n),
        scale,
        gauss_hermite_rule(order),
        what="Laguerre-heat integral",
    )
    result = gutzmer_weight(k, n) * float(np.real(value))
    return LaguerreHeatResult(value=result, model=laguerre_heat_closed(k, n, t))


def image_norm_closed(F: HermiteExpansion, t: float) -> float:
    """(2 pi)^{n/2} sum_k e^{2(2k+n)t} rho_k^2, the weighted norm of any finite expansion."""
    HeatWeight(t=t, n=F.n)
    ks = np.arange(F.k_max + 1)
    return float((2.0 * np.pi) ** (F.n / 2.0) * np.sum(np.exp(2.0 * (2 * ks + F.n) * t) * F.level_norms() ** 2))


def image_norm(F: HermiteExpansion, t: float, options: QuadratureOptions = DEFAULT_OPTIONS) -> float:
    """int int |F(x + iy)|^2 U_t(x, y) dx dy.

    For F = e^{-tH} f this equals (2 pi)^{n/2} ||f||^2. The envelope widths are
    (1 - tanh 2t)^{-1/2} in x and (coth 2t - 1)^{-1/2} in y.

    Raises:
        DomainError: If the order-doubling test fails, meaning the expansion carries
            weight the configured order cannot resolve at this t.
    """
    n = F.n
    weight = HeatWeight(t=t, n=n)
    scales = np.concatenate(
        [
            np.full(n, 1.0 / np.sqrt(1.0 - np.tanh(2.0 * t))),
            np.full(n, 1.0 / np.sqrt(1.0 / np.tanh(2.0 * t) - 1.0)),
        ]
    )

    def integrand(points: NDArray) -> NDArray:
        x, y = points[..., :n], points[..., n:]
        return np.abs(F.evaluate(x + 1j * y, check_caps=False)) ** 2 * weight.image_weight(x, y)

    try:
        value = gaussian_envelope_integral(
            integrand,
            np.zeros(2 * n),
            scales,
            gauss_hermite_rule(options.image_order),
            rtol=options.rtol,
            what="U_t-weighted norm",
        )
    except AccuracyError as exc:
        raise DomainError(
            f"weighted norm at t = {t} does not converge at order {options.image_order}; "
            f"the expansion is not resolved as an image of e^(-tH) ({exc})"
        )
    value = float(np.real(value))
    if not np.isfinite(value):
        raise DomainError(f"weighted norm at t = {t} is not finite")
    return value
