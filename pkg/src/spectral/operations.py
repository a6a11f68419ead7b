"""Analysis, synthesis, projections and semigroups on Hermite expansions."""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.config import get_settings
from src.exceptions import InputError
from src.phase_space.models import MultiIndex
from src.quadrature.integrals import check_doubling
from src.quadrature.rules import GaussHermiteRule, doubling_pair, gauss_hermite_rule
from src.special_functions.hermite import check_degree, check_finite, check_imaginary_part, hermite_functions
from src.special_functions.kernels import diagonal_kernel_levels
from src.spectral.decay import DecayProfile
from src.spectral.expansion import HermiteExpansion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EntireEvaluation:
    """F(z) for a truncated expansion, with a bound on the omitted levels."""

    value: complex
    tail_bound: float


def _analyze_once(
    f: Callable[[NDArray], ArrayLike], n: int, k_max: int, rule: GaussHermiteRule
) -> tuple[NDArray, NDArray]:
    m = rule.order
    table = hermite_functions(k_max, rule.nodes)
    coeffs = np.asarray(f(rule.grid(n)), dtype=np.complex128).reshape((m,) * n)
    magnitude = np.abs(coeffs)
    for _ in range(n):
        rest = coeffs.shape[1:]
        coeffs = rule.contract(table[:, :, None] * coeffs.reshape(m, -1)[None], axis=1)
        magnitude = rule.contract(np.abs(table)[:, :, None] * magnitude.reshape(m, -1)[None], axis=1)
        coeffs = np.moveaxis(coeffs.reshape((k_max + 1,) + rest), 0, -1)
        magnitude = np.moveaxis(magnitude.reshape((k_max + 1,) + rest), 0, -1)
    return coeffs, magnitude


def analyze(
    f: Callable[[NDArray], ArrayLike],
    n: int,
    k_max: int,
    rule: GaussHermiteRule | None = None,
    *,
    check: bool = True,
) -> HermiteExpansion:
    """Hermite coefficients c_alpha = (f, Phi_alpha) by tensor Gauss-Hermite quadrature.

    Args:
        f: Vectorized function of real points ``(P, n) -> (P,)`` with Gaussian decay.
        n: Dimension.
        k_max: Highest level kept.
        rule: Rule per coordinate; the configured order by default.
        check: Run the order-doubling test on all coefficients.

    Returns:
        The expansion truncated at ``k_max``.

    Raises:
        AccuracyError: If the coefficients are not converged.
    """
    k_max = check_degree(k_max, "k_max")
    settings = get_settings()
    rule = rule or gauss_hermite_rule(settings.gh_order)
    if check:
        coarse_rule, fine_rule = doubling_pair(rule)
        coarse, _ = _analyze_once(f, n, k_max, coarse_rule)
        dense, magnitude = _analyze_once(f, n, k_max, fine_rule)
        check_doubling("Hermite analysis", coarse, dense, magnitude, settings.quadrature_rtol)
    else:
        dense, _ = _analyze_once(f, n, k_max, rule)
    coeffs = {alpha: dense[alpha.entries] for alpha in MultiIndex.up_to_level(n, k_max)}
    logger.debug(f"Analyzed function into {len(coeffs)} Hermite coefficients (n={n}, k_max={k_max})")
    return HermiteExpansion(n, k_max, coeffs)


def synthesize(F: HermiteExpansion, xi: ArrayLike) -> complex | NDArray:
    """f(xi) = sum c_alpha Phi_alpha(xi) at real points of shape ``(n,)`` or ``(..., n)``."""
    xi = check_finite(np.asarray(xi), "xi")
    if np.iscomplexobj(xi):
        if np.any(xi.imag):
            raise InputError("synthesize takes real points; use evaluate_entire off the real axis")
        xi = xi.real
    values = F.evaluate(xi.astype(float), check_caps=False)
    return complex(values) if values.ndim == 0 else values


def evaluate_entire(
    F: HermiteExpansion,
    z: ArrayLike,
    profile: DecayProfile | None = None,
    horizon: int | None = None,
) -> EntireEvaluation:
    """Evaluate the entire extension F at z in C^n and bound the truncated levels.

    With a decay profile the tail bound is sum_{K_max < k <= horizon} Phi_k(z, conj z)^{1/2}
    C e^{-2 sqrt(k) t}, the Cauchy-Schwarz bound for each omitted level under the
    fitted model. Without one the expansion is taken as exact and the bound is 0.

    Raises:
        CapabilityError: If |Im z| exceeds the configured cap.
    """
    z = check_finite(np.asarray(z, dtype=np.complex128).reshape(-1), "z")
    if z.shape[0] != F.n:
        raise InputError(f"point has dimension {z.shape[0]}, expansion has {F.n}")
    check_imaginary_part(z)
    value = complex(F.evaluate(z))
    if profile is None:
        return EntireEvaluation(value=value, tail_bound=0.0)

    y_norm = float(np.linalg.norm(z.imag))
    if y_norm >= profile.t_hat:
        logger.warning(
            f"Evaluating at |Im z| = {y_norm:.3g}, beyond the fitted extension radius {profile.t_hat:.3g}"
        )
    horizon = horizon or get_settings().k_cap
    if horizon <= F.k_max:
        return EntireEvaluation(value=value, tail_bound=0.0)
    kernel = diagonal_kernel_levels(horizon, z)
    ks = np.arange(F.k_max + 1, horizon + 1)
    tail = float(np.sum(np.sqrt(kernel[ks]) * profile.model(ks)))
    return EntireEvaluation(value=value, tail_bound=tail)


def project(F: HermiteExpansion, k: int) -> tuple[HermiteExpansion, float]:
    """P_k F and rho_k = ||P_k f||_2.

    Raises:
        InputError: If ``k`` is outside 0..k_max.
    """
    if int(k) != k or not 0 <= k <= F.k_max:
        raise InputError(f"level must be in 0..{F.k_max}, got {k!r}")
    part = F.level_part(int(k))
    return part, float(np.sqrt(part.norm_squared()))


def semigroup(F: HermiteExpansion, t: float) -> HermiteExpansion:
    """e^{-tH} F: the level-k coefficients are multiplied by e^{-(2k+n)t}."""
    if not t > 0:
        raise InputError(f"semigroup time must be positive, got {t}")
    ks = np.arange(F.k_max + 1)
    return F.scale_levels(np.exp(-(2 * ks + F.n) * t))


def poisson_semigroup(F: HermiteExpansion, t: float) -> HermiteExpansion:
    """Level-k coefficients multiplied by e^{-2 sqrt(k) t}; produces data with rho_k ~ e^{-2 sqrt(k) t}."""
    if not t > 0:
        raise InputError(f"semigroup time must be positive, got {t}")
    ks = np.arange(F.k_max + 1)
    return F.scale_levels(np.exp(-2.0 * np.sqrt(ks) * t))


def inner_product(F: HermiteExpansion, G: HermiteExpansion) -> complex:
    return F.inner_product(G)


def norm_squared(F: HermiteExpansion) -> float:
    return F.norm_squared()


def level_norms(F: HermiteExpansion) -> NDArray:
    return F.level_norms()


def levels(F: HermiteExpansion) -> list[int]:
    return F.levels()
