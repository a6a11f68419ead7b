"""The operators pi(z, w) and the special Hermite functions Phi_{alpha,beta}.

pi(z, w)F(xi) = e^{i(z.xi + z.w/2)} F(xi + w), and
Phi_{alpha,beta}(z, w) = (2 pi)^{-n/2} (pi(z, w)Phi_alpha, Phi_beta).

Inner products over R^n are sesquilinear in the second argument.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.config import get_settings
from src.exceptions import AccuracyError, InputError
from src.phase_space.actions import act, symplectic_form, torus_action, torus_matrices
from src.phase_space.models import MultiIndex, PhasePoint, TorusElement
from src.quadrature.integrals import gaussian_envelope_integral, torus_integral
from src.quadrature.rules import GaussHermiteRule, gauss_hermite_rule
from src.special_functions.hermite import check_degree, check_finite, check_imaginary_part, hermite_functions
from src.spectral.expansion import HermiteExpansion

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi
BETA_SUM_START = 32
BETA_SUM_TAIL_RTOL = 1e-13


@dataclass(frozen=True)
class BetaSum:
    """Truncated sum_beta |Phi_{alpha,beta}(z,w)|^2 with its geometric tail estimate."""

    value: float
    tail: float
    levels: int


def _as_index(alpha: MultiIndex | Sequence[int]) -> MultiIndex:
    return alpha if isinstance(alpha, MultiIndex) else MultiIndex(tuple(alpha))


def _check_indices(alpha: MultiIndex, beta: MultiIndex, n: int) -> None:
    if alpha.n != n or beta.n != n:
        raise InputError(f"multi-indices {alpha}, {beta} do not match dimension {n}")
    check_degree(alpha.level, "|alpha|")
    check_degree(beta.level, "|beta|")


def _exact_rule(degree: int) -> GaussHermiteRule:
    """Smallest comfortable rule that is exact for polynomials of ``degree`` times the envelope."""
    return gauss_hermite_rule(degree // 2 + 2)


def apply_pi(F: HermiteExpansion, z: ArrayLike, w: ArrayLike, xi: ArrayLike) -> NDArray:
    """Vectorized pi(z, w)F(xi) with z, w, xi broadcast over leading axes; no caps checked."""
    z = np.asarray(z, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    xi = np.asarray(xi)
    phase = np.exp(1j * (np.sum(z * xi, axis=-1) + 0.5 * np.sum(z * w, axis=-1)))
    return phase * F.evaluate(xi + w, check_caps=False)


def pi_apply(p: PhasePoint, F: HermiteExpansion, xi: ArrayLike) -> complex | NDArray:
    """pi(z, w)F(xi) at real points xi, shape ``(n,)`` or ``(..., n)``.

    Raises:
        CapabilityError: If |Im w| exceeds the configured cap.
    """
    if p.n != F.n:
        raise InputError(f"phase point has dimension {p.n}, expansion has {F.n}")
    xi = check_finite(np.asarray(xi, dtype=float), "xi")
    check_imaginary_part(p.w)
    values = apply_pi(F, p.z, p.w, xi)
    return complex(values) if np.ndim(values) == 0 else values


def composition_phase(p: PhasePoint, q: PhasePoint) -> complex:
    """e^{i(z'.w - z.w')/2}, so that pi(p)pi(q) = composition_phase(p, q) pi(p + q)."""
    return complex(np.exp(0.5j * (q.z @ p.w - p.z @ q.w)))


def coordinate_overlaps(
    a: int,
    b_max: int,
    z: ArrayLike,
    w: ArrayLike,
    rule: GaussHermiteRule,
    check: bool = True,
) -> NDArray:
    """int e^{i z xi} h_a(xi + w) h_b(xi) dxi for b = 0..b_max, batched over scalars z, w.

    The integrand is a polynomial times e^{-(xi - c)^2} with complex centre
    c = (iz - w)/2, so a rule of order m is exact while a + b < 2m.

    Returns:
        Array of shape ``z.shape + (b_max + 1,)``.
    """
    z = np.asarray(z, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    z, w = np.broadcast_arrays(z, w)
    center = (0.5 * (1j * z - w))[..., None]

    def integrand(points: NDArray) -> NDArray:
        xi = points[..., 0]
        shifted = hermite_functions(a, xi + w[..., None])[a]
        table = np.moveaxis(hermite_functions(b_max, xi), 0, -1)
        return (np.exp(1j * z[..., None] * xi) * shifted)[..., None] * table

    return gaussian_envelope_integral(
        integrand, center, 1.0, rule, check=check, what="special Hermite overlap"
    )


def matrix_coefficients(
    alpha: MultiIndex,
    beta: MultiIndex,
    z: ArrayLike,
    w: ArrayLike,
    rule: GaussHermiteRule | None = None,
    check: bool = True,
) -> NDArray:
    """(pi(z, w)Phi_alpha, Phi_beta) for a batch of points z, w of shape ``(..., n)``.

    The integral factorizes over coordinates, so each factor is a one-dimensional
    Gauss-Hermite quadrature.
    """
    z = np.asarray(z, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    rule = rule or _exact_rule(max(a + b for a, b in zip(alpha, beta, strict=True)))
    value = np.exp(0.5j * np.sum(z * w, axis=-1))
    for j, (a, b) in enumerate(zip(alpha, beta, strict=True)):
        value = value * coordinate_overlaps(a, b, z[..., j], w[..., j], rule, check)[..., b]
    return value


def matrix_coefficient(
    alpha: MultiIndex | Sequence[int],
    beta: MultiIndex | Sequence[int],
    p: PhasePoint,
    rule: GaussHermiteRule | None = None,
) -> complex:
    """(pi(z, w)Phi_alpha, Phi_beta) = int pi(z, w)Phi_alpha(xi) Phi_beta(xi) dxi.

    Raises:
        AccuracyError: If the order-doubling test fails.
    """
    alpha, beta = _as_index(alpha), _as_index(beta)
    _check_indices(alpha, beta, p.n)
    return complex(matrix_coefficients(alpha, beta, p.z, p.w, rule))


def special_hermite(
    alpha: MultiIndex | Sequence[int],
    beta: MultiIndex | Sequence[int],
    p: PhasePoint,
    rule: GaussHermiteRule | None = None,
) -> complex:
    """Phi_{alpha,beta}(z, w) = (2 pi)^{-n/2} (pi(z, w)Phi_alpha, Phi_beta)."""
    return TWO_PI ** (-p.n / 2.0) * matrix_coefficient(alpha, beta, p, rule)


def fourier_mode_coefficient(
    m: Sequence[int],
    alpha: MultiIndex | Sequence[int],
    beta: MultiIndex | Sequence[int],
    xu: PhasePoint,
    points: int | None = None,
) -> complex:
    """(pi_m(x,u)Phi_alpha, Phi_beta) = (2 pi)^{-n} int (pi(k(theta).(x,u))Phi_alpha, Phi_beta) e^{-i m.theta} dtheta."""
    alpha, beta = _as_index(alpha), _as_index(beta)
    _check_indices(alpha, beta, xu.n)
    m = np.asarray(m, dtype=int).reshape(-1)
    if m.shape[0] != xu.n:
        raise InputError(f"mode has length {m.shape[0]}, expected {xu.n}")
    n = xu.n

    def integrand(thetas: NDArray) -> NDArray:
        z, w = act(torus_matrices(thetas), xu.z, xu.w)
        return matrix_coefficients(alpha, beta, z, w) * np.exp(-1j * thetas @ m)

    return complex(torus_integral(integrand, points, n, what="torus Fourier mode")) / TWO_PI**n


def homogeneity_check(
    alpha: MultiIndex | Sequence[int],
    beta: MultiIndex | Sequence[int],
    theta: TorusElement,
    xu: PhasePoint,
) -> float:
    """|Phi_{alpha,beta}(k(theta).(x,u)) - e^{i(beta - alpha).theta} Phi_{alpha,beta}(x,u)|."""
    if not xu.is_real:
        raise InputError("homogeneity check takes a real phase point")
    alpha, beta = _as_index(alpha), _as_index(beta)
    rotated = special_hermite(alpha, beta, torus_action(theta, xu))
    phase = np.exp(1j * np.dot(np.subtract(beta.entries, alpha.entries), theta.theta))
    return float(abs(rotated - phase * special_hermite(alpha, beta, xu)))


def pi_norm_squared(alpha: MultiIndex | Sequence[int], p: PhasePoint, rule: GaussHermiteRule | None = None) -> float:
    """int |pi(z, w)Phi_alpha(xi)|^2 dxi by direct quadrature over R^n.

    |e^{iz.xi}|^2 = e^{-2y.xi} moves the envelope of |Phi_alpha(xi + w)|^2 to -(u + y).
    """
    alpha = _as_index(alpha)
    _check_indices(alpha, alpha, p.n)
    F = HermiteExpansion.basis(alpha)
    rule = rule or _exact_rule(2 * max(alpha.entries))

    def integrand(points: NDArray) -> NDArray:
        return np.abs(apply_pi(F, p.z, p.w, points)) ** 2

    value = gaussian_envelope_integral(integrand, -(p.u + p.y), 1.0, rule, what="|pi(z,w)Phi_alpha|^2")
    return float(np.real(value))


def pi_norm_squared_closed(alpha: MultiIndex | Sequence[int], p: PhasePoint) -> float:
    """(2 pi)^{n/2} e^{u.y - v.x} Phi_{alpha,alpha}(2iy, 2iv)."""
    alpha = _as_index(alpha)
    value = special_hermite(alpha, alpha, p.doubled_imaginary())
    return float(TWO_PI ** (p.n / 2.0) * np.exp(symplectic_form(p)) * value.real)


def beta_sum(
    alpha: MultiIndex | Sequence[int],
    p: PhasePoint,
    tail_rtol: float = BETA_SUM_TAIL_RTOL,
    max_level: int | None = None,
) -> BetaSum:
    """sum over all beta of |Phi_{alpha,beta}(z, w)|^2, truncated by level.

    Per coordinate the overlaps are computed for b = 0..B at once; level sums are
    convolutions of the coordinate sequences. B doubles until the geometric tail
    estimate S_B q / (1 - q), q = S_B / S_{B-1}, falls below ``tail_rtol`` times the sum.

    Raises:
        AccuracyError: If the tail has not settled by ``max_level``.
    """
    alpha = _as_index(alpha)
    _check_indices(alpha, alpha, p.n)
    settings = get_settings()
    a_max = max(alpha.entries)
    limit = max_level or min(settings.k_cap, 2 * (settings.gh_order_max // 2) - a_max - 4)
    prefactor = abs(np.exp(0.5j * (p.z @ p.w))) ** 2 / TWO_PI**p.n

    levels = min(BETA_SUM_START, limit)
    while True:
        rule = _exact_rule(a_max + levels)
        level_sums = np.ones(1)
        for j, a in enumerate(alpha):
            overlaps = coordinate_overlaps(a, levels, p.z[j], p.w[j], rule)
            level_sums = np.convolve(level_sums, np.abs(overlaps) ** 2)[: levels + 1]
        level_sums = prefactor * level_sums
        total = float(level_sums.sum())
        last, previous = level_sums[-1], level_sums[-2]
        if last == 0:
            tail = 0.0
        elif previous > last:
            ratio = last / previous
            tail = float(last * ratio / (1.0 - ratio))
        else:
            tail = np.inf
        if tail < tail_rtol * total:
            logger.debug(f"beta sum for alpha={alpha} converged at level {levels} (tail {tail:.2e})")
            return BetaSum(value=total, tail=tail, levels=levels)
        if levels >= limit:
            raise AccuracyError("beta sum tail", total, total + tail, tail_rtol)
        levels = min(2 * levels, limit)
