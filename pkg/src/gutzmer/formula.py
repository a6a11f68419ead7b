"""Gutzmer's formula for Hermite expansions, its polarization and its converse.

For F the entire extension of f = sum c_alpha Phi_alpha,

    int_{R^n} int_K |pi(sigma.(z,w))F(xi)|^2 d sigma d xi
        = e^{u.y - v.x} sum_k k!(n-1)!/(k+n-1)! phi_k(2iy, 2iv) ||P_k f||^2.

The left side is integrated directly: over the maximal torus and R^n by
quadrature, and for n >= 2 over the rest of K by Haar Monte Carlo.
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from src.exceptions import InputError
from src.gutzmer.models import (
    ConverseReport,
    GutzmerReport,
    KAverageResult,
    PolarizedResult,
    QuadratureOptions,
    SideEstimate,
)
from src.phase_space.actions import act, symplectic_form, torus_matrices
from src.phase_space.models import MultiIndex, PhasePoint
from src.phase_space.operators import apply_pi, matrix_coefficients, special_hermite
from src.quadrature.integrals import envelope_sum, torus_line_integral
from src.quadrature.monte_carlo import MonteCarloEstimate, haar_integral_mc
from src.quadrature.rules import gauss_hermite_rule, torus_rule
from src.special_functions.hermite import check_imaginary_part
from src.special_functions.laguerre import laguerre_fn_values
from src.spectral.decay import decay_estimate
from src.spectral.expansion import HermiteExpansion

logger = logging.getLogger(__name__)

DEFAULT_OPTIONS = QuadratureOptions()
MC_POINT_BUDGET = 2_000_000


def gutzmer_weight(k: int, n: int) -> float:
    """k!(n-1)!/(k+n-1)!, the reciprocal of phi_k(0, 0)."""
    return 1.0 / math.comb(k + n - 1, k)


def gutzmer_weights(k_max: int, n: int) -> NDArray:
    return np.array([gutzmer_weight(k, n) for k in range(k_max + 1)])


def _check_point(F: HermiteExpansion, p: PhasePoint) -> None:
    if p.n != F.n:
        raise InputError(f"phase point has dimension {p.n}, expansion has {F.n}")
    check_imaginary_part(np.concatenate([p.z, p.w]))


def _orders(options: QuadratureOptions, k_max: int) -> tuple[int, int]:
    """(Gauss-Hermite order, torus points); both exact for levels <= k_max when unset."""
    return options.gh_order or k_max + 2, options.torus_points or k_max + 2


def _rotated(thetas: NDArray, z: NDArray, w: NDArray) -> tuple[NDArray, NDArray]:
    """k(theta).(z, w) coordinatewise; angles and points broadcast."""
    c, s = np.cos(thetas), np.sin(thetas)
    return c * z - s * w, c * w + s * z


def _sesquilinear(F: HermiteExpansion, G: HermiteExpansion, z: NDArray, w: NDArray, xi: NDArray) -> NDArray:
    left = apply_pi(F, z, w, xi)
    if G is F:
        return np.abs(left) ** 2 + 0j
    return left * np.conj(apply_pi(G, z, w, xi))


def _torus_average(
    F: HermiteExpansion, G: HermiteExpansion, p: PhasePoint, gh_order: int, points: int, check: bool, rtol: float
) -> complex:
    """(2 pi)^{-n} int_D int_{R^n} pi(k(theta)p)F conj(pi(k(theta)p)G) dxi dtheta."""
    n = p.n

    def integrand(thetas: NDArray, xi: NDArray) -> NDArray:
        z, w = _rotated(thetas, p.z, p.w)
        return _sesquilinear(F, G, z, w, xi)

    def centers(thetas: NDArray) -> NDArray:
        z, w = _rotated(thetas, p.z, p.w)
        return -(w.real + z.imag)

    value = torus_line_integral(
        integrand,
        centers,
        n,
        points,
        gauss_hermite_rule(gh_order),
        rtol=rtol,
        check=check,
        what="Gutzmer torus x line integral",
    )
    return complex(value) / (2.0 * np.pi) ** n


def _orbit_values(
    F: HermiteExpansion, G: HermiteExpansion, p: PhasePoint, sigmas: NDArray, gh_order: int, points: int
) -> NDArray:
    """Torus-and-line integral at sigma.p for every sigma of a stack, without doubling."""
    n = p.n
    rule = gauss_hermite_rule(gh_order)
    thetas = torus_rule(points).grid(n)
    z_all, w_all = act(sigmas, p.z, p.w)
    per_sigma = thetas.shape[0] * rule.order**n
    step = max(1, MC_POINT_BUDGET // per_sigma)
    out = []
    for start in range(0, sigmas.shape[0], step):
        z, w = _rotated(thetas[None], z_all[start : start + step, None, :], w_all[start : start + step, None, :])
        centers = -(w.real + z.imag)

        def integrand(xi: NDArray, z=z, w=w) -> NDArray:
            return _sesquilinear(F, G, z[:, :, None, :], w[:, :, None, :], xi)

        value, _ = envelope_sum(integrand, centers, 1.0, rule)
        out.append(value.mean(axis=1))
    return np.concatenate(out)


def _orbit_integral(
    F: HermiteExpansion, G: HermiteExpansion, p: PhasePoint, options: QuadratureOptions
) -> SideEstimate:
    """int_K int_{R^n} pi(sigma.p)F conj(pi(sigma.p)G) with normalized Haar measure."""
    n = p.n
    gh_order, points = _orders(options, max(F.k_max, G.k_max))
    if n == 1:
        value = _torus_average(F, G, p, gh_order, points, True, options.rtol)
        return SideEstimate(value=value, gh_order=gh_order, torus_points=points)

    # validate the orders on the identity element before the Monte Carlo sweep
    _torus_average(F, G, p, gh_order, points, True, options.rtol)
    estimate = haar_integral_mc(
        lambda sigmas: _orbit_values(F, G, p, sigmas, gh_order, points),
        n,
        options.mc_samples,
        options.seed,
        chunk_size=options.chunk_size,
        workers=options.workers,
    )
    scale = max(abs(estimate.estimate), 1e-300)
    flagged = estimate.stderr > options.mc_stderr_budget * scale
    if flagged:
        logger.warning(
            f"Haar MC stderr {estimate.stderr:.3e} exceeds {options.mc_stderr_budget:.1e} of the estimate"
        )
    return SideEstimate(
        value=complex(estimate.estimate),
        stderr=estimate.stderr,
        gh_order=gh_order,
        torus_points=points,
        mc_samples=estimate.samples,
        seed=estimate.seed,
        flagged=flagged,
    )


def gutzmer_lhs(F: HermiteExpansion, p: PhasePoint, options: QuadratureOptions = DEFAULT_OPTIONS) -> SideEstimate:
    """int_{R^n} int_K |pi(sigma.(z,w))F(xi)|^2 d sigma d xi.

    Raises:
        AccuracyError: If the deterministic part fails its doubling test.
        InputError: For n >= 2 without a seed.
    """
    _check_point(F, p)
    estimate = _orbit_integral(F, F, p, options)
    return estimate.model_copy(update={"value": complex(estimate.value.real, 0.0)})


def _weighted_level_sum(level_products: NDArray, n: int, p: PhasePoint) -> complex:
    k_max = level_products.shape[0] - 1
    phi = laguerre_fn_values(k_max, n, 2j * p.y, 2j * p.v).real
    return complex(np.exp(symplectic_form(p)) * np.sum(gutzmer_weights(k_max, n) * phi * level_products))


def gutzmer_rhs(F: HermiteExpansion, p: PhasePoint) -> tuple[float, float]:
    """e^{u.y - v.x} sum_k k!(n-1)!/(k+n-1)! phi_k(2iy, 2iv) ||P_k f||^2.

    Returns:
        ``(value, tail)``; the tail is 0 because the expansion is finite.
    """
    _check_point(F, p)
    return _weighted_level_sum(F.level_norms() ** 2, F.n, p).real, 0.0


def gutzmer_check(F: HermiteExpansion, p: PhasePoint, options: QuadratureOptions = DEFAULT_OPTIONS) -> GutzmerReport:
    """Evaluate both sides and compare.

    Deterministic (n = 1) checks pass when the relative error is at most
    ``options.rtol``; Monte Carlo checks pass when the error is at most
    max(mc_floor_rtol * rhs, mc_sigma * stderr).
    """
    lhs = gutzmer_lhs(F, p, options)
    rhs, tail = gutzmer_rhs(F, p)
    abs_error = abs(lhs.value.real - rhs)
    rel_error = abs_error / abs(rhs) if rhs else abs_error
    if lhs.stderr is None:
        tolerance = options.rtol * abs(rhs)
    else:
        tolerance = max(options.mc_floor_rtol * abs(rhs), options.mc_sigma * lhs.stderr)
    report = GutzmerReport(
        x=p.x.tolist(),
        y=p.y.tolist(),
        u=p.u.tolist(),
        v=p.v.tolist(),
        lhs=lhs.value.real,
        lhs_stderr=lhs.stderr,
        rhs=rhs,
        rhs_tail=tail,
        abs_error=abs_error,
        rel_error=rel_error,
        tolerance=tolerance,
        passed=abs_error <= tolerance,
        gh_order=lhs.gh_order,
        torus_points=lhs.torus_points,
        mc_samples=lhs.mc_samples,
        seed=lhs.seed,
        flagged=lhs.flagged,
    )
    logger.debug(f"Gutzmer at {p}: lhs={report.lhs:.12g} rhs={report.rhs:.12g} passed={report.passed}")
    return report


def polarized_gutzmer(
    F: HermiteExpansion, G: HermiteExpansion, p: PhasePoint, options: QuadratureOptions = DEFAULT_OPTIONS
) -> PolarizedResult:
    """Sesquilinear Gutzmer: the integral of pi(sigma.p)F conj(pi(sigma.p)G) against
    e^{u.y - v.x} sum_k weight_k phi_k(2iy, 2iv) (P_k f, P_k g)."""
    if F.n != G.n:
        raise InputError(f"expansions have dimensions {F.n} and {G.n}")
    _check_point(F, p)
    k_max = max(F.k_max, G.k_max)
    products = np.zeros(k_max + 1, dtype=np.complex128)
    for alpha, c in F.coeffs.items():
        products[alpha.level] += c * np.conj(G.coefficient(alpha))
    lhs = _orbit_integral(F, G, p, options)
    return PolarizedResult(lhs=lhs.value, rhs=_weighted_level_sum(products, F.n, p), lhs_stderr=lhs.stderr)


def torus_average_identity(
    F: HermiteExpansion, p: PhasePoint, options: QuadratureOptions = DEFAULT_OPTIONS
) -> tuple[float, float]:
    """Torus-only identity, deterministic in every dimension.

    (2 pi)^{-n} int_D int |pi(k(theta).(z,w))F|^2 = (2 pi)^{n/2} e^{u.y - v.x} sum_alpha
    Phi_{alpha,alpha}(2iy, 2iv) |c_alpha|^2.

    Returns:
        ``(lhs, rhs)``.
    """
    _check_point(F, p)
    gh_order, points = _orders(options, F.k_max)
    lhs = _torus_average(F, F, p, gh_order, points, True, options.rtol).real
    doubled = p.doubled_imaginary()
    diagonal = sum(abs(c) ** 2 * special_hermite(alpha, alpha, doubled).real for alpha, c in F.coeffs.items())
    rhs = (2.0 * np.pi) ** (p.n / 2.0) * np.exp(symplectic_form(p)) * diagonal
    return lhs, float(rhs)


def _k_average_integrand(alpha: MultiIndex, xu: PhasePoint):
    def integrand(sigmas: NDArray) -> NDArray:
        z, w = act(sigmas, xu.z, xu.w)
        return matrix_coefficients(alpha, alpha, z, w).real

    return integrand


def k_average_verify(
    alpha: MultiIndex, xu: PhasePoint, options: QuadratureOptions = DEFAULT_OPTIONS
) -> KAverageResult:
    """(2 pi)^{n/2} int_K Phi_{alpha,alpha}(sigma.(x,u)) d sigma against weight_k phi_k(x,u).

    For n = 1 the group is the circle and the average is a torus quadrature.
    """
    if not xu.is_real:
        raise InputError("K-average identity takes a real phase point")
    if alpha.n != xu.n:
        raise InputError(f"multi-index {alpha} does not match dimension {xu.n}")
    n, k = xu.n, alpha.level
    rhs = gutzmer_weight(k, n) * float(laguerre_fn_values(k, n, xu.z, xu.w)[k].real)
    integrand = _k_average_integrand(alpha, xu)
    if n == 1:
        points = options.torus_points or 2 * k + 2
        thetas = torus_rule(points).grid(1)
        lhs = float(np.mean(integrand(torus_matrices(thetas))))
        return KAverageResult(lhs=lhs, rhs=rhs, residual=abs(lhs - rhs), stderr=0.0)
    estimate = haar_integral_mc(
        integrand, n, options.mc_samples, options.seed, chunk_size=options.chunk_size, workers=options.workers
    )
    return KAverageResult(
        lhs=float(estimate.estimate),
        rhs=rhs,
        residual=abs(float(estimate.estimate) - rhs),
        stderr=estimate.stderr,
        samples=estimate.samples,
        seed=estimate.seed,
    )


def k_average_difference(
    alpha: MultiIndex, beta: MultiIndex, xu: PhasePoint, options: QuadratureOptions = DEFAULT_OPTIONS
) -> MonteCarloEstimate:
    """Paired Haar estimate of the difference of the K-averages of Phi_{alpha,alpha} and Phi_{beta,beta}."""
    first = _k_average_integrand(alpha, xu)
    second = _k_average_integrand(beta, xu)
    return haar_integral_mc(
        lambda sigmas: first(sigmas) - second(sigmas),
        xu.n,
        options.mc_samples,
        options.seed,
        chunk_size=options.chunk_size,
        workers=options.workers,
    )


def converse_decay_check(F: HermiteExpansion, p: PhasePoint, k_min: int = 4) -> ConverseReport:
    """Per-level Gutzmer terms at p and the decay of rho_k against r = |(y, v)|.

    ``bounded`` holds when the fitted decay rate exceeds r, i.e. rho_k e^{2 sqrt(k) r}
    stays bounded under the fitted model.
    """
    _check_point(F, p)
    rho = F.level_norms()
    k_max = F.k_max
    phi = laguerre_fn_values(k_max, F.n, 2j * p.y, 2j * p.v).real
    terms = np.exp(symplectic_form(p)) * gutzmer_weights(k_max, F.n) * phi * rho**2
    r = float(np.sqrt(p.y @ p.y + p.v @ p.v))
    profile = decay_estimate(F, k_min)
    ks = np.arange(k_max + 1)
    scaled = rho * np.exp(2.0 * np.sqrt(ks) * r)
    return ConverseReport(
        r=r,
        rhs=float(terms.sum()),
        terms=terms.tolist(),
        t_hat=profile.t_hat,
        scaled_max=float(scaled.max()),
        bounded=profile.t_hat > r,
    )
