"""Deterministic integration over R^n and the n-torus with order-doubling checks."""

import logging
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.config import get_settings
from src.exceptions import AccuracyError, InputError
from src.quadrature.rules import GaussHermiteRule, doubling_pair, gauss_hermite_rule, torus_rule

logger = logging.getLogger(__name__)

Integrand = Callable[[NDArray], ArrayLike]


def _unwrap(value: NDArray) -> complex | NDArray:
    return complex(value) if np.ndim(value) == 0 else value


def check_doubling(what: str, coarse: NDArray, fine: NDArray, reference: NDArray, rtol: float) -> None:
    """Raise AccuracyError unless |fine - coarse| <= rtol * reference entrywise.

    ``reference`` is the sum of absolute quadrature terms, so integrals that cancel
    to (nearly) zero are judged on the size of their terms.
    """
    diff = np.abs(np.asarray(fine) - np.asarray(coarse))
    excess = diff - rtol * np.asarray(reference)
    excess = np.where(np.isfinite(excess), excess, np.inf)
    if np.any(excess > 0):
        idx = int(np.argmax(excess))
        raise AccuracyError(
            what, complex(np.ravel(coarse)[idx]), complex(np.ravel(fine)[idx]), rtol
        )


def envelope_sum(
    g: Integrand,
    center: ArrayLike,
    scale: ArrayLike,
    rule: GaussHermiteRule,
) -> tuple[NDArray, NDArray]:
    """One Gauss-Hermite evaluation of int g(xi) dxi around ``center``.

    ``center`` has shape ``batch + (n,)`` and may be complex (contour shift). ``g``
    receives points of shape ``batch + (m**n, n)`` and returns ``batch + (m**n,) + tail``.

    Returns:
        ``(value, absolute_value)``, each of shape ``batch + tail``.
    """
    center = np.asarray(center)
    if center.ndim == 0:
        center = center.reshape(1)
    n = center.shape[-1]
    batch = center.shape[:-1]
    scale = np.broadcast_to(np.asarray(scale, dtype=float), (n,))
    if not np.all(scale > 0):
        raise InputError(f"scale must be positive, got {scale}")

    points = center[..., None, :] + scale * rule.grid(n)
    values = np.asarray(g(points))
    values = np.moveaxis(values, len(batch), 0)
    values = values.reshape((rule.order,) * n + values.shape[1:])
    total = values
    magnitude = np.abs(values)
    for _ in range(n):
        total = rule.contract(total)
        magnitude = rule.contract(magnitude)
    jacobian = float(np.prod(scale))
    return total * jacobian, magnitude * jacobian


def gaussian_envelope_integral(
    g: Integrand,
    center: ArrayLike,
    scale: ArrayLike = 1.0,
    rule: GaussHermiteRule | None = None,
    *,
    rtol: float | None = None,
    check: bool = True,
    what: str = "Gaussian envelope integral",
) -> complex | NDArray:
    """Integrate g over R^n with a Gauss-Hermite rule centred and scaled by the caller.

    The rule is applied as scale^n sum_i w_i e^{xi_i^2} g(center + scale xi_i), so g
    should look like a slowly varying factor times e^{-|(xi - center)/scale|^2}.
    With ``check`` the order is doubled and both results compared.

    Args:
        g: Vectorized integrand (see ``envelope_sum`` for shapes).
        center: Envelope centre, real or complex, shape ``(n,)`` or ``batch + (n,)``.
        scale: Envelope width, scalar or per coordinate.
        rule: Base rule; defaults to the configured order.
        rtol: Doubling tolerance relative to the absolute quadrature sum.
        check: Run the doubling test.
        what: Label used in errors and logs.

    Returns:
        The integral from the finer rule when checked.

    Raises:
        AccuracyError: If the doubling test fails.
    """
    settings = get_settings()
    rule = rule or gauss_hermite_rule(settings.gh_order)
    if not check:
        return _unwrap(envelope_sum(g, center, scale, rule)[0])
    rtol = settings.quadrature_rtol if rtol is None else rtol
    coarse_rule, fine_rule = doubling_pair(rule)
    coarse, _ = envelope_sum(g, center, scale, coarse_rule)
    fine, reference = envelope_sum(g, center, scale, fine_rule)
    check_doubling(what, coarse, fine, reference, rtol)
    logger.debug(f"{what}: orders {coarse_rule.order}/{fine_rule.order} agree")
    return _unwrap(fine)


def _torus_sum(g: Integrand, points: int, n: int) -> tuple[NDArray, NDArray]:
    values = np.asarray(g(torus_rule(points).grid(n)))
    volume = (2.0 * np.pi) ** n
    return volume * values.mean(axis=0), volume * np.abs(values).mean(axis=0)


def torus_integral(
    g: Integrand,
    points: int | None = None,
    n: int = 1,
    *,
    rtol: float | None = None,
    check: bool = True,
    what: str = "torus integral",
) -> complex | NDArray:
    """Integrate a 2 pi-periodic g over [0, 2 pi)^n with the uniform rule.

    ``g`` receives angles of shape ``(M**n, n)``. The result is (2 pi)^n times the grid
    average; trigonometric polynomials of degree < M are integrated exactly.
    """
    settings = get_settings()
    points = points or settings.torus_points
    if not check:
        return _unwrap(_torus_sum(g, points, n)[0])
    rtol = settings.quadrature_rtol if rtol is None else rtol
    coarse, _ = _torus_sum(g, points, n)
    fine, reference = _torus_sum(g, 2 * points, n)
    check_doubling(what, coarse, fine, reference, rtol)
    return _unwrap(fine)


def _torus_line_sum(
    g: Callable[[NDArray, NDArray], ArrayLike],
    centers_fn: Callable[[NDArray], NDArray],
    n_theta: int,
    points: int,
    scale: ArrayLike,
    rule: GaussHermiteRule,
) -> tuple[NDArray, NDArray]:
    thetas = torus_rule(points).grid(n_theta)
    centers = np.asarray(centers_fn(thetas))
    value, magnitude = envelope_sum(lambda xi: g(thetas[:, None, :], xi), centers, scale, rule)
    volume = (2.0 * np.pi) ** n_theta
    return volume * value.mean(axis=0), volume * magnitude.mean(axis=0)


def torus_line_integral(
    g: Callable[[NDArray, NDArray], ArrayLike],
    centers_fn: Callable[[NDArray], NDArray],
    n_theta: int,
    points: int | None = None,
    rule: GaussHermiteRule | None = None,
    scale: ArrayLike = 1.0,
    *,
    rtol: float | None = None,
    check: bool = True,
    what: str = "torus x line integral",
) -> complex | NDArray:
    """int_{[0,2pi)^{n_theta}} int_{R^n} g(theta, xi) dxi dtheta with an angle-dependent envelope.

    Args:
        g: Called with angles of shape ``(M**n_theta, 1, n_theta)`` and points of shape
            ``(M**n_theta, m**n, n)``; returns ``(M**n_theta, m**n) + tail``.
        centers_fn: Envelope centre for each angle vector, shape ``(M**n_theta, n)``.
        n_theta: Number of angles.
        points: Torus points per angle.
        rule: Gauss-Hermite rule per line coordinate.
        scale: Envelope width.

    Raises:
        AccuracyError: If doubling both the torus and the line orders changes the result.
    """
    settings = get_settings()
    points = points or settings.torus_points
    rule = rule or gauss_hermite_rule(settings.gh_order)
    if not check:
        return _unwrap(_torus_line_sum(g, centers_fn, n_theta, points, scale, rule)[0])
    rtol = settings.quadrature_rtol if rtol is None else rtol
    coarse_rule, fine_rule = doubling_pair(rule)
    coarse_points = points if fine_rule is not rule else max(1, points // 2)
    fine_points = 2 * points if fine_rule is not rule else points
    coarse, _ = _torus_line_sum(g, centers_fn, n_theta, coarse_points, scale, coarse_rule)
    fine, reference = _torus_line_sum(g, centers_fn, n_theta, fine_points, scale, fine_rule)
    check_doubling(what, coarse, fine, reference, rtol)
    return _unwrap(fine)
