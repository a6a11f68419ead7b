"""Hermite functions at real and complex arguments, and Mehler's kernel."""

import logging
from collections.abc import Iterable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.config import get_settings
from src.exceptions import CapabilityError, DomainError, InputError

logger = logging.getLogger(__name__)

PI_QUARTER_INV = np.pi**-0.25
PI_HALF_INV = np.pi**-0.5


def check_finite(values: ArrayLike, what: str = "argument") -> NDArray:
    """Convert to an array and reject NaN or Inf entries."""
    arr = np.asarray(values)
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{what} must be finite, got {values!r}")
    return arr


def check_degree(k: int, what: str = "degree") -> int:
    """Validate a nonnegative degree against the configured cap."""
    if int(k) != k or k < 0:
        raise InputError(f"{what} must be a nonnegative integer, got {k!r}")
    k_cap = get_settings().k_cap
    if k > k_cap:
        raise CapabilityError(what, k, k_cap)
    return int(k)


def check_imaginary_part(z: ArrayLike) -> None:
    """Reject arguments whose imaginary part exceeds the growth cap."""
    y_cap = get_settings().y_cap
    y_max = float(np.max(np.abs(np.imag(z)), initial=0.0))
    if y_max > y_cap:
        raise CapabilityError("|Im z|", y_max, y_cap)


def hermite_functions(k_max: int, z: ArrayLike) -> NDArray:
    """Evaluate h_0, ..., h_{k_max} at every point of ``z``.

    The recurrence runs on the functions themselves (Gaussian folded in), so
    degrees in the hundreds neither overflow nor lose the normalisation.
    Real input gives a real result; h_k(-z) = (-1)^k h_k(z) holds exactly.

    Args:
        k_max: Highest degree.
        z: Points, any shape, real or complex.

    Returns:
        Array of shape ``(k_max + 1,) + z.shape``.
    """
    z = np.asarray(z)
    dtype = np.result_type(z.dtype, np.float64)
    z = z.astype(dtype, copy=False)
    out = np.empty((k_max + 1,) + z.shape, dtype=dtype)
    out[0] = PI_QUARTER_INV * np.exp(-0.5 * z * z)
    if k_max >= 1:
        out[1] = np.sqrt(2.0) * z * out[0]
    for k in range(1, k_max):
        out[k + 1] = np.sqrt(2.0 / (k + 1)) * z * out[k] - np.sqrt(k / (k + 1)) * out[k - 1]
    return out


def hermite_fn_1d(k: int, z: complex) -> complex:
    """Normalized Hermite function h_k at a complex point.

    On the real axis this is the L^2-normalised eigenfunction of -d^2/dx^2 + x^2.

    Raises:
        CapabilityError: If ``k`` exceeds ``k_cap`` or |Im z| exceeds ``y_cap``.
        InputError: If ``z`` is not finite.
    """
    k = check_degree(k)
    z = complex(check_finite(z, "z"))
    check_imaginary_part(z)
    return complex(hermite_functions(k, np.complex128(z))[k])


def level_indices(n: int, k: int) -> list[tuple[int, ...]]:
    """All multi-indices of length ``n`` with entries summing to ``k``, in lexicographic order."""
    if n == 1:
        return [(k,)]
    out = []
    for first in range(k, -1, -1):
        for rest in level_indices(n - 1, k - first):
            out.append((first,) + rest)
    return out


def hermite_product(alphas: Sequence[Sequence[int]], tables: Sequence[NDArray]) -> NDArray:
    """Combine per-coordinate tables of h_j values into Phi_alpha values.

    Args:
        alphas: Multi-indices, each of length n.
        tables: ``tables[j][d]`` holds h_d at the j-th coordinate of every point.

    Returns:
        Array of shape ``(len(alphas),) + point_shape``.
    """
    out = []
    for alpha in alphas:
        value = tables[0][alpha[0]]
        for j in range(1, len(alpha)):
            value = value * tables[j][alpha[j]]
        out.append(value)
    return np.stack(out)


def coordinate_tables(k_max: int, points: ArrayLike) -> list[NDArray]:
    """Per-coordinate h_0..h_{k_max} tables for points whose last axis is the coordinate."""
    points = np.asarray(points)
    return [hermite_functions(k_max, points[..., j]) for j in range(points.shape[-1])]


def hermite_fn_nd(alpha: Iterable[int], z: Sequence[complex]) -> complex:
    """Tensor-product Hermite function Phi_alpha(z) = prod_j h_{alpha_j}(z_j)."""
    entries = tuple(int(a) for a in alpha)
    z = check_finite(np.asarray(z, dtype=np.complex128).reshape(-1), "z")
    if len(entries) != z.shape[0]:
        raise InputError(f"multi-index has length {len(entries)} but point has dimension {z.shape[0]}")
    for a in entries:
        check_degree(a)
    check_imaginary_part(z)
    value = 1.0 + 0.0j
    for a, zj in zip(entries, z, strict=True):
        value *= complex(hermite_functions(a, zj)[a])
    return value


def mehler_kernel(r: float, xi: ArrayLike, eta: ArrayLike) -> complex | NDArray:
    """Closed form of sum_k h_k(xi) h_k(eta) r^k.

    The exponent is written as -(1-r)/(4(1+r))(xi+eta)^2 - (1+r)/(4(1-r))(xi-eta)^2,
    which avoids cancelling two large terms near the diagonal when r is close to 1.

    Raises:
        DomainError: If |r| > 1 - mehler_eps.
    """
    eps = get_settings().mehler_eps
    r = float(r)
    if not abs(r) <= 1.0 - eps:
        raise DomainError(f"Mehler kernel needs |r| <= 1 - {eps:g}, got r = {r}")
    xi = check_finite(np.asarray(xi, dtype=np.complex128), "xi")
    eta = check_finite(np.asarray(eta, dtype=np.complex128), "eta")
    s = xi + eta
    d = xi - eta
    exponent = -(1.0 - r) / (4.0 * (1.0 + r)) * s * s - (1.0 + r) / (4.0 * (1.0 - r)) * d * d
    value = PI_HALF_INV / np.sqrt(1.0 - r * r) * np.exp(exponent)
    return complex(value) if value.ndim == 0 else value


def mehler_series(r: float, xi: complex, eta: complex, k_max: int) -> tuple[complex, float]:
    """Truncated Mehler series and its absolute counterpart.

    Returns:
        ``(sum_{k<=k_max} h_k(xi)h_k(eta)r^k, sum_{k<=k_max} |h_k(xi)h_k(eta)||r|^k)``;
        the second value is the conditioning scale of the first.
    """
    k_max = check_degree(k_max, "k_max")
    table = hermite_functions(k_max, np.array([xi, eta], dtype=np.complex128))
    terms = table[:, 0] * table[:, 1] * float(r) ** np.arange(k_max + 1)
    return complex(np.sum(terms)), float(np.sum(np.abs(terms)))
