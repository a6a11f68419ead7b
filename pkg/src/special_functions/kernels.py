"""Reproducing kernels of the Hermite projections P_k and their growth model."""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import InputError
from src.special_functions.hermite import (
    PI_HALF_INV,
    check_degree,
    check_finite,
    hermite_functions,
    level_indices,
)
from src.special_functions.laguerre import laguerre_polys, squared_sum

logger = logging.getLogger(__name__)


def _as_points(z: ArrayLike, w: ArrayLike, n: int) -> tuple[NDArray, NDArray]:
    z = check_finite(np.asarray(z, dtype=np.complex128).reshape(-1), "z")
    w = check_finite(np.asarray(w, dtype=np.complex128).reshape(-1), "w")
    if z.shape != (n,) or w.shape != (n,):
        raise InputError(f"points must have dimension {n}, got {z.shape[0]} and {w.shape[0]}")
    return z, w


def projection_kernel_levels(k_max: int, n: int, z: ArrayLike, w: ArrayLike) -> NDArray:
    """Phi_0(z,w), ..., Phi_{k_max}(z,w) from the Laguerre convolution formula.

    Phi_k(z,w) = pi^{-n/2} sum_j (-1)^j L_j(s/2) L_{k-j}(d/2) e^{-(s+d)/4}, with
    s = sum (z_j+w_j)^2, d = sum (z_j-w_j)^2 and Laguerre type n/2 - 1.
    """
    z, w = _as_points(z, w, n)
    s = complex(squared_sum(z + w))
    d = complex(squared_sum(z - w))
    nu = n / 2.0 - 1.0
    plus = laguerre_polys(k_max, nu, np.complex128(0.5 * s))
    minus = laguerre_polys(k_max, nu, np.complex128(0.5 * d))
    signs = (-1.0) ** np.arange(k_max + 1)
    sums = np.convolve(signs * plus, minus)[: k_max + 1]
    return PI_HALF_INV**n * np.exp(-0.25 * (s + d)) * sums


def projection_kernel(k: int, n: int, z: ArrayLike, w: ArrayLike) -> complex:
    """Kernel Phi_k(z,w) of the projection onto the k-th Hermite eigenspace.

    Args:
        k: Level.
        n: Dimension.
        z: Point of C^n.
        w: Point of C^n.

    Returns:
        The kernel value, computed from the Laguerre sum.
    """
    k = check_degree(k)
    return complex(projection_kernel_levels(k, n, z, w)[k])


def projection_kernel_direct(k: int, n: int, z: ArrayLike, w: ArrayLike) -> complex:
    """Brute-force Phi_k(z,w) = sum over |alpha| = k of Phi_alpha(z) Phi_alpha(w)."""
    k = check_degree(k)
    z, w = _as_points(z, w, n)
    tz = hermite_functions(k, z)
    tw = hermite_functions(k, w)
    total = 0.0 + 0.0j
    for alpha in level_indices(n, k):
        term = 1.0 + 0.0j
        for j, a in enumerate(alpha):
            term *= tz[a, j] * tw[a, j]
        total += term
    return complex(total)


def diagonal_kernel_levels(k_max: int, z: ArrayLike) -> NDArray:
    """Phi_k(z, conj z) = sum_{|alpha|=k} |Phi_alpha(z)|^2 for k = 0..k_max.

    Computed as a convolution of the per-coordinate |h_j(z_j)|^2 sequences, so
    every entry is a sum of nonnegative terms.
    """
    z = check_finite(np.asarray(z, dtype=np.complex128).reshape(-1), "z")
    table = np.abs(hermite_functions(k_max, z)) ** 2
    out = table[:, 0]
    for j in range(1, z.shape[0]):
        out = np.convolve(out, table[:, j])[: k_max + 1]
    return out


def perron_growth_bound(k: int, y: ArrayLike, n: int, rate: float = 1.0) -> float:
    """Growth model k^{3(n-1)/4} e^{2 rate sqrt(k) |y|} for Phi_k(z, conj z).

    ``rate = 1`` is the model as usually stated; the leading exponential of
    Phi_k(x+iy, x-iy) is e^{2 sqrt(2k) |y|}, which ``rate = sqrt(2)`` reproduces.

    Raises:
        InputError: If ``k < 1`` or ``rate <= 0``.
    """
    if int(k) != k or k < 1:
        raise InputError(f"growth bound needs k >= 1, got {k!r}")
    if not rate > 0:
        raise InputError(f"rate must be positive, got {rate}")
    y_norm = float(np.linalg.norm(check_finite(np.asarray(y, dtype=float).reshape(-1), "y")))
    return math.exp(0.75 * (n - 1) * math.log(k) + 2.0 * rate * math.sqrt(k) * y_norm)
