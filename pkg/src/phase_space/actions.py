"""Actions of U(n) and its maximal torus on C^n x C^n, and Haar sampling."""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import InputError
from src.phase_space.models import PhasePoint, TorusElement, UnitaryElement

logger = logging.getLogger(__name__)


def act(sigma: ArrayLike, z: ArrayLike, w: ArrayLike) -> tuple[NDArray, NDArray]:
    """Vectorized sigma.(z, w) = (az - bw, aw + bz) for stacks of matrices and points.

    Args:
        sigma: Complex matrices, shape ``(..., n, n)``.
        z: Points, shape ``(..., n)``, broadcast against ``sigma``.
        w: Points, shape ``(..., n)``.
    """
    sigma = np.asarray(sigma)
    a = sigma.real
    b = sigma.imag
    z = np.asarray(z)[..., None]
    w = np.asarray(w)[..., None]
    return (a @ z - b @ w)[..., 0], (a @ w + b @ z)[..., 0]


def torus_matrices(theta: ArrayLike) -> NDArray:
    """diag(e^{i theta}) for a stack of angle vectors of shape ``(..., n)``."""
    theta = np.asarray(theta, dtype=float)
    n = theta.shape[-1]
    out = np.zeros(theta.shape + (n,), dtype=np.complex128)
    idx = np.arange(n)
    out[..., idx, idx] = np.exp(1j * theta)
    return out


def group_action(sigma: UnitaryElement, p: PhasePoint) -> PhasePoint:
    """sigma.(z, w) = (az - bw, aw + bz).

    Raises:
        InputError: If the dimensions of sigma and p differ.
    """
    if sigma.n != p.n:
        raise InputError(f"unitary element has dimension {sigma.n}, point has {p.n}")
    z, w = act(sigma.matrix, p.z, p.w)
    return PhasePoint(z, w)


def torus_action(theta: TorusElement, p: PhasePoint) -> PhasePoint:
    """k(theta).(z, w) = (z cos theta - w sin theta, w cos theta + z sin theta), coordinatewise."""
    if theta.n != p.n:
        raise InputError(f"torus element has dimension {theta.n}, point has {p.n}")
    c = np.cos(theta.theta)
    s = np.sin(theta.theta)
    return PhasePoint(c * p.z - s * p.w, c * p.w + s * p.z)


def symplectic_form(p: PhasePoint) -> float:
    """u.y - v.x, the symplectic pairing of the real and imaginary parts of p."""
    return float(p.u @ p.y - p.v @ p.x)


def haar_unitaries(n: int, size: int, rng: np.random.Generator) -> NDArray:
    """Draw ``size`` Haar-distributed n x n unitaries.

    QR of a complex Ginibre matrix, with the phases of diag(R) moved into Q so the
    factorization is unique and the law is exactly Haar.

    Returns:
        Complex array of shape ``(size, n, n)``.
    """
    if n < 1:
        raise InputError(f"dimension must be >= 1, got {n}")
    g = (rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    phases = d / np.abs(d)
    return q * phases[:, None, :]


def haar_sample(n: int, rng: np.random.Generator) -> UnitaryElement:
    """One Haar-distributed element of U(n); deterministic for a seeded generator."""
    return UnitaryElement.from_matrix(haar_unitaries(n, 1, rng)[0])
