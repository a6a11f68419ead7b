"""Laguerre polynomials and the Laguerre functions phi_k on C^n x C^n."""

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import InputError
from src.special_functions.hermite import check_degree, check_finite

if TYPE_CHECKING:
    from src.phase_space.models import PhasePoint


@dataclass(frozen=True)
class LaguerreOrder:
    """Degree ``k`` and type ``nu`` of a generalized Laguerre polynomial L_k^nu."""

    k: int
    nu: float

    def __post_init__(self):
        check_degree(self.k)
        if not self.nu >= -0.5:
            raise InputError(f"Laguerre type must be >= -1/2, got {self.nu}")

    @classmethod
    def for_laguerre_functions(cls, k: int, n: int) -> "LaguerreOrder":
        """Type n-1, used by phi_k."""
        return cls(k=k, nu=float(n - 1))

    @classmethod
    def for_projection_kernel(cls, k: int, n: int) -> "LaguerreOrder":
        """Type n/2-1, used by the kernel of P_k."""
        return cls(k=k, nu=n / 2.0 - 1.0)


def laguerre_polys(k_max: int, nu: float, x: ArrayLike) -> NDArray:
    """Evaluate L_0^nu, ..., L_{k_max}^nu at every point of ``x``.

    Three-term recurrence (k+1)L_{k+1} = (2k+nu+1-x)L_k - (k+nu)L_{k-1}. For real
    x <= 0 every term is positive, so the forward recurrence is stable there.

    Returns:
        Array of shape ``(k_max + 1,) + x.shape``.
    """
    x = np.asarray(x)
    dtype = np.result_type(x.dtype, np.float64)
    x = x.astype(dtype, copy=False)
    out = np.empty((k_max + 1,) + x.shape, dtype=dtype)
    out[0] = 1.0
    if k_max >= 1:
        out[1] = 1.0 + nu - x
    for k in range(1, k_max):
        out[k + 1] = ((2 * k + nu + 1.0 - x) * out[k] - (k + nu) * out[k - 1]) / (k + 1)
    return out


def laguerre_poly(order: LaguerreOrder, x: complex) -> complex:
    """Generalized Laguerre polynomial L_k^nu(x) at a complex point."""
    x = complex(check_finite(x, "x"))
    return complex(laguerre_polys(order.k, order.nu, np.complex128(x))[order.k])


def squared_sum(z: ArrayLike) -> NDArray:
    """Bilinear square z^2 = sum_j z_j^2 over the last axis (no conjugation)."""
    z = np.asarray(z)
    return np.sum(z * z, axis=-1)


def laguerre_fn_values(k_max: int, n: int, z: ArrayLike, w: ArrayLike) -> NDArray:
    """phi_0..phi_{k_max} at complex points (z, w) whose last axis has length n."""
    q = squared_sum(z) + squared_sum(w)
    return laguerre_polys(k_max, float(n - 1), 0.5 * q) * np.exp(-0.25 * q)


def laguerre_fn(k: int, n: int, p: "PhasePoint") -> complex:
    """Laguerre function phi_k(z,w) = L_k^{n-1}(1/2(z^2+w^2)) e^{-1/4(z^2+w^2)}.

    At the point (2iy, 2iv) this equals L_k^{n-1}(-2(|y|^2+|v|^2)) e^{|y|^2+|v|^2},
    which is real and positive.
    """
    k = check_degree(k)
    if p.n != n:
        raise InputError(f"phase point has dimension {p.n}, expected {n}")
    return complex(laguerre_fn_values(k, n, p.z, p.w)[k])


def laguerre_generating_function(r: float, n: int, z: ArrayLike) -> complex:
    """(1-r)^{-n/2} e^{-1/4 (1+r)/(1-r) z^2}, generating function of L_k^{n/2-1}(z^2/2)e^{-z^2/4}."""
    q = complex(squared_sum(np.atleast_1d(np.asarray(z, dtype=np.complex128))))
    return complex((1.0 - r) ** (-n / 2.0) * np.exp(-0.25 * (1.0 + r) / (1.0 - r) * q))


def laguerre_fn_generating_function(r: float, n: int, z: ArrayLike, w: ArrayLike) -> complex:
    """(1-r)^{-n} e^{-1/4 (1+r)/(1-r)(z^2+w^2)}, generating function of phi_k."""
    q = complex(
        squared_sum(np.atleast_1d(np.asarray(z, dtype=np.complex128)))
        + squared_sum(np.atleast_1d(np.asarray(w, dtype=np.complex128)))
    )
    return complex((1.0 - r) ** (-n) * np.exp(-0.25 * (1.0 + r) / (1.0 - r) * q))
