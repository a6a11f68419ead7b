"""Gauss-Hermite and uniform torus rules."""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import eigh_tridiagonal

from src.config import get_settings
from src.exceptions import CapabilityError, InputError
from src.special_functions.hermite import PI_HALF_INV, hermite_functions

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaussHermiteRule:
    """m-point rule for integrals against e^{-xi^2} over R.

    ``scaled_weights`` are w_i e^{xi_i^2}; they stay finite at every supported
    order, while ``weights`` underflow to 0 at the outermost nodes of large rules.
    Nodes are exactly antisymmetric: nodes[i] == -nodes[m - 1 - i].
    """

    order: int
    nodes: NDArray
    weights: NDArray
    scaled_weights: NDArray

    @property
    def half_weights(self) -> NDArray:
        return self.scaled_weights[: (self.order + 1) // 2]

    def fold(self, values: NDArray, axis: int = 0) -> NDArray:
        """Add the values at mirrored nodes; the result has ceil(m/2) entries along axis 0.

        Odd functions of the node fold to exact zeros.
        """
        v = np.moveaxis(np.asarray(values), axis, 0)
        h = self.order // 2
        folded = v[:h] + v[::-1][:h]
        if self.order % 2:
            folded = np.concatenate([folded, v[h : h + 1]], axis=0)
        return folded

    def contract(self, values: NDArray, axis: int = 0) -> NDArray:
        """sum_i w_i e^{xi_i^2} values[i] along ``axis`` (which is removed)."""
        return np.tensordot(self.half_weights, self.fold(values, axis), axes=(0, 0))

    def grid(self, n: int) -> NDArray:
        """Tensor-product nodes, shape ``(m**n, n)``, first coordinate slowest."""
        mesh = np.meshgrid(*([self.nodes] * n), indexing="ij")
        return np.stack(mesh, axis=-1).reshape(-1, n)


@dataclass(frozen=True)
class TorusRule:
    """M equispaced angles per coordinate; exact for e^{im theta} with |m| < M."""

    points: int

    @property
    def nodes(self) -> NDArray:
        return 2.0 * np.pi * np.arange(self.points) / self.points

    def grid(self, n: int) -> NDArray:
        """Angle vectors of [0, 2 pi)^n, shape ``(M**n, n)``."""
        mesh = np.meshgrid(*([self.nodes] * n), indexing="ij")
        return np.stack(mesh, axis=-1).reshape(-1, n)


@lru_cache(maxsize=64)
def _build_rule(m: int) -> GaussHermiteRule:
    if m == 1:
        nodes = np.zeros(1)
    else:
        off_diagonal = np.sqrt(np.arange(1, m) / 2.0)
        nodes = eigh_tridiagonal(np.zeros(m), off_diagonal, eigvals_only=True)
        # one Newton step on h_m, whose derivative is sqrt(2m) h_{m-1} - xi h_m
        table = hermite_functions(m, nodes)
        derivative = np.sqrt(2.0 * m) * table[m - 1] - nodes * table[m]
        nodes = nodes - table[m] / derivative
        nodes = 0.5 * (nodes - nodes[::-1])
    h_prev = hermite_functions(m - 1, nodes)[m - 1]
    scaled_weights = 1.0 / (m * h_prev * h_prev)
    scaled_weights = 0.5 * (scaled_weights + scaled_weights[::-1])
    weights = scaled_weights * np.exp(-nodes * nodes)
    for arr in (nodes, weights, scaled_weights):
        arr.setflags(write=False)
    logger.debug(f"Built Gauss-Hermite rule of order {m} (weight sum error {weights.sum() * PI_HALF_INV - 1:.2e})")
    return GaussHermiteRule(order=m, nodes=nodes, weights=weights, scaled_weights=scaled_weights)


def gauss_hermite_rule(m: int) -> GaussHermiteRule:
    """Golub-Welsch Gauss-Hermite rule of order ``m``.

    Nodes are eigenvalues of the symmetric Jacobi matrix, polished by one Newton
    step and symmetrized; weights come from 1/(m h_{m-1}(xi)^2).

    Raises:
        InputError: If ``m < 1``.
        CapabilityError: If ``m`` exceeds the configured maximum order.
    """
    if int(m) != m or m < 1:
        raise InputError(f"Gauss-Hermite order must be a positive integer, got {m!r}")
    limit = get_settings().gh_order_max
    if m > limit:
        raise CapabilityError("Gauss-Hermite order", m, limit)
    return _build_rule(int(m))


def doubling_pair(rule: GaussHermiteRule) -> tuple[GaussHermiteRule, GaussHermiteRule]:
    """(coarse, fine) rules for the order-doubling test.

    At the top order the comparison is against the half-order rule instead.
    """
    limit = get_settings().gh_order_max
    if 2 * rule.order <= limit:
        return rule, gauss_hermite_rule(2 * rule.order)
    return gauss_hermite_rule(max(1, rule.order // 2)), rule


def torus_rule(points: int) -> TorusRule:
    if int(points) != points or points < 1:
        raise InputError(f"torus rule needs a positive number of points, got {points!r}")
    return TorusRule(int(points))
