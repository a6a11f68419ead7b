"""Finite Hermite expansions f = sum c_alpha Phi_alpha and their entire extensions."""

import string
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import InputError
from src.phase_space.models import MultiIndex
from src.special_functions.hermite import (
    check_degree,
    check_imaginary_part,
    coordinate_tables,
    level_indices,
)


def _as_index(alpha: MultiIndex | Iterable[int]) -> MultiIndex:
    return alpha if isinstance(alpha, MultiIndex) else MultiIndex(tuple(alpha))


@dataclass(frozen=True, eq=False)
class HermiteExpansion:
    """Coefficients c_alpha = (f, Phi_alpha) for all |alpha| <= k_max.

    Instances are immutable; arithmetic returns new expansions whose ``k_max`` is
    the larger of the operands'.
    """

    n: int
    k_max: int
    coeffs: Mapping[MultiIndex, complex] = field(default_factory=dict)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InputError(f"dimension must be a positive integer, got {self.n!r}")
        check_degree(self.k_max, "k_max")
        cleaned: dict[MultiIndex, complex] = {}
        for key, value in self.coeffs.items():
            alpha = _as_index(key)
            if alpha.n != self.n:
                raise InputError(f"multi-index {alpha} has dimension {alpha.n}, expected {self.n}")
            if alpha.level > self.k_max:
                raise InputError(f"multi-index {alpha} has level {alpha.level} > k_max = {self.k_max}")
            c = complex(value)
            if not np.isfinite(c):
                raise InputError(f"coefficient of {alpha} must be finite, got {value!r}")
            cleaned[alpha] = c
        ordered = dict(sorted(cleaned.items(), key=lambda item: item[0].sort_key()))
        object.__setattr__(self, "coeffs", MappingProxyType(ordered))

    @classmethod
    def zeros(cls, n: int, k_max: int) -> "HermiteExpansion":
        return cls(n, k_max, {})

    @classmethod
    def basis(cls, alpha: MultiIndex | Sequence[int], k_max: int | None = None) -> "HermiteExpansion":
        """The expansion of Phi_alpha."""
        alpha = _as_index(alpha)
        return cls(alpha.n, alpha.level if k_max is None else k_max, {alpha: 1.0})

    @classmethod
    def from_coefficients(
        cls, n: int, coeffs: Mapping[MultiIndex | tuple[int, ...], complex], k_max: int | None = None
    ) -> "HermiteExpansion":
        indexed = {_as_index(alpha): c for alpha, c in coeffs.items()}
        if k_max is None:
            k_max = max((alpha.level for alpha in indexed), default=0)
        return cls(n, k_max, indexed)

    @classmethod
    def from_levels(cls, n: int, level_norms: Sequence[float]) -> "HermiteExpansion":
        """Expansion whose level-k part has norm ``level_norms[k]``, spread evenly over the level."""
        coeffs = {}
        for k, rho in enumerate(level_norms):
            if rho == 0:
                continue
            indices = level_indices(n, k)
            for alpha in indices:
                coeffs[MultiIndex(alpha)] = rho / np.sqrt(len(indices))
        return cls(n, len(level_norms) - 1, coeffs)

    def coefficient(self, alpha: MultiIndex | Sequence[int]) -> complex:
        return self.coeffs.get(_as_index(alpha), 0.0 + 0.0j)

    def indices(self) -> list[MultiIndex]:
        return list(self.coeffs)

    def levels(self) -> list[int]:
        """Levels carrying at least one nonzero coefficient."""
        return sorted({alpha.level for alpha, c in self.coeffs.items() if c != 0})

    def level_norms(self) -> NDArray:
        """rho_k = ||P_k f||_2 for k = 0..k_max."""
        squares = np.zeros(self.k_max + 1)
        for alpha, c in self.coeffs.items():
            squares[alpha.level] += abs(c) ** 2
        return np.sqrt(squares)

    def norm_squared(self) -> float:
        return float(sum(abs(c) ** 2 for c in self.coeffs.values()))

    def inner_product(self, other: "HermiteExpansion") -> complex:
        """(f, g) = sum c_alpha conj(d_alpha)."""
        self._check_compatible(other)
        return complex(sum(c * np.conj(other.coefficient(alpha)) for alpha, c in self.coeffs.items()))

    def level_part(self, k: int) -> "HermiteExpansion":
        """P_k f, keeping ``k_max``."""
        return HermiteExpansion(
            self.n, self.k_max, {alpha: c for alpha, c in self.coeffs.items() if alpha.level == k}
        )

    def scale_levels(self, factors: ArrayLike) -> "HermiteExpansion":
        """Multiply every level-k coefficient by ``factors[k]``."""
        factors = np.asarray(factors)
        return HermiteExpansion(
            self.n, self.k_max, {alpha: c * factors[alpha.level] for alpha, c in self.coeffs.items()}
        )

    def coefficient_tensor(self) -> NDArray:
        """Dense array C with C[alpha] = c_alpha, shape ``(k_max + 1,) * n``."""
        tensor = np.zeros((self.k_max + 1,) * self.n, dtype=np.complex128)
        for alpha, c in self.coeffs.items():
            tensor[alpha.entries] = c
        return tensor

    def evaluate(self, points: ArrayLike, check_caps: bool = True) -> NDArray:
        """Entire extension F(z) = sum c_alpha Phi_alpha(z) at points of shape ``(..., n)``."""
        points = np.asarray(points, dtype=np.complex128)
        if points.shape[-1] != self.n:
            raise InputError(f"points must have last dimension {self.n}, got shape {points.shape}")
        if check_caps:
            check_imaginary_part(points)
        batch = points.shape[:-1]
        flat = points.reshape(-1, self.n)
        tables = coordinate_tables(self.k_max, flat)
        letters = string.ascii_lowercase[: self.n]
        expr = letters + "," + ",".join(f"{c}z" for c in letters) + "->z"
        values = np.einsum(expr, self.coefficient_tensor(), *tables, optimize=True)
        return values.reshape(batch)

    def _check_compatible(self, other: "HermiteExpansion") -> None:
        if other.n != self.n:
            raise InputError(f"expansions have dimensions {self.n} and {other.n}")

    def __add__(self, other: "HermiteExpansion") -> "HermiteExpansion":
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            coeffs[alpha] = coeffs.get(alpha, 0.0) + c
        return HermiteExpansion(self.n, max(self.k_max, other.k_max), coeffs)

    def __neg__(self) -> "HermiteExpansion":
        return -1.0 * self

    def __sub__(self, other: "HermiteExpansion") -> "HermiteExpansion":
        return self + (-other)

    def __mul__(self, scalar: complex) -> "HermiteExpansion":
        return HermiteExpansion(self.n, self.k_max, {alpha: scalar * c for alpha, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermiteExpansion):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return (
            self.n == other.n
            and self.k_max == other.k_max
            and all(self.coefficient(alpha) == other.coefficient(alpha) for alpha in keys)
        )

    def __repr__(self) -> str:
        return f"HermiteExpansion(n={self.n}, k_max={self.k_max}, terms={len(self.coeffs)})"
