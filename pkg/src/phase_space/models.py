"""Value types for phase space: multi-indices, phase points, unitary and torus elements."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.exceptions import InputError
from src.special_functions.hermite import level_indices

UNITARY_TOL = 1e-12


@dataclass(frozen=True, order=True)
class MultiIndex:
    """alpha in N^n, indexing the tensor-product Hermite function Phi_alpha."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if not entries:
            raise InputError("multi-index must have at least one entry")
        if any(a < 0 for a in entries):
            raise InputError(f"multi-index entries must be nonnegative, got {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> "MultiIndex":
        return cls(tuple(entries))

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        return cls((0,) * n)

    @classmethod
    def at_level(cls, n: int, k: int) -> list["MultiIndex"]:
        """All multi-indices of dimension ``n`` and level ``k``, lexicographically descending."""
        return [cls(alpha) for alpha in level_indices(n, k)]

    @classmethod
    def up_to_level(cls, n: int, k_max: int) -> list["MultiIndex"]:
        """Multi-indices of levels 0..k_max, ordered by (level, entries)."""
        return [alpha for k in range(k_max + 1) for alpha in sorted(cls.at_level(n, k))]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def level(self) -> int:
        return sum(self.entries)

    def shifted(self, m: Sequence[int]) -> "MultiIndex | None":
        """alpha + m, or None when an entry would become negative."""
        if len(m) != self.n:
            raise InputError(f"shift has length {len(m)}, expected {self.n}")
        entries = tuple(a + int(d) for a, d in zip(self.entries, m, strict=True))
        if any(a < 0 for a in entries):
            return None
        return MultiIndex(entries)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.level, self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, j: int) -> int:
        return self.entries[j]

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.entries) + ")"


def _complex_vector(values: ArrayLike, what: str) -> NDArray:
    arr = np.asarray(values, dtype=np.complex128).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{what} must be finite, got {values!r}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PhasePoint:
    """A point (z, w) of C^n x C^n with z = x + iy and w = u + iv."""

    z: NDArray
    w: NDArray

    def __post_init__(self):
        z = _complex_vector(self.z, "z")
        w = _complex_vector(self.w, "w")
        if z.shape != w.shape:
            raise InputError(f"z and w must have the same dimension, got {z.shape[0]} and {w.shape[0]}")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_parts(cls, x: ArrayLike, y: ArrayLike, u: ArrayLike, v: ArrayLike) -> "PhasePoint":
        x, y, u, v = (np.asarray(a, dtype=float) for a in (x, y, u, v))
        return cls(x + 1j * y, u + 1j * v)

    @classmethod
    def real(cls, x: ArrayLike, u: ArrayLike) -> "PhasePoint":
        return cls(np.asarray(x, dtype=float), np.asarray(u, dtype=float))

    @classmethod
    def origin(cls, n: int) -> "PhasePoint":
        return cls(np.zeros(n), np.zeros(n))

    @property
    def n(self) -> int:
        return self.z.shape[0]

    @property
    def x(self) -> NDArray:
        return self.z.real

    @property
    def y(self) -> NDArray:
        return self.z.imag

    @property
    def u(self) -> NDArray:
        return self.w.real

    @property
    def v(self) -> NDArray:
        return self.w.imag

    @property
    def is_real(self) -> bool:
        return not (np.any(self.y) or np.any(self.v))

    def imaginary_part(self) -> "PhasePoint":
        """The real point (y, v)."""
        return PhasePoint.real(self.y, self.v)

    def doubled_imaginary(self) -> "PhasePoint":
        """The purely imaginary point (2iy, 2iv) at which the Gutzmer weights are evaluated."""
        return PhasePoint(2j * self.y, 2j * self.v)

    def stacked(self) -> NDArray:
        """The vector (z, w) of length 2n."""
        return np.concatenate([self.z, self.w])

    def __add__(self, other: "PhasePoint") -> "PhasePoint":
        return PhasePoint(self.z + other.z, self.w + other.w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhasePoint):
            return NotImplemented
        return np.array_equal(self.z, other.z) and np.array_equal(self.w, other.w)

    def isclose(self, other: "PhasePoint", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.z, other.z, atol=atol) and np.allclose(self.w, other.w, atol=atol))

    def __repr__(self) -> str:
        return f"PhasePoint(z={self.z.tolist()}, w={self.w.tolist()})"


@dataclass(frozen=True, eq=False)
class UnitaryElement:
    """sigma = a + ib in U(n), identified with A = [[a, -b], [b, a]] in Sp(n,R) cap O(2n,R)."""

    a: NDArray
    b: NDArray
    tol: float = field(default=UNITARY_TOL, repr=False)

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:
            raise InputError(f"a and b must be equal square matrices, got {a.shape} and {b.shape}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise InputError("unitary element must be finite")
        sigma = a + 1j * b
        defect = float(np.max(np.abs(sigma.conj().T @ sigma - np.eye(a.shape[0]))))
        if defect > self.tol:
            raise InputError(f"matrix is not unitary (max |sigma* sigma - I| = {defect:.3e})")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_matrix(cls, sigma: ArrayLike, tol: float = UNITARY_TOL) -> "UnitaryElement":
        sigma = np.asarray(sigma, dtype=np.complex128)
        return cls(sigma.real, sigma.imag, tol)

    @classmethod
    def identity(cls, n: int) -> "UnitaryElement":
        return cls(np.eye(n), np.zeros((n, n)))

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def matrix(self) -> NDArray:
        return self.a + 1j * self.b

    def realification(self) -> NDArray:
        """The 2n x 2n real matrix [[a, -b], [b, a]]."""
        return np.block([[self.a, -self.b], [self.b, self.a]])

    def compose(self, other: "UnitaryElement") -> "UnitaryElement":
        """Matrix product self * other; acting by it equals acting by other, then by self."""
        return UnitaryElement.from_matrix(self.matrix @ other.matrix, tol=max(self.tol, other.tol))


@dataclass(frozen=True, eq=False)
class TorusElement:
    """k(theta) = diag(e^{i theta_j}), with angles taken mod 2 pi."""

    theta: NDArray

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float).reshape(-1)
        if not np.all(np.isfinite(theta)):
            raise InputError(f"angles must be finite, got {self.theta!r}")
        theta = np.mod(theta, 2.0 * np.pi)
        theta.setflags(write=False)
        object.__setattr__(self, "theta", theta)

    @property
    def n(self) -> int:
        return self.theta.shape[0]

    def to_unitary(self) -> UnitaryElement:
        return UnitaryElement(np.diag(np.cos(self.theta)), np.diag(np.sin(self.theta)))
