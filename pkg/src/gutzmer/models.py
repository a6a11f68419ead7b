"""Records and options for the Gutzmer identities."""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt


class QuadratureOptions(BaseModel):
    """Orders, Monte Carlo budget and tolerances for one evaluation.

    ``gh_order`` and ``torus_points`` left as None select the smallest orders that
    are exact for the truncation level of the expansions involved.
    """

    model_config = ConfigDict(frozen=True)

    gh_order: PositiveInt | None = None
    torus_points: PositiveInt | None = None
    mc_samples: PositiveInt | None = None
    seed: int | None = Field(default=None, ge=0)
    chunk_size: PositiveInt | None = None
    workers: PositiveInt = 1
    rtol: float = Field(default=1e-6, ge=0.0)
    mc_sigma: float = Field(default=3.0, ge=0.0)
    mc_floor_rtol: float = Field(default=1e-2, ge=0.0)
    mc_stderr_budget: float = Field(default=3e-3, gt=0.0)
    image_order: PositiveInt = 48


class HeatWeight(BaseModel):
    """The Bargmann-type weight U_t and the special Hermite heat kernel p_t on C^n."""

    model_config = ConfigDict(frozen=True)

    t: PositiveFloat
    n: PositiveInt

    def image_weight(self, x: ArrayLike, y: ArrayLike) -> NDArray:
        """U_t(x, y) = 2^n (sinh 4t)^{-n/2} e^{tanh(2t)|x|^2 - coth(2t)|y|^2}."""
        x2 = np.sum(np.square(x), axis=-1)
        y2 = np.sum(np.square(y), axis=-1)
        t = self.t
        return (
            2.0**self.n
            * np.sinh(4 * t) ** (-self.n / 2.0)
            * np.exp(np.tanh(2 * t) * x2 - y2 / np.tanh(2 * t))
        )

    def heat_kernel(self, y: ArrayLike, v: ArrayLike) -> NDArray:
        """p_t(y, v) = (2 pi)^{-n} (sinh t)^{-n} e^{-coth(t)(|y|^2 + |v|^2)/4}."""
        r2 = np.sum(np.square(y), axis=-1) + np.sum(np.square(v), axis=-1)
        t = self.t
        return (2 * np.pi) ** (-self.n) * np.sinh(t) ** (-self.n) * np.exp(-0.25 * r2 / np.tanh(t))


class GutzmerReport(BaseModel):
    """Both sides of Gutzmer's formula at one phase point."""

    x: list[float]
    y: list[float]
    u: list[float]
    v: list[float]
    lhs: float
    lhs_stderr: float | None = None
    rhs: float
    rhs_tail: float = 0.0
    abs_error: float
    rel_error: float
    tolerance: float
    passed: bool
    gh_order: int
    torus_points: int
    mc_samples: int | None = None
    seed: int | None = None
    flagged: bool = False


class SideEstimate(BaseModel):
    """A left-hand side value with the quadrature that produced it."""

    value: complex
    stderr: float | None = None
    gh_order: int
    torus_points: int
    mc_samples: int | None = None
    seed: int | None = None
    flagged: bool = False


class PolarizedResult(BaseModel):
    lhs: complex
    rhs: complex
    lhs_stderr: float | None = None


class OrthogonalityResult(BaseModel):
    value: complex
    expected: float
    scale: float


class KAverageResult(BaseModel):
    """K-average of (2 pi)^{n/2} Phi_{alpha,alpha} against its Laguerre value."""

    lhs: float
    rhs: float
    residual: float
    stderr: float
    samples: int | None = None
    seed: int | None = None


class LaguerreHeatResult(BaseModel):
    value: float
    model: float


class ConverseReport(BaseModel):
    """Decay of the level norms against the radius r = (|y|^2 + |v|^2)^{1/2}."""

    r: float
    rhs: float
    terms: list[float]
    t_hat: float
    scaled_max: float
    bounded: bool
