"""Fitting the decay rho_k ~ C e^{-2 sqrt(k) t} of the level norms."""

import logging
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict

from src.exceptions import InputError

if TYPE_CHECKING:
    from src.spectral.expansion import HermiteExpansion

logger = logging.getLogger(__name__)

MIN_NONZERO_LEVELS = 5
DEFAULT_WINDOW_START = 4


class DecayProfile(BaseModel):
    """Level norms with the fitted model rho_k ~ c_hat e^{-2 sqrt(k) t_hat}.

    ``t_hat`` is also the radius of the tube |Im z| < t_hat on which the fitted
    model guarantees a holomorphic extension.
    """

    model_config = ConfigDict(frozen=True)

    rho: list[float]
    t_hat: float
    c_hat: float
    residual: float
    window: tuple[int, int]

    def model(self, k: ArrayLike) -> NDArray:
        return self.c_hat * np.exp(-2.0 * np.sqrt(np.asarray(k, dtype=float)) * self.t_hat)

    @property
    def extension_radius(self) -> float:
        return self.t_hat


def fit_decay(rho: ArrayLike, k_min: int = DEFAULT_WINDOW_START) -> DecayProfile:
    """Least-squares fit of log rho_k = log C - 2 sqrt(k) t over nonzero levels k >= k_min.

    Raises:
        InputError: With fewer than 5 nonzero levels, or fewer than 2 inside the window.
    """
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0) or not np.all(np.isfinite(rho)):
        raise InputError("level norms must be finite and nonnegative")
    nonzero = np.flatnonzero(rho > 0)
    if nonzero.size < MIN_NONZERO_LEVELS:
        raise InputError(
            f"decay fit needs at least {MIN_NONZERO_LEVELS} nonzero levels, got {nonzero.size}"
        )
    ks = nonzero[nonzero >= k_min]
    if ks.size < 2:
        raise InputError(f"decay fit needs at least 2 nonzero levels >= {k_min}, got {ks.size}")

    design = np.column_stack([np.ones(ks.size), -2.0 * np.sqrt(ks)])
    target = np.log(rho[ks])
    (log_c, t_hat), *_ = np.linalg.lstsq(design, target, rcond=None)
    residual = float(np.sqrt(np.mean((design @ np.array([log_c, t_hat]) - target) ** 2)))
    logger.debug(f"Decay fit over levels {ks[0]}..{ks[-1]}: t_hat={t_hat:.4g}, residual={residual:.2e}")
    return DecayProfile(
        rho=rho.tolist(),
        t_hat=float(t_hat),
        c_hat=float(np.exp(log_c)),
        residual=residual,
        window=(int(ks[0]), int(ks[-1])),
    )


def decay_estimate(F: "HermiteExpansion", k_min: int = DEFAULT_WINDOW_START) -> DecayProfile:
    """Fit the decay profile of ||P_k f||_2 for a truncated expansion."""
    return fit_decay(F.level_norms(), k_min)


def tube_radius(F: "HermiteExpansion", profile: DecayProfile | None = None) -> float:
    """Radius t_hat of the tube on which the fitted decay gives a holomorphic extension."""
    return (profile or decay_estimate(F)).t_hat
