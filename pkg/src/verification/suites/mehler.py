"""Mehler's formula: closed form against the truncated series."""

import numpy as np

from src.config import get_settings
from src.special_functions.hermite import mehler_kernel, mehler_series
from src.verification.models import Case, Comparison, RunConfig
from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry

RADII = (0.3, 0.6, 0.9)
GRID_SIDE = 5


def imaginary_cap(r: float) -> float:
    """Largest |Im| per argument for which the truncated series stays well conditioned."""
    return min(2.0, 1.75 * np.sqrt((1.0 - r) / (1.0 + r)))


def mehler_grid(r: float) -> list[tuple[complex, complex]]:
    """GRID_SIDE**2 pairs (xi, eta) with |Im| bounded by ``imaginary_cap(r)``."""
    cap = imaginary_cap(r)
    re = np.linspace(-2.0, 2.0, GRID_SIDE)
    im = np.linspace(-cap, cap, GRID_SIDE)
    return [
        (complex(re[a], im[a]), complex(0.5 * re[GRID_SIDE - 1 - b], im[b]))
        for a in range(GRID_SIDE)
        for b in range(GRID_SIDE)
    ]


@SuiteRegistry.register
class MehlerSuite(VerificationSuite):
    @property
    def name(self) -> str:
        return "mehler"

    @property
    def description(self) -> str:
        return "Mehler kernel closed form vs truncated Hermite series"

    def cases(self, config: RunConfig) -> list[Case]:
        k_max = get_settings().k_cap
        cases = []
        for r in RADII:
            for xi, eta in mehler_grid(r):

                def evaluate(r=r, xi=xi, eta=eta) -> Comparison:
                    closed = mehler_kernel(r, xi, eta)
                    series, scale = mehler_series(r, xi, eta, k_max)
                    return Comparison.relative(series, closed, config.strict_rtol, scale=scale, k_max=k_max)

                cases.append(
                    Case(
                        name=f"r={r} xi={xi:.3f} eta={eta:.3f}",
                        inputs={"r": r, "xi": [xi.real, xi.imag], "eta": [eta.real, eta.imag]},
                        evaluate=evaluate,
                    )
                )
        return cases
