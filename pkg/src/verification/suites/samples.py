"""Phase-point grids and sample expansions shared by the suites."""

import numpy as np
from scipy.stats import qmc

from src.phase_space.models import MultiIndex, PhasePoint
from src.spectral.expansion import HermiteExpansion

# (x, y, u, v) in one dimension, covering signs and the |.| <= 1.5 box
LEMMA_POINTS: list[tuple[float, float, float, float]] = [
    (0.0, 0.5, 0.0, 0.0),
    (0.3, -0.7, 0.2, 0.4),
    (-1.0, 0.25, 0.8, -1.2),
    (0.6, 1.0, -0.4, 0.0),
    (0.0, 0.0, 0.7, -0.9),
    (1.5, 1.5, -1.5, 1.5),
]


def lemma_points() -> list[PhasePoint]:
    return [PhasePoint.from_parts([x], [y], [u], [v]) for x, y, u, v in LEMMA_POINTS]


def phase_grid(count: int, n: int, radius: float) -> list[PhasePoint]:
    """``count`` points of the box [-radius, radius]^{4n} from an unscrambled Halton sequence.

    The sequence starts at its second element; the first is a corner of the box.
    """
    sampler = qmc.Halton(d=4 * n, scramble=False)
    sampler.fast_forward(1)
    coords = radius * (2.0 * sampler.random(count) - 1.0)
    return [
        PhasePoint.from_parts(row[:n], row[n : 2 * n], row[2 * n : 3 * n], row[3 * n :]) for row in coords
    ]


def sample_expansion(n: int, k_max: int, index: int) -> HermiteExpansion:
    """A deterministic expansion with every coefficient up to ``k_max`` nonzero.

    c_alpha = e^{-0.3|alpha|} (1 + 0.5 cos((index + 1) alpha_1)) e^{0.7 i (index + 1) sum_j (j + 1) alpha_j}
    """
    coeffs = {}
    weights = np.arange(1, n + 1)
    for alpha in MultiIndex.up_to_level(n, k_max):
        entries = np.asarray(alpha.entries)
        modulus = np.exp(-0.3 * alpha.level) * (1.0 + 0.5 * np.cos((index + 1) * entries[0]))
        phase = np.exp(0.7j * (index + 1) * float(weights @ entries))
        coeffs[alpha] = modulus * phase
    return HermiteExpansion(n, k_max, coeffs)


def describe_point(p: PhasePoint) -> dict[str, list[float]]:
    return {"x": p.x.tolist(), "y": p.y.tolist(), "u": p.u.tolist(), "v": p.v.tolist()}
