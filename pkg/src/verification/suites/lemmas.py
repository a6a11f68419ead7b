"""Norm, beta-sum, projection-kernel and growth lemmas, plus the generating functions."""

import math

import numpy as np

from src.phase_space.models import MultiIndex, PhasePoint
from src.phase_space.operators import TWO_PI, beta_sum, pi_norm_squared, pi_norm_squared_closed
from src.special_functions.kernels import (
    diagonal_kernel_levels,
    perron_growth_bound,
    projection_kernel,
    projection_kernel_direct,
)
from src.special_functions.laguerre import (
    laguerre_fn_generating_function,
    laguerre_fn_values,
    laguerre_generating_function,
    laguerre_polys,
    squared_sum,
)
from src.verification.models import Case, Comparison, Measure, RunConfig
from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry
from src.verification.suites.samples import describe_point, lemma_points

NORM_LEVEL_MAX = 6
BETA_TAIL_RTOL = 1e-12

# small arguments keep the alternating Laguerre convolution well conditioned
KERNEL_POINTS: dict[int, list[tuple[list[complex], list[complex]]]] = {
    1: [([0.3 + 0.15j], [-0.2 + 0.25j]), ([0.1 - 0.3j], [0.35 + 0.05j])],
    2: [([0.3 + 0.15j, -0.1 + 0.05j], [-0.2 + 0.25j, 0.15 - 0.1j])],
}
KERNEL_LEVEL_MAX = {1: 20, 2: 8}

GROWTH_HEIGHTS = (0.5, 1.0, 1.5, 2.0, 2.5, 3.0)
GROWTH_LEVEL_MAX = 200
GROWTH_WINDOW = (100, 200)

GENERATING_RADII = (0.3, 0.6)
GENERATING_LEVELS = 120


def _pairs(values: list[complex]) -> list[list[float]]:
    return [[complex(c).real, complex(c).imag] for c in values]


def growth_ratios(y: float, k_max: int = GROWTH_LEVEL_MAX, rate: float = math.sqrt(2.0)) -> np.ndarray:
    """Phi_k(iy, -iy) / e^{2 rate sqrt(k) |y|} for k = 1..k_max in one dimension."""
    diagonal = diagonal_kernel_levels(k_max, [1j * y])
    return np.array([diagonal[k] / perron_growth_bound(k, [y], 1, rate) for k in range(1, k_max + 1)])


def growth_slope(ratios: np.ndarray, window: tuple[int, int] = GROWTH_WINDOW) -> float:
    """Slope in k of log ratio over the window of levels."""
    ks = np.arange(window[0], window[1] + 1)
    return float(np.polyfit(ks, np.log(ratios[ks - 1]), 1)[0])


@SuiteRegistry.register
class LemmasSuite(VerificationSuite):
    @property
    def name(self) -> str:
        return "lemmas"

    @property
    def description(self) -> str:
        return "pi(z,w) norm lemma, beta sums, projection kernels, growth model, generating functions"

    def cases(self, config: RunConfig) -> list[Case]:
        return (
            self._norm_cases(config)
            + self._beta_cases(config)
            + self._kernel_cases(config)
            + self._growth_cases(config)
            + self._generating_cases(config)
        )

    def _norm_cases(self, config: RunConfig) -> list[Case]:
        cases = []
        for p in lemma_points():
            for a in range(NORM_LEVEL_MAX + 1):

                def evaluate(p=p, a=a) -> Comparison:
                    return Comparison.relative(
                        pi_norm_squared((a,), p), pi_norm_squared_closed((a,), p), config.lemma_rtol
                    )

                cases.append(
                    Case(name=f"norm alpha={a} {p!r}", inputs={"alpha": [a], **describe_point(p)}, evaluate=evaluate)
                )

        oracle = PhasePoint.from_parts([0.0], [0.8], [0.0], [0.0])
        cases.append(
            Case(
                name="norm oracle alpha=0 w=0",
                inputs={"alpha": [0], **describe_point(oracle)},
                evaluate=lambda: Comparison.relative(
                    pi_norm_squared((0,), oracle), math.exp(0.8**2), config.lemma_rtol
                ),
            )
        )
        return cases

    def _beta_cases(self, config: RunConfig) -> list[Case]:
        targets: list[tuple[MultiIndex, PhasePoint]] = [
            (MultiIndex.of(a), p) for p in lemma_points() for a in range(NORM_LEVEL_MAX + 1)
        ]
        two_d = PhasePoint.from_parts([0.2, -0.4], [0.5, 0.3], [-0.1, 0.6], [0.4, -0.2])
        targets += [(MultiIndex.of(1, 0), two_d), (MultiIndex.of(2, 1), two_d)]

        cases = []
        for alpha, p in targets:

            def evaluate(alpha=alpha, p=p) -> Comparison:
                result = beta_sum(alpha, p)
                expected = pi_norm_squared_closed(alpha, p) / TWO_PI**p.n
                comparison = Comparison.relative(
                    result.value, expected, config.lemma_rtol, tail=result.tail, levels=result.levels
                )
                if not result.tail < BETA_TAIL_RTOL * result.value:
                    comparison.error = math.inf
                return comparison

            cases.append(
                Case(
                    name=f"beta sum alpha={alpha} {p!r}",
                    inputs={"alpha": list(alpha.entries), **describe_point(p)},
                    evaluate=evaluate,
                )
            )
        return cases

    def _kernel_cases(self, config: RunConfig) -> list[Case]:
        cases = []
        for n, points in KERNEL_POINTS.items():
            for z, w in points:
                for k in range(KERNEL_LEVEL_MAX[n] + 1):

                    def evaluate(n=n, z=z, w=w, k=k) -> Comparison:
                        return Comparison.relative(
                            projection_kernel(k, n, z, w), projection_kernel_direct(k, n, z, w), config.strict_rtol
                        )

                    cases.append(
                        Case(
                            name=f"projection kernel n={n} k={k} z={z} w={w}",
                            inputs={"n": n, "k": k, "z": _pairs(z), "w": _pairs(w)},
                            evaluate=evaluate,
                        )
                    )
        return cases

    def _growth_cases(self, config: RunConfig) -> list[Case]:
        cases = []
        for y in GROWTH_HEIGHTS:

            def evaluate(y=y) -> Comparison:
                ratios = growth_ratios(y)
                slope = growth_slope(ratios)
                return Comparison(
                    lhs=slope,
                    rhs=0.0,
                    error=slope,
                    tolerance=config.growth_slope,
                    measure=Measure.ABSOLUTE,
                    metadata={"max_ratio": float(ratios.max()), "rate": math.sqrt(2.0)},
                )

            cases.append(
                Case(
                    name=f"growth y={y}",
                    inputs={"n": 1, "x": 0.0, "y": y, "k_max": GROWTH_LEVEL_MAX, "window": list(GROWTH_WINDOW)},
                    evaluate=evaluate,
                )
            )
        return cases

    def _generating_cases(self, config: RunConfig) -> list[Case]:
        ks = np.arange(GENERATING_LEVELS + 1)
        z1 = np.array([0.4 + 0.2j])
        z2 = np.array([0.4 + 0.2j, -0.3 + 0.0j])
        w2 = np.array([0.1 - 0.2j, 0.25 + 0.1j])
        cases = []
        for r in GENERATING_RADII:
            for z in (z1, z2):
                n = z.shape[0]

                def hermite_type(r=r, z=z, n=n) -> Comparison:
                    q = complex(squared_sum(z))
                    values = laguerre_polys(GENERATING_LEVELS, n / 2.0 - 1.0, np.complex128(0.5 * q))
                    series = complex(np.sum(r**ks * values) * np.exp(-0.25 * q))
                    return Comparison.relative(series, laguerre_generating_function(r, n, z), config.strict_rtol)

                cases.append(
                    Case(
                        name=f"Laguerre generating function r={r} n={n}",
                        inputs={"r": r, "n": n, "z": _pairs(z.tolist())},
                        evaluate=hermite_type,
                    )
                )

            def laguerre_type(r=r) -> Comparison:
                series = complex(np.sum(r**ks * laguerre_fn_values(GENERATING_LEVELS, 2, z2, w2)))
                return Comparison.relative(
                    series, laguerre_fn_generating_function(r, 2, z2, w2), config.strict_rtol
                )

            cases.append(
                Case(
                    name=f"Laguerre function generating function r={r} n=2",
                    inputs={"r": r, "n": 2, "z": _pairs(z2.tolist()), "w": _pairs(w2.tolist())},
                    evaluate=laguerre_type,
                )
            )
        return cases
