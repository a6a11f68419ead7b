"""K-averages of diagonal special Hermite functions against Laguerre functions."""

import numpy as np

from src.gutzmer.formula import gutzmer_weight, k_average_difference, k_average_verify
from src.phase_space.models import MultiIndex, PhasePoint
from src.special_functions.laguerre import laguerre_fn_values
from src.verification.models import Case, Comparison, Measure, RunConfig
from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry

LEVEL_MAX = 3


def average_point(n: int) -> PhasePoint:
    """A fixed real point (x, u) with every coordinate nonzero."""
    j = np.arange(1, n + 1)
    return PhasePoint.real(0.6 * np.cos(j), 0.8 * np.sin(j))


@SuiteRegistry.register
class KAverageSuite(VerificationSuite):
    @property
    def name(self) -> str:
        return "kaverage"

    @property
    def description(self) -> str:
        return "K-average of Phi_(alpha,alpha) equals the weighted Laguerre function"

    def cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options()
        cases = []
        for n in (1, max(config.n, 2)):
            xu = average_point(n)
            point = {"x": xu.x.tolist(), "u": xu.u.tolist()}
            for alpha in MultiIndex.up_to_level(n, LEVEL_MAX):

                def evaluate(alpha=alpha, xu=xu) -> Comparison:
                    result = k_average_verify(alpha, xu, options)
                    tolerance = max(config.mc_sigma * result.stderr, config.strict_rtol * abs(result.rhs))
                    return Comparison(
                        lhs=result.lhs,
                        rhs=result.rhs,
                        error=result.residual,
                        tolerance=tolerance,
                        measure=Measure.STDERR,
                        metadata={"stderr": result.stderr, "samples": result.samples, "seed": result.seed},
                    )

                cases.append(
                    Case(
                        name=f"n={n} alpha={alpha}",
                        inputs={"n": n, "alpha": list(alpha.entries), **point},
                        evaluate=evaluate,
                    )
                )
            if n >= 2:
                cases += self._permutation_cases(config, xu)
        return cases

    def _permutation_cases(self, config: RunConfig, xu: PhasePoint) -> list[Case]:
        """Paired estimates of the difference between indices of the same level."""
        options = config.quadrature_options()
        n = xu.n
        cases = []
        for k in range(1, LEVEL_MAX + 1):
            first, *others = MultiIndex.at_level(n, k)
            scale = gutzmer_weight(k, n) * abs(float(laguerre_fn_values(k, n, xu.z, xu.w)[k].real))
            for beta in others:

                def evaluate(alpha=first, beta=beta) -> Comparison:
                    estimate = k_average_difference(alpha, beta, xu, options)
                    return Comparison(
                        lhs=estimate.estimate,
                        rhs=0.0,
                        error=abs(estimate.estimate),
                        tolerance=max(config.mc_sigma * estimate.stderr, config.strict_rtol * scale),
                        measure=Measure.STDERR,
                        metadata={"stderr": estimate.stderr, "samples": estimate.samples, "seed": estimate.seed},
                    )

                cases.append(
                    Case(
                        name=f"n={n} alpha={first} vs beta={beta}",
                        inputs={
                            "n": n,
                            "alpha": list(first.entries),
                            "beta": list(beta.entries),
                            "x": xu.x.tolist(),
                            "u": xu.u.tolist(),
                        },
                        evaluate=evaluate,
                    )
                )
        return cases
