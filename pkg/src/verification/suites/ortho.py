"""Orthogonality of Hermite functions along torus orbits (one dimension)."""

import math

from src.gutzmer.orthogonality import OrthogonalityVariant, orthogonality_1d
from src.verification.models import Case, Comparison, Measure, RunConfig
from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry

LEVEL_MAX = 5
HEIGHTS = (0.5, 1.0, 1.5)


@SuiteRegistry.register
class OrthogonalitySuite(VerificationSuite):
    @property
    def name(self) -> str:
        return "ortho"

    @property
    def description(self) -> str:
        return "Torus-orbit orthogonality relations, variants A and B"

    def cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options()
        cases = []
        for variant in OrthogonalityVariant:
            for eta in HEIGHTS:
                for k in range(LEVEL_MAX + 1):
                    for j in range(LEVEL_MAX + 1):

                        def evaluate(variant=variant, eta=eta, k=k, j=j) -> Comparison:
                            result = orthogonality_1d(k, j, eta, variant, options)
                            if k == j:
                                return Comparison.relative(result.value, result.expected, config.rtol)
                            comparison = Comparison.relative(
                                result.value, 0.0, config.lemma_rtol, scale=result.scale
                            )
                            comparison.measure = Measure.SCALED
                            return comparison

                        cases.append(
                            Case(
                                name=f"{variant.value} eta={eta} k={k} j={j}",
                                inputs={"variant": variant.value, "eta": eta, "k": k, "j": j},
                                evaluate=evaluate,
                            )
                        )

        def worked_value() -> Comparison:
            result = orthogonality_1d(0, 0, 1.0, OrthogonalityVariant.A, options)
            return Comparison.relative(result.value, 2.0 * math.pi * math.e, config.rtol)

        cases.append(
            Case(
                name="A eta=1 k=0 j=0 equals 2 pi e",
                inputs={"variant": "A", "eta": 1.0, "k": 0, "j": 0},
                evaluate=worked_value,
            )
        )
        return cases
