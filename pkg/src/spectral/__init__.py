"""Hermite expansions, projections, semigroups and decay profiles."""

from src.spectral.decay import DecayProfile, decay_estimate, fit_decay, tube_radius
from src.spectral.expansion import HermiteExpansion
from src.spectral.io import load_expansion, save_expansion
from src.spectral.operations import (
    EntireEvaluation,
    analyze,
    evaluate_entire,
    inner_product,
    level_norms,
    levels,
    norm_squared,
    poisson_semigroup,
    project,
    semigroup,
    synthesize,
)

__all__ = [
    "DecayProfile",
    "EntireEvaluation",
    "HermiteExpansion",
    "analyze",
    "decay_estimate",
    "evaluate_entire",
    "fit_decay",
    "inner_product",
    "level_norms",
    "levels",
    "load_expansion",
    "norm_squared",
    "poisson_semigroup",
    "project",
    "save_expansion",
    "semigroup",
    "synthesize",
    "tube_radius",
]
