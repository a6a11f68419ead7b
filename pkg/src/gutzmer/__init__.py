"""Gutzmer's formula, its relatives and the heat-kernel image norm."""

from src.gutzmer.formula import (
    DEFAULT_OPTIONS,
    converse_decay_check,
    gutzmer_check,
    gutzmer_lhs,
    gutzmer_rhs,
    gutzmer_weight,
    gutzmer_weights,
    k_average_difference,
    k_average_verify,
    polarized_gutzmer,
    torus_average_identity,
)
from src.gutzmer.heat import (
    heat_kernel_integral,
    heat_kernel_p,
    heat_kernel_total,
    image_norm,
    image_norm_closed,
    laguerre_heat_closed,
    laguerre_heat_integral,
)
from src.gutzmer.models import (
    ConverseReport,
    GutzmerReport,
    HeatWeight,
    KAverageResult,
    LaguerreHeatResult,
    OrthogonalityResult,
    PolarizedResult,
    QuadratureOptions,
    SideEstimate,
)
from src.gutzmer.orthogonality import OrthogonalityVariant, orthogonality_1d, orthogonality_expected

__all__ = [
    # Options and records
    "QuadratureOptions",
    "HeatWeight",
    "GutzmerReport",
    "SideEstimate",
    "PolarizedResult",
    "OrthogonalityResult",
    "KAverageResult",
    "LaguerreHeatResult",
    "ConverseReport",
    # Gutzmer's formula
    "DEFAULT_OPTIONS",
    "gutzmer_weight",
    "gutzmer_weights",
    "gutzmer_lhs",
    "gutzmer_rhs",
    "gutzmer_check",
    "polarized_gutzmer",
    "torus_average_identity",
    "k_average_verify",
    "k_average_difference",
    "converse_decay_check",
    # Orthogonality
    "OrthogonalityVariant",
    "orthogonality_1d",
    "orthogonality_expected",
    # Heat kernels
    "heat_kernel_p",
    "heat_kernel_total",
    "heat_kernel_integral",
    "laguerre_heat_closed",
    "laguerre_heat_integral",
    "image_norm",
    "image_norm_closed",
]
