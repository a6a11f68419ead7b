"""Hermite and Laguerre functions at real and complex arguments."""

from src.special_functions.hermite import (
    hermite_fn_1d,
    hermite_fn_nd,
    hermite_functions,
    level_indices,
    mehler_kernel,
    mehler_series,
)
from src.special_functions.kernels import (
    diagonal_kernel_levels,
    perron_growth_bound,
    projection_kernel,
    projection_kernel_direct,
    projection_kernel_levels,
)
from src.special_functions.laguerre import (
    LaguerreOrder,
    laguerre_fn,
    laguerre_fn_generating_function,
    laguerre_fn_values,
    laguerre_generating_function,
    laguerre_poly,
    laguerre_polys,
)

__all__ = [
    # Hermite
    "hermite_fn_1d",
    "hermite_fn_nd",
    "hermite_functions",
    "level_indices",
    "mehler_kernel",
    "mehler_series",
    # Laguerre
    "LaguerreOrder",
    "laguerre_fn",
    "laguerre_fn_generating_function",
    "laguerre_fn_values",
    "laguerre_generating_function",
    "laguerre_poly",
    "laguerre_polys",
    # Kernels
    "diagonal_kernel_levels",
    "perron_growth_bound",
    "projection_kernel",
    "projection_kernel_direct",
    "projection_kernel_levels",
]
