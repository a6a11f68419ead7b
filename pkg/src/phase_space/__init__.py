"""Phase space C^n x C^n: value types and the U(n) action.

The operators pi(z, w) and the special Hermite functions live in
``src.phase_space.operators``, which depends on the spectral package.
"""

from src.phase_space.actions import (
    group_action,
    haar_sample,
    haar_unitaries,
    symplectic_form,
    torus_action,
)
from src.phase_space.models import MultiIndex, PhasePoint, TorusElement, UnitaryElement

__all__ = [
    "MultiIndex",
    "PhasePoint",
    "TorusElement",
    "UnitaryElement",
    "group_action",
    "haar_sample",
    "haar_unitaries",
    "symplectic_form",
    "torus_action",
]
