"""Fractional rational Bessel collocation with quasilinearization.

Spectral solver for nonlinear second-order boundary-value problems on
``[0, inf)``, with the Thomas-Fermi equation built in.
"""

from .basis import DomainError, FrbBasis, frb_eval, map_point
from .bigreal import PrecisionContext, SingularMatrix, lu_solve, to_decimal_string
from .grid import CollocationGrid, build_grid
from .qlm import IterationTrace, LinearizedBvp, NonFiniteCoefficient, qlm_iterate
from .thomas_fermi import (
    SpectralSolution,
    ThomasFermi,
    energy,
    residual_profile,
    slope_at_origin,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "CollocationGrid",
    "DomainError",
    "FrbBasis",
    "IterationTrace",
    "LinearizedBvp",
    "NonFiniteCoefficient",
    "PrecisionContext",
    "SingularMatrix",
    "SpectralSolution",
    "ThomasFermi",
    "build_grid",
    "energy",
    "frb_eval",
    "lu_solve",
    "map_point",
    "qlm_iterate",
    "residual_profile",
    "slope_at_origin",
    "solve",
    "to_decimal_string",
]
