"""Exact solvers for local crossing problems on 2-layer and circular drawings.

The main entry points are :func:`solve_one_sided`, :func:`solve_two_sided`
and :func:`solve_outer`; each returns a drawing or None.
"""

from .errors import InputError, InvariantViolation, LocalCrossError, OracleMismatch, ResourceError
from .graph import (
    BipartiteInstance,
    CircularDrawing,
    Graph,
    LinearLayout,
    TwoLayerDrawing,
    circular_crossings_per_edge,
    two_layer_crossings_per_edge,
)
from .one_sided import SolveStats, solve_one_sided, solve_one_sided_weighted
from .outer import local_outer_crossing_number, solve_outer
from .two_sided import solve_two_sided

__version__ = "0.1.0"

__all__ = [
    "BipartiteInstance",
    "CircularDrawing",
    "Graph",
    "InputError",
    "InvariantViolation",
    "LinearLayout",
    "LocalCrossError",
    "OracleMismatch",
    "ResourceError",
    "SolveStats",
    "TwoLayerDrawing",
    "circular_crossings_per_edge",
    "local_outer_crossing_number",
    "solve_one_sided",
    "solve_one_sided_weighted",
    "solve_outer",
    "solve_two_sided",
    "two_layer_crossings_per_edge",
]
