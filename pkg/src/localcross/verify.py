"""Independent certificate checks.

These only use the crossing counters of :mod:`localcross.graph`; none of the
solver code is involved.
"""

from __future__ import annotations

from typing import Optional, Union

from .graph import (
    BipartiteInstance,
    CircularDrawing,
    Graph,
    TwoLayerDrawing,
    circular_crossings_per_edge,
    two_layer_crossings_per_edge,
    two_layer_weighted_load,
)

__all__ = ["verify_two_layer", "verify_circular", "verify_drawing", "PROBLEMS"]

PROBLEMS = ("one-sided", "two-sided", "outer")


def verify_two_layer(
    inst: BipartiteInstance,
    drawing: TwoLayerDrawing,
    k: int,
    weight_mode: Optional[str] = None,
    fixed: bool = False,
) -> bool:
    """Orders cover the two sides exactly, respect the fixed order if asked,
    and every edge stays within its budget."""
    if sorted(drawing.x_order) != sorted(inst.x_side) or sorted(drawing.y_order) != sorted(inst.y_side):
        return False
    if fixed and tuple(drawing.x_order) != tuple(inst.fixed_x_order or ()):
        return False
    g = inst.graph
    if weight_mode is None:
        counts = two_layer_crossings_per_edge(g, drawing)
        return all(c <= k for c in counts.values())
    load = two_layer_weighted_load(g, drawing, weight_mode)
    return all(c <= k for c in load.values())


def verify_circular(g: Graph, drawing: CircularDrawing, k: int) -> bool:
    if sorted(drawing.cycle) != list(range(g.n)):
        return False
    return all(c <= k for c in circular_crossings_per_edge(g, drawing).values())


def verify_drawing(
    problem: str,
    instance: Union[BipartiteInstance, Graph],
    drawing: Union[TwoLayerDrawing, CircularDrawing],
    k: int,
    weight_mode: Optional[str] = None,
) -> bool:
    if problem == "outer":
        g = instance.graph if isinstance(instance, BipartiteInstance) else instance
        return isinstance(drawing, CircularDrawing) and verify_circular(g, drawing, k)
    if not isinstance(drawing, TwoLayerDrawing) or not isinstance(instance, BipartiteInstance):
        return False
    return verify_two_layer(instance, drawing, k, weight_mode, fixed=problem == "one-sided")
