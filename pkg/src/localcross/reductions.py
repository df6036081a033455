"""Instance generators and witness translators for the hardness reductions.

Vertex naming is fixed so that witnesses map back by id:

* partition gadget on ``A = (a_1, ..., a_n)``: ``x_i -> i`` for
  ``i = 0..n+1``, ``y_mid -> n+2``, ``y_i -> n+2+i``;
* tree gadget for two-sided drawings on a tree with ``n`` vertices: the tree
  keeps ids ``0..n-1``, the subdivision vertex of the j-th edge (sorted) is
  ``n+j``, and the pendants of ``v`` are ``2n-1+v*l .. 2n-1+(v+1)*l-1``;
* apex graph: the apex is ``n``;
* clique path ``CP(t, l)``: ``v_{i,j} -> (i-1)(t-1) + (j-1)``;
* tree gadget for circular drawings: ``CP_v`` occupies ids
  ``v*s .. (v+1)*s-1`` where ``s`` is the size of one clique path, the apex
  is ``n*s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError
from .graph import (
    BipartiteInstance,
    CircularDrawing,
    Graph,
    LinearLayout,
    TwoLayerDrawing,
    is_connected,
)

__all__ = [
    "PartitionReduction",
    "partition_to_weighted_one_sided",
    "partition_drawing_from_subset",
    "subset_from_partition_drawing",
    "TreeGadget",
    "bandwidth_tree_to_two_sided",
    "two_sided_drawing_from_layout",
    "layout_from_two_sided_drawing",
    "tree_to_apex",
    "apex_drawing_from_layout",
    "layout_from_outer_drawing",
    "CliquePath",
    "clique_path",
    "OuterTreeGadget",
    "outer_gadget_parameters",
    "bandwidth_tree_to_outer",
    "outer_drawing_from_layout",
]


def _require_tree(t: Graph) -> None:
    if t.n == 0 or t.m != t.n - 1 or not is_connected(t):
        raise InputError("input graph is not a tree")


def _require_layout(t: Graph, layout: LinearLayout) -> None:
    if sorted(layout.order) != list(range(t.n)):
        raise InputError("layout must list every tree vertex exactly once")


# ---------------------------------------------------------------------------
# Partition -> weighted one-sided
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionReduction:
    """The weighted gadget for a Partition instance.

    ``trivial_no`` is set for an odd total: such an ``A`` has no partition,
    but the gadget is only faithful for even totals, so callers should
    answer NO without solving it.
    """

    a: tuple[int, ...]
    instance: BipartiteInstance
    k: int
    trivial_no: bool

    @property
    def y_mid(self) -> int:
        return len(self.a) + 2

    def y_of(self, i: int) -> int:
        """Id of ``y_i`` for ``1 <= i <= n``."""
        return len(self.a) + 2 + i


def partition_to_weighted_one_sided(a: Sequence[int]) -> PartitionReduction:
    """Build the gadget: the middle Y vertex is joined to both outer X vertices,
    every ``a_i`` becomes an edge of weight ``2 a_i``, and ``k = sum(A) + 1``.

    Solve it with the ``sum`` weight mode.  An edge at ``y_i`` left of the
    middle vertex crosses the first edge, one right of it crosses the last
    edge, so for an even total both loads stay within k exactly when the
    two sides carry equal sums.
    """
    a = tuple(a)
    if not a:
        raise InputError("A must be nonempty")
    if any(not isinstance(v, int) or v <= 0 for v in a):
        raise InputError("A must consist of positive integers")
    n = len(a)
    y_mid = n + 2
    edges = [(0, y_mid), (n + 1, y_mid)] + [(i, y_mid + i) for i in range(1, n + 1)]
    weights = {(i, y_mid + i): 2 * a[i - 1] for i in range(1, n + 1)}
    g = Graph(2 * n + 3, edges, weights)
    xs = list(range(n + 2))
    inst = BipartiteInstance(g, xs, fixed_x_order=xs)
    total = sum(a)
    return PartitionReduction(a, inst, total + 1, total % 2 == 1)


def partition_drawing_from_subset(red: PartitionReduction, left: Iterable[int]) -> TwoLayerDrawing:
    """Drawing for a partition: ``y_i`` for ``i`` in ``left`` (1-based) go left of the middle vertex."""
    left = sorted(set(left))
    n = len(red.a)
    if any(not 1 <= i <= n for i in left):
        raise InputError("indices must lie in 1..n")
    right = [i for i in range(1, n + 1) if i not in left]
    y_order = [red.y_of(i) for i in left] + [red.y_mid] + [red.y_of(i) for i in right]
    return TwoLayerDrawing(red.instance.fixed_x_order, y_order)


def subset_from_partition_drawing(red: PartitionReduction, drawing: TwoLayerDrawing) -> list[int]:
    """Indices (1-based) whose Y vertex lies left of the middle vertex."""
    cut = drawing.y_order.index(red.y_mid)
    return sorted(y - red.y_mid for y in drawing.y_order[:cut])


# ---------------------------------------------------------------------------
# Bandwidth on trees -> two-sided
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeGadget:
    """Subdivided tree with pendant leaves on every original vertex."""

    tree: Graph
    b: int
    instance: BipartiteInstance
    k: int
    ell: int
    subdivision: dict  # tree edge -> subdivision vertex
    pendants: tuple[tuple[int, ...], ...]  # per original vertex


def bandwidth_tree_to_two_sided(tree: Graph, b: int) -> TreeGadget:
    """Gadget that is 2-layer k-planar exactly when the tree has bandwidth <= b.

    ``l = 2 b^2`` pendants per vertex and ``k = l(b-1)/2 + 2b - 2``.  The
    formula gives a negative k for ``b = 0``, so ``b >= 1`` is required.
    """
    _require_tree(tree)
    if b < 1:
        raise InputError("b must be at least 1")
    n = tree.n
    ell = 2 * b * b
    k = ell * (b - 1) // 2 + 2 * b - 2
    edges = []
    sub = {}
    for j, (u, v) in enumerate(tree.edges):
        w = n + j
        sub[(u, v)] = w
        edges += [(u, w), (v, w)]
    base = 2 * n - 1
    pendants = []
    for v in range(n):
        ps = tuple(range(base + v * ell, base + (v + 1) * ell))
        pendants.append(ps)
        edges += [(v, p) for p in ps]
    g = Graph(base + n * ell, edges)
    inst = BipartiteInstance(g, range(n))
    return TreeGadget(tree, b, inst, k, ell, sub, tuple(pendants))


def two_sided_drawing_from_layout(gadget: TreeGadget, layout: LinearLayout) -> TwoLayerDrawing:
    """Drawing built from a layout of the tree.

    X follows the layout, pendants follow their neighbours, and each
    subdivision vertex sits in the middle of the pendants strictly between
    its two tree neighbours, so its two edges cross equally many of them.
    """
    tree = gadget.tree
    _require_layout(tree, layout)
    pos = {v: i for i, v in enumerate(layout.order)}
    ell = gadget.ell
    y_order: list[int] = []
    for v in layout.order:
        y_order.extend(gadget.pendants[v])
    slots = []
    for (u, v), w in gadget.subdivision.items():
        lo, hi = sorted((pos[u], pos[v]))
        between = (hi - lo - 1) * ell
        slots.append(((lo + 1) * ell + between // 2, lo, hi, w))
    for gap, _, _, w in sorted(slots, reverse=True):
        y_order.insert(gap, w)
    return TwoLayerDrawing(layout.order, y_order)


def layout_from_two_sided_drawing(gadget: TreeGadget, drawing: TwoLayerDrawing) -> LinearLayout:
    """The X order of a gadget drawing, read as a layout of the tree."""
    return LinearLayout(drawing.x_order)


# ---------------------------------------------------------------------------
# apex graphs
# ---------------------------------------------------------------------------

def tree_to_apex(tree: Graph) -> Graph:
    """The tree plus a vertex ``n`` adjacent to every tree vertex."""
    _require_tree(tree)
    n = tree.n
    return Graph(n + 1, list(tree.edges) + [(v, n) for v in range(n)])


def apex_drawing_from_layout(tree: Graph, layout: LinearLayout) -> CircularDrawing:
    """The cyclic order ``(apex, v_1, ..., v_n)``."""
    _require_layout(tree, layout)
    return CircularDrawing([tree.n] + list(layout.order))


def layout_from_outer_drawing(tree: Graph, drawing: CircularDrawing) -> LinearLayout:
    """Cut the cyclic order open at the apex.

    If the drawing is outer k-planar, a tree edge of stretch s is crossed by
    the ``s - 1`` apex edges to the vertices it spans, so the layout has
    bandwidth at most ``k + 1``.
    """
    apex = tree.n
    cyc = list(drawing.cycle)
    if sorted(cyc) != list(range(apex + 1)):
        raise InputError("drawing does not match the apex graph of this tree")
    i = cyc.index(apex)
    return LinearLayout(cyc[i + 1:] + cyc[:i])


# ---------------------------------------------------------------------------
# clique paths and the circular tree gadget
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CliquePath:
    t: int
    ell: int
    graph: Graph
    anchors: tuple[int, ...]
    middle: int

    @property
    def order(self) -> tuple[int, ...]:
        """The vertices clique by clique, which is simply ``0..size-1``."""
        return tuple(range(self.graph.n))


def _clique_path_size(t: int, ell: int) -> int:
    return (ell - 1) * (t - 1) + 1


def _check_cp(t: int, ell: int) -> None:
    if t <= 1:
        raise InputError("t must exceed 1")
    if ell <= 1 or ell % 2 == 0:
        raise InputError("l must be odd and exceed 1")


def _clique_path_parts(t: int, ell: int):
    def vid(i: int, j: int) -> int:
        return (i - 1) * (t - 1) + (j - 1)

    edges = []
    for i in range(1, ell):
        edges.extend(combinations([vid(i, j) for j in range(1, t + 1)], 2))
    anchors = tuple(vid(i, 1) for i in range(1, ell)) + (vid(ell - 1, t),)
    return edges, anchors, vid((ell - 1) // 2, t)


def clique_path(t: int, ell: int) -> CliquePath:
    """``l - 1`` cliques of size t, each sharing its last vertex with the next one's first."""
    _check_cp(t, ell)
    edges, anchors, middle = _clique_path_parts(t, ell)
    return CliquePath(t, ell, Graph(_clique_path_size(t, ell), edges), anchors, middle)


def outer_gadget_parameters(b: int) -> dict:
    """``t``, ``l``, ``k`` and the clique path size for a bandwidth bound ``b >= 3``."""
    if b < 3:
        raise InputError("b must be at least 3")
    t = 4 * (b * b + 1) + 2
    ell = 4 * b ** 3 + 1
    k = ((t - 2) // 2) ** 2
    return {"t": t, "ell": ell, "k": k, "gadget_size": _clique_path_size(t, ell)}


@dataclass(frozen=True)
class OuterTreeGadget:
    tree: Graph
    b: int
    graph: Graph
    k: int
    t: int
    ell: int
    gadget_size: int

    @property
    def apex(self) -> int:
        return self.tree.n * self.gadget_size


def bandwidth_tree_to_outer(tree: Graph, b: int) -> OuterTreeGadget:
    """Circular gadget: one clique path per tree vertex, an apex on every
    anchor, and an edge between the middle vertices of adjacent tree vertices.

    Outer k-planar exactly when the tree has bandwidth at most b.  The
    instances are far too large to solve; they exist for export.
    """
    _require_tree(tree)
    p = outer_gadget_parameters(b)
    t, ell, k, s = p["t"], p["ell"], p["k"], p["gadget_size"]
    local, anchors, middle = _clique_path_parts(t, ell)
    n = tree.n
    apex = n * s
    edges = []
    for v in range(n):
        off = v * s
        edges.extend((off + a, off + c) for a, c in local)
        edges.extend((off + a, apex) for a in anchors)
    edges.extend((u * s + middle, v * s + middle) for u, v in tree.edges)
    return OuterTreeGadget(tree, b, Graph(apex + 1, edges), k, t, ell, s)


def outer_drawing_from_layout(gadget: OuterTreeGadget, layout: LinearLayout) -> CircularDrawing:
    """``(apex, CP_{v_1}, ..., CP_{v_n})`` with each clique path in clique order."""
    _require_layout(gadget.tree, layout)
    s = gadget.gadget_size
    cyc = [gadget.apex]
    for v in layout.order:
        cyc.extend(range(v * s, (v + 1) * s))
    return CircularDrawing(cyc)
