"""One-sided k-planarity: the X order is fixed, find a Y order.

The solver is a left-to-right dynamic program over the fixed X order.  After
placing ``x_i`` its state is the order of the Y vertices that still matter,
the crossing budget already used by every edge that can still be crossed, and
a barrier marking the rightmost Y endpoint of an edge whose count is final.
Edges of ``x_j`` become final once the X vertices after ``x_j`` carry enough
edges that any later crossing would overload one of two crossing edges (the
far-edges property).  The number of states is bounded by a function of k,
so the running time is linear in ``|X|`` for fixed k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import config
from ._sweep import Sweep, replay
from .errors import InputError, InvariantViolation, ResourceError
from .graph import BipartiteInstance, Graph, TwoLayerDrawing

__all__ = [
    "DegreeReducedInstance",
    "reduce_degrees",
    "reinsert_leaves",
    "dynamic_window",
    "solve_one_sided",
    "solve_one_sided_weighted",
    "SolveStats",
]


@dataclass
class SolveStats:
    """Table statistics filled in by the solvers."""

    entries: int = 0
    peak: int = 0
    extra: dict = field(default_factory=dict)

    def layer(self, size: int, cap: int) -> None:
        self.entries += size
        self.peak = max(self.peak, size)
        if self.entries > cap:
            raise ResourceError(f"memo table exceeded the cap of {cap} entries")


@dataclass(frozen=True)
class DegreeReducedInstance:
    """Result of leaf deletion.  Removed leaves stay in the graph as isolated vertices."""

    instance: BipartiteInstance
    removed_leaves: tuple[tuple[int, int], ...]  # (leaf, anchor) in removal order


def reduce_degrees(inst: BipartiteInstance, k: int, side: str = "X") -> Optional[DegreeReducedInstance]:
    """Apply the non-leaf-degree test and leaf deletion on one side.

    Returns None if some vertex has more than ``2k+2`` non-leaf neighbours
    (no k-planar 2-layer drawing exists).  Otherwise, while a vertex of
    ``side`` has degree above ``2k+2``, one of its leaf neighbours (the one
    with the largest id) is deleted.  Deleting such a leaf never changes the
    answer, and the leaf can be put back without new crossings.
    """
    if k < 0:
        raise InputError("k must be nonnegative")
    if side not in ("X", "Y"):
        raise InputError("side must be 'X' or 'Y'")
    g = inst.graph
    bound = 2 * k + 2
    for v in g.vertices:
        if sum(1 for u in g.neighbors(v) if g.degree(u) > 1) > bound:
            return None
    adj = [set(a) for a in g.adjacency]
    removed: list[tuple[int, int]] = []
    for v in sorted(inst.x_side if side == "X" else inst.y_side):
        while len(adj[v]) > bound:
            leaf = max(u for u in adj[v] if len(adj[u]) == 1)
            adj[v].discard(leaf)
            adj[leaf].discard(v)
            removed.append((leaf, v))
    if not removed:
        return DegreeReducedInstance(inst, ())
    gone = {(min(a, b), max(a, b)) for a, b in removed}
    weights = {e: w for e, w in g.weights.items() if e not in gone}
    reduced = Graph(g.n, [e for e in g.edges if e not in gone], weights)
    return DegreeReducedInstance(
        BipartiteInstance(reduced, inst.x_side, inst.y_side, inst.fixed_x_order), tuple(removed)
    )


def reinsert_leaves(
    g: Graph, layer: list[int], removed: tuple[tuple[int, int], ...], k: int
) -> None:
    """Put removed leaves back into ``layer`` (the order of their side), newest first.

    ``g`` is the reduced graph.  Each leaf goes immediately left of the
    ``(k+2)``-th neighbour of its anchor, which carries no crossing because
    the anchor still has at least ``2k+2`` neighbours at that point.
    """
    extra: dict[int, list[int]] = {}
    for leaf, anchor in reversed(removed):
        nbrs = set(g.neighbors(anchor)) | set(extra.get(anchor, ()))
        pos = {v: i for i, v in enumerate(layer)}
        ranked = sorted(nbrs, key=pos.__getitem__)
        if len(ranked) < 2 * k + 2:
            raise InvariantViolation(f"anchor {anchor} has only {len(ranked)} neighbours at reinsertion")
        layer.insert(pos[ranked[k + 1]], leaf)
        extra.setdefault(anchor, []).append(leaf)


def _window_length(degrees: list[int], k: int, i: int) -> int:
    need = 2 * k + 1
    total = 0
    for ell in range(len(degrees) - i):
        total += degrees[i + ell]
        if total >= need:
            return ell
    return len(degrees) - 1 - i


def dynamic_window(inst: BipartiteInstance, k: int, i: int) -> int:
    """Smallest ``l`` such that ``x_i, ..., x_{i+l}`` carry at least ``2k+1`` edges.

    Indices are 0-based positions in ``fixed_x_order``.  When the rest of the
    order carries fewer edges the window runs to the last vertex.
    """
    if inst.fixed_x_order is None:
        raise InputError("instance has no fixed X order")
    if not 0 <= i < len(inst.fixed_x_order):
        raise InputError(f"index {i} out of range")
    degrees = [inst.graph.degree(x) for x in inst.fixed_x_order]
    return _window_length(degrees, k, i)


def _closing_schedule(degrees: list[int], k: int, window: str) -> list[list[int]]:
    """closing[i] lists the positions whose edges become final after step i.

    ``fixed``: after ``2k`` further X vertices.  ``dynamic``: once the
    vertices strictly between hold at least ``2k+1`` edges, which is the
    window of the successor.
    """
    n = len(degrees)
    closing: list[list[int]] = [[] for _ in range(n)]
    for j in range(n - 1):
        if window == "fixed":
            c = j + 2 * k
        elif window == "dynamic":
            c = j + 1 + _window_length(degrees, k, j + 1)
        else:
            raise InputError(f"unknown window policy {window!r}")
        if c < n:
            closing[max(c, j)].append(j)
    return closing


def _sweep_fixed_order(
    g: Graph,
    x_order: list[int],
    k: int,
    weight_mode: Optional[str],
    window: str,
    cap: int,
    stats: SolveStats,
) -> Optional[list[int]]:
    """Y order of the non-isolated Y vertices, or None."""
    xs = [x for x in x_order if g.degree(x) > 0]
    n = len(xs)
    if n == 0:
        return []
    idx = {x: i for i, x in enumerate(xs)}
    closing = _closing_schedule([g.degree(x) for x in xs], k, window)
    sweep = Sweep(g, k, weight_mode)
    # per Y vertex: its edges as (step, weight, budget), latest first
    later: dict[int, list[tuple[int, int, int]]] = {}
    for x in xs:
        for y in g.neighbors(x):
            later.setdefault(y, []).append((idx[x], sweep.wt[(x, y)], sweep.lim[(x, y)]))
    for lst in later.values():
        lst.sort(reverse=True)

    layers: list[dict] = []
    prev: dict = {((), (), 0): None}
    open_edges: list = []
    for i, u in enumerate(xs):
        nbrs = sorted(g.neighbors(u))
        close = {xs[j] for j in closing[i]}
        memo: dict[int, Optional[tuple[int, int]]] = {}

        def future(y: int, i: int = i, memo: dict = memo) -> Optional[tuple[int, int]]:
            if y not in memo:
                tot, low = 0, None
                for step, w, lim in later[y]:
                    if step <= i:
                        break
                    tot += w
                    low = lim if low is None else min(low, lim)
                memo[y] = None if low is None else (tot, low)
            return memo[y]

        cur: dict = {}
        next_edges = None
        for key in sorted(prev):
            order, chi, b = key
            for merged, edges, nchi in sweep.extend(order, open_edges, chi, b, u, nbrs):
                res = sweep.finish(merged, edges, nchi, b, close, future)
                if res is None:
                    continue
                norder, nedges, nchi2, nb = res
                next_edges = nedges
                nkey = (norder, nchi2, nb)
                if nkey not in cur:
                    cur[nkey] = (key, merged)
        stats.layer(len(cur), cap)
        if not cur:
            return None
        layers.append(cur)
        prev = cur
        open_edges = next_edges

    key = min(layers[-1])
    plan = []
    for i in range(n - 1, -1, -1):
        parent, merged = layers[i][key]
        plan.append((parent[0], merged))
        key = parent
    glob: list[int] = []
    for old, merged in reversed(plan):
        replay(glob, old, merged)
    return glob


def _solve(
    inst: BipartiteInstance,
    k: int,
    weight_mode: Optional[str],
    window: str,
    reduce: bool,
    table_cap: Optional[int],
    stats: Optional[SolveStats],
) -> Optional[TwoLayerDrawing]:
    if inst.fixed_x_order is None:
        raise InputError("one-sided instance needs a fixed X order")
    if k < 0:
        raise InputError("k must be nonnegative")
    stats = stats if stats is not None else SolveStats()
    cap = config.table_cap(table_cap)
    removed: tuple = ()
    work = inst
    if reduce:
        red = reduce_degrees(inst, k, "X")
        if red is None:
            return None
        work, removed = red.instance, red.removed_leaves
    y_order = _sweep_fixed_order(
        work.graph, list(inst.fixed_x_order), k, weight_mode, window, cap, stats
    )
    if y_order is None:
        return None
    reinsert_leaves(work.graph, y_order, removed, k)
    placed = set(y_order)
    y_order.extend(sorted(y for y in inst.y_side if y not in placed))
    return TwoLayerDrawing(inst.fixed_x_order, y_order)


def solve_one_sided(
    inst: BipartiteInstance,
    k: int,
    *,
    window: str = "dynamic",
    reduce: bool = True,
    table_cap: Optional[int] = None,
    stats: Optional[SolveStats] = None,
) -> Optional[TwoLayerDrawing]:
    """A 2-layer k-planar drawing respecting ``inst.fixed_x_order``, or None.

    Edge weights, if any, are ignored; see :func:`solve_one_sided_weighted`.

    Parameters
    ----------
    window : {"dynamic", "fixed"}
        How long an edge stays open: until ``2k`` more X vertices have been
        placed (``fixed``) or until the following vertices carry ``2k+1``
        edges (``dynamic``).  Both give the same answers.
    reduce : bool
        Apply the non-leaf-degree test and leaf deletion first.
    """
    return _solve(inst, k, None, window, reduce, table_cap, stats)


def solve_one_sided_weighted(
    inst: BipartiteInstance,
    k: int,
    mode: str = "sum",
    *,
    window: str = "dynamic",
    table_cap: Optional[int] = None,
    stats: Optional[SolveStats] = None,
) -> Optional[TwoLayerDrawing]:
    """Weighted variant: every edge ``e`` must satisfy the budget of ``mode``.

    ``sum``: the weights of the edges crossing ``e`` add up to at most k.
    ``product``: ``w(e)`` times that sum is at most k.  Leaf deletion and
    the non-leaf-degree test are not applied.
    """
    if mode not in ("sum", "product"):
        raise InputError(f"unknown weight mode {mode!r}")
    return _solve(inst, k, mode, window, False, table_cap, stats)
