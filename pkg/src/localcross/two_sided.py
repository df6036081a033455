"""Two-sided k-planarity: both layer orders are free.

The same sweep as the one-sided solver, except that the next X vertex is
chosen freely.  A state remembers the last ``2k+1`` placed X vertices ``S``
(in order), which components of ``G - N[S]`` are already placed, the order of
``N(S)``, the budgets of the edges at ``S``, and the barrier.  In a k-planar
drawing every component of ``G - N[S]`` lies entirely left or entirely right
of a block ``S`` of ``2k+1`` consecutive X vertices, so the placed vertices
outside ``S`` must always form a union of such components; states violating
this are discarded.  That is what keeps the table at ``n^{O(k)}`` size.
"""

from __future__ import annotations

from typing import Iterable, Optional, Union

from . import config
from ._sweep import Sweep, replay
from .errors import InputError, InvariantViolation
from .graph import (
    BipartiteInstance,
    Graph,
    TwoLayerDrawing,
    connected_components,
    two_coloring,
)
from .one_sided import SolveStats, reduce_degrees, reinsert_leaves

__all__ = [
    "components_outside_window",
    "check_separator_property",
    "component_bound",
    "solve_two_sided",
]


def component_bound(k: int) -> int:
    return (2 * k + 2) * (2 * k + 1) ** 2


def components_outside_window(
    g: Graph, S: Iterable[int], vertices: Optional[Iterable[int]] = None
) -> list[list[int]]:
    """Connected components of ``G - N[S]``, each sorted, ordered by minimum vertex.

    ``vertices`` restricts the graph to an induced subgraph first.
    """
    S = set(S)
    closed = set(S)
    for x in S:
        closed |= g.neighbors(x)
    pool = g.vertices if vertices is None else vertices
    return connected_components(g, [v for v in pool if v not in closed])


def check_separator_property(g: Graph, drawing: TwoLayerDrawing, S: Iterable[int]) -> bool:
    """True iff every component of ``G - N[S]`` has its X vertices all left or all right of S.

    ``S`` must occupy consecutive positions of ``drawing.x_order``.
    """
    S = set(S)
    if not S:
        return True
    pos = {x: i for i, x in enumerate(drawing.x_order)}
    if any(x not in pos for x in S):
        raise InputError("S must consist of X vertices of the drawing")
    lo, hi = min(pos[x] for x in S), max(pos[x] for x in S)
    if hi - lo + 1 != len(S):
        raise InputError("S is not consecutive in the X order")
    for comp in components_outside_window(g, S):
        sides = {pos[v] < lo for v in comp if v in pos}
        if len(sides) > 1:
            return False
    return True


class _Component:
    """Search on one connected, degree-reduced component."""

    def __init__(self, g: Graph, xs: list[int], k: int, cap: int, stats: SolveStats):
        self.g = g
        self.k = k
        self.width = 2 * k + 1
        self.xs = sorted(xs)
        self.all_x = frozenset(xs)
        self.cap = cap
        self.stats = stats
        self.sweep = Sweep(g, k)
        self.nbrs = {x: sorted(g.neighbors(x)) for x in xs}
        self._comps: dict[frozenset, list[tuple[int, frozenset]]] = {}
        self.live = [v for v in g.vertices if g.degree(v) > 0]

    def comps(self, S: tuple[int, ...]) -> list[tuple[int, frozenset]]:
        key = frozenset(S)
        got = self._comps.get(key)
        if got is None:
            got = [
                (c[0], frozenset(v for v in c if v in self.all_x))
                for c in components_outside_window(self.g, S, self.live)
            ]
            if len(S) == self.width and len(got) > component_bound(self.k):
                raise InvariantViolation(
                    f"{len(got)} components outside a window, bound is {component_bound(self.k)}"
                )
            self._comps[key] = got
        return got

    def split(self, S: tuple[int, ...], placed: frozenset) -> Optional[tuple[int, ...]]:
        """Component ids making up ``placed - S``, or None if that set is not such a union."""
        rest = placed - set(S)
        ids = []
        covered = 0
        for cid, xpart in self.comps(S):
            inter = xpart & rest
            if inter:
                if len(inter) != len(xpart):
                    return None
                ids.append(cid)
                covered += len(xpart)
        return tuple(ids) if covered == len(rest) else None

    def run(self) -> Optional[tuple[list[int], list[int]]]:
        g, W = self.g, self.width
        start = ((), (), (), (), 0)
        layers: list[dict] = []
        prev: dict = {start: (None, None, None, frozenset())}
        for _ in range(len(self.xs)):
            cur: dict = {}
            for key in sorted(prev):
                S, _, order, chi, b = key
                placed = prev[key][3]
                open_edges = [(x, y) for x in S for y in self.nbrs[x]]
                for u in self.xs:
                    if u in placed:
                        continue
                    S2 = (S + (u,))[-W:]
                    placed2 = placed | {u}
                    cids = self.split(S2, placed2)
                    if cids is None:
                        continue
                    closing = {S[0]} if len(S) == W else set()

                    def future(y: int, placed2: frozenset = placed2) -> Optional[tuple[int, int]]:
                        n = sum(1 for x in g.neighbors(y) if x not in placed2)
                        return (n, self.k) if n else None

                    for merged, edges, nchi in self.sweep.extend(order, open_edges, chi, b, u, self.nbrs[u]):
                        res = self.sweep.finish(merged, edges, nchi, b, closing, future)
                        if res is None:
                            continue
                        norder, _, nchi2, nb = res
                        nkey = (S2, cids, norder, nchi2, nb)
                        if nkey not in cur:
                            cur[nkey] = (key, u, merged, placed2)
            self.stats.layer(len(cur), self.cap)
            if not cur:
                return None
            layers.append(cur)
            prev = cur

        key = min(layers[-1])
        steps = []
        for layer in reversed(layers):
            parent, u, merged, _ = layer[key]
            steps.append((u, parent[2], merged))
            key = parent
        x_order: list[int] = []
        y_order: list[int] = []
        for u, old, merged in reversed(steps):
            x_order.append(u)
            replay(y_order, old, merged)
        return x_order, y_order


def _solve_connected(
    g: Graph, xs: frozenset, ys: frozenset, k: int, cap: int, stats: SolveStats
) -> Optional[tuple[list[int], list[int]]]:
    if g.m == 0:
        return sorted(xs), sorted(ys)
    inst = BipartiteInstance(g, xs, ys)
    red_x = reduce_degrees(inst, k, "X")
    if red_x is None:
        return None
    red_y = reduce_degrees(red_x.instance, k, "Y")
    if red_y is None:
        return None
    work = red_y.instance.graph
    live_x = [x for x in xs if work.degree(x) > 0]
    found = _Component(work, live_x, k, cap, stats).run()
    if found is None:
        return None
    x_order, y_order = found
    reinsert_leaves(work, x_order, red_y.removed_leaves, k)
    reinsert_leaves(red_x.instance.graph, y_order, red_x.removed_leaves, k)
    return x_order, y_order


def solve_two_sided(
    inst: Union[BipartiteInstance, Graph],
    k: int,
    *,
    table_cap: Optional[int] = None,
    stats: Optional[SolveStats] = None,
) -> Optional[TwoLayerDrawing]:
    """A 2-layer k-planar drawing with both orders free, or None.

    A plain :class:`Graph` is 2-coloured first (smallest vertex of each
    component on the X side).  Components are solved separately and their
    orders concatenated, which adds no crossings.
    """
    if isinstance(inst, Graph):
        sides = two_coloring(inst)
        if sides is None:
            raise InputError("graph is not bipartite")
        inst = BipartiteInstance(inst, sides[0], sides[1])
    if k < 0:
        raise InputError("k must be nonnegative")
    stats = stats if stats is not None else SolveStats()
    cap = config.table_cap(table_cap)
    g = inst.graph
    x_order: list[int] = []
    y_order: list[int] = []
    for comp in connected_components(g):
        sub, old = g.induced(comp)
        back = dict(enumerate(old))
        xs = frozenset(i for i, v in enumerate(old) if v in inst.x_side)
        ys = frozenset(range(len(old))) - xs
        found = _solve_connected(sub, xs, ys, k, cap, stats)
        if found is None:
            return None
        x_order.extend(back[v] for v in found[0])
        y_order.extend(back[v] for v in found[1])
    return TwoLayerDrawing(x_order, y_order)
