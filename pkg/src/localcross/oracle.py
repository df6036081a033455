"""Exhaustive reference solvers.

Everything here enumerates orders in lexicographic order and abandons a
partial order as soon as an edge whose endpoints are both placed exceeds its
budget.  The only symmetry reductions used are ones that provably keep the
lexicographically first success:

* twin vertices (same neighbourhood on the free layer, joined by edges of the
  same weights) are kept in increasing id order, since swapping twins never
  changes a crossing count;
* reflections are removed by requiring the first entry of an order to be
  smaller than the last one (2-layer) or the second smaller than the last
  (circular, with vertex 0 first).
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Optional, Union

from . import config
from .errors import InputError, ResourceError
from .graph import (
    BipartiteInstance,
    CircularDrawing,
    Graph,
    LinearLayout,
    TwoLayerDrawing,
    two_coloring,
)

__all__ = [
    "oracle_one_sided",
    "oracle_two_sided",
    "oracle_outer",
    "oracle_local_outer_crossing_number",
    "oracle_bandwidth",
]


def _edge_limits(inst: BipartiteInstance, k: int, weight_mode: Optional[str]):
    if weight_mode not in (None, "sum", "product"):
        raise InputError(f"unknown weight mode {weight_mode!r}")
    w = inst.graph.weights
    if weight_mode is None:
        return {e: 1 for e in w}, {e: k for e in w}
    if weight_mode == "sum":
        return w, {e: k for e in w}
    return w, {e: k // w[e] for e in w}


def _y_search(inst: BipartiteInstance, x_order, k: int, weight_mode: Optional[str]):
    """Lexicographically first y_order meeting the budget for a fixed x_order, or None."""
    g = inst.graph
    xpos = {x: i for i, x in enumerate(x_order)}
    w, limit = _edge_limits(inst, k, weight_mode)
    ys = sorted(inst.y_side)
    nbhd = {y: frozenset(g.neighbors(y)) for y in ys}
    # twins: same neighbours joined by edges of the same weights
    twin = {y: tuple(sorted((x, w[(min(x, y), max(x, y))]) for x in nbhd[y])) for y in ys}
    smaller_twin = {}
    for y in ys:
        prev = [z for z in ys if z < y and twin[z] == twin[y]]
        smaller_twin[y] = prev[-1] if prev else None
    inc = {y: [((min(x, y), max(x, y)), xpos[x]) for x in nbhd[y]] for y in ys}

    load: dict = {e: 0 for e in g.edges}
    placed_edges: list = []
    order: list[int] = []
    used: set[int] = set()

    def dfs() -> bool:
        if len(order) == len(ys):
            return True
        for y in ys:
            if y in used:
                continue
            t = smaller_twin[y]
            if t is not None and t not in used:
                continue
            touched = []
            ok = True
            for f, pf in inc[y]:
                for e, pe in placed_edges:
                    if pf < pe:
                        load[e] += w[f]
                        load[f] += w[e]
                        touched.append((e, f))
                        if load[e] > limit[e] or load[f] > limit[f]:
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                used.add(y)
                order.append(y)
                placed_edges.extend(inc[y])
                if dfs():
                    return True
                del placed_edges[len(placed_edges) - len(inc[y]):]
                order.pop()
                used.discard(y)
            for e, f in touched:
                load[e] -= w[f]
                load[f] -= w[e]
        return False

    return tuple(order) if dfs() else None


def oracle_one_sided(
    inst: BipartiteInstance,
    k: int,
    weight_mode: Optional[str] = None,
    cap: Optional[int] = None,
) -> Optional[TwoLayerDrawing]:
    """First y_order (lexicographically) whose drawing meets the budget, or None.

    ``weight_mode`` is ``None`` for plain crossing counts, ``"sum"`` for the
    weighted sum of crossing partners and ``"product"`` for ``w(e)`` times it.
    """
    if inst.fixed_x_order is None:
        raise InputError("one-sided instance needs a fixed X order")
    if k < 0:
        raise InputError("k must be nonnegative")
    cap = config.ORACLE_Y_CAP if cap is None else cap
    if len(inst.y_side) > cap:
        raise ResourceError(f"|Y| = {len(inst.y_side)} exceeds the oracle cap {cap}")
    y_order = _y_search(inst, inst.fixed_x_order, k, weight_mode)
    return None if y_order is None else TwoLayerDrawing(inst.fixed_x_order, y_order)


def oracle_two_sided(
    inst: Union[BipartiteInstance, Graph],
    k: int,
    cap: Optional[float] = None,
) -> Optional[TwoLayerDrawing]:
    """Exhaustive search over both layer orders.

    X orders are visited lexicographically with ``x_order[0] < x_order[-1]``
    (reversing both layers preserves every crossing), and for each one the
    lexicographically first feasible y_order is searched.
    """
    if isinstance(inst, Graph):
        sides = two_coloring(inst)
        if sides is None:
            raise InputError("graph is not bipartite")
        inst = BipartiteInstance(inst, sides[0], sides[1])
    if k < 0:
        raise InputError("k must be nonnegative")
    cap = config.ORACLE_TWO_SIDED_CAP if cap is None else cap
    size = math.factorial(len(inst.x_side)) * math.factorial(len(inst.y_side))
    if size > cap:
        raise ResourceError(f"|X|!|Y|! = {size} exceeds the oracle cap {cap}")
    xs = sorted(inst.x_side)
    for x_order in permutations(xs):
        if len(x_order) >= 2 and x_order[0] > x_order[-1]:
            continue
        y_order = _y_search(inst, x_order, k, None)
        if y_order is not None:
            return TwoLayerDrawing(x_order, y_order)
    return None


def _circular_search(g: Graph, budget: int, best_mode: bool):
    """DFS over cyclic orders with vertex 0 first and cycle[1] < cycle[-1].

    In plain mode returns the first order with every count <= budget.  In
    ``best_mode`` it keeps tightening ``budget`` and returns the best order
    found with its maximum count.
    """
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    pos = [-1] * n
    order: list[int] = []
    # placed edges as (alpha, beta, edge-id) with positions alpha < beta
    placed: list[tuple[int, int, int]] = []
    eid = {e: i for i, e in enumerate(g.edges)}
    count = [0] * g.m
    state = {"budget": budget, "best": None, "best_max": None}

    def dfs() -> bool:
        i = len(order)
        if i == n:
            if n >= 3 and order[1] > order[-1]:
                return False
            if not best_mode:
                return True
            cur = max(count, default=0)
            if state["best_max"] is None or cur < state["best_max"]:
                state["best"] = tuple(order)
                state["best_max"] = cur
                state["budget"] = cur - 1
            return state["best_max"] == 0
        lim = state["budget"]
        for v in range(1, n):
            if pos[v] != -1:
                continue
            if i == n - 1 and n >= 3 and order[1] > v:
                continue
            new = [(pos[u], eid[(min(u, v), max(u, v))]) for u in adj[v] if pos[u] != -1]
            touched = []
            ok = True
            for j, f in new:
                for a, b, e in placed:
                    if a < j < b:
                        count[e] += 1
                        count[f] += 1
                        touched.append((e, f))
                        if count[e] > lim or count[f] > lim:
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                pos[v] = i
                order.append(v)
                for j, f in new:
                    placed.append((j, i, f))
                if dfs():
                    return True
                del placed[len(placed) - len(new):]
                order.pop()
                pos[v] = -1
                lim = state["budget"]
            for e, f in touched:
                count[e] -= 1
                count[f] -= 1
        return False

    if n == 0:
        return (), 0
    pos[0] = 0
    order.append(0)
    found = dfs()
    if best_mode:
        return state["best"], state["best_max"]
    return (tuple(order) if found else None), None


def oracle_outer(g: Graph, k: int, cap: Optional[int] = None) -> Optional[CircularDrawing]:
    """First canonical cyclic order (lexicographically) that is outer k-planar, or None."""
    if k < 0:
        raise InputError("k must be nonnegative")
    cap = config.ORACLE_OUTER_N_CAP if cap is None else cap
    if g.n > cap:
        raise ResourceError(f"n = {g.n} exceeds the outer oracle cap {cap}")
    cycle, _ = _circular_search(g, k, best_mode=False)
    return None if cycle is None else CircularDrawing(cycle)


def oracle_local_outer_crossing_number(
    g: Graph, cap: Optional[int] = None
) -> tuple[int, CircularDrawing]:
    """Exact outer local crossing number with an optimal drawing (branch and bound)."""
    cap = config.ORACLE_OUTER_N_CAP if cap is None else cap
    if g.n > cap:
        raise ResourceError(f"n = {g.n} exceeds the outer oracle cap {cap}")
    cycle, best = _circular_search(g, g.m, best_mode=True)
    return best, CircularDrawing(cycle)


def oracle_bandwidth(g: Graph, cap: Optional[int] = None) -> tuple[int, LinearLayout]:
    """Exact bandwidth and the lexicographically first optimal layout."""
    cap = config.ORACLE_BANDWIDTH_N_CAP if cap is None else cap
    n = g.n
    if n > cap:
        raise ResourceError(f"n = {n} exceeds the bandwidth oracle cap {cap}")
    if g.m == 0:
        return 0, LinearLayout(range(n))
    adj = [g.neighbors(v) for v in range(n)]
    lower = max(1, max((len(a) + 1) // 2 for a in adj))
    for b in range(lower, n):
        layout = _bandwidth_search(adj, n, b)
        if layout is not None:
            return b, LinearLayout(layout)
    raise AssertionError("unreachable: bandwidth is at most n-1")


def _bandwidth_search(adj, n: int, b: int) -> Optional[list[int]]:
    pos = [-1] * n
    order: list[int] = []
    unplaced_deg = [len(a) for a in adj]

    def feasible(p: int) -> bool:
        # every placed vertex q must fit its unplaced neighbours into p..q+b
        for q in range(max(0, p - b - 1), p):
            v = order[q]
            need = unplaced_deg[v]
            if need and need > q + b - p + 1:
                return False
        return True

    def dfs() -> bool:
        p = len(order)
        if p == n:
            return True
        for v in range(n):
            if pos[v] != -1:
                continue
            if any(pos[u] != -1 and p - pos[u] > b for u in adj[v]):
                continue
            pos[v] = p
            order.append(v)
            for u in adj[v]:
                unplaced_deg[u] -= 1
            if feasible(p + 1) and dfs():
                return True
            for u in adj[v]:
                unplaced_deg[u] += 1
            order.pop()
            pos[v] = -1
        return False

    return list(order) if dfs() else None
