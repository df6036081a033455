"""Outer k-planarity by splitting triangles.

For an ordered pair ``(u, v)`` and a set ``R`` of vertices that will lie on
the arc from ``v`` back to ``u``, the cut ``C`` between ``R`` and the rest
(``L``) has at most k edges.  Given an order ``tau`` of ``C`` (the order in
which the cut edges leave the region), the solver computes every vector
``chi`` of crossing counts the cut edges can have *inside* the region while
everything inside stays k-planar.  Such a region is split at a vertex ``w``
into a region for ``(u, w)`` and one for ``(w, v)``.  The crossings in the
triangle ``u, v, w`` that remains only depend on the three cut orders, so
they are counted in a small fixed circular drawing (the frame).

The graph is decomposed into blocks first.  The block drawings are glued at
cut vertices.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Iterable, Optional, Sequence

from . import config
from .errors import InputError, InvariantViolation, ResourceError
from .graph import (
    CircularDrawing,
    Edge,
    Graph,
    biconnected_components,
    circular_pierce,
    connected_components,
    density_guard,
    is_biconnected,
    norm_edge,
)
from .one_sided import SolveStats

__all__ = [
    "cut_edges",
    "enumerate_candidate_Rs",
    "triangle_crossings",
    "combine_budgets",
    "check_consistency",
    "too_many_components",
    "solve_outer_biconnected",
    "solve_outer",
    "local_outer_crossing_number",
]


def cut_edges(g: Graph, u: int, v: int, R: Iterable[int]) -> list[Edge]:
    """Edges between ``R`` and ``V - ({u, v} | R)``, sorted."""
    R = set(R)
    out = []
    for r in R:
        for x in g.neighbors(r):
            if x not in R and x != u and x != v:
                out.append(norm_edge((r, x)))
    return sorted(out)


def enumerate_candidate_Rs(g: Graph, u: int, v: int, k: int) -> list[frozenset[int]]:
    """All ``R`` of ``V - {u, v}`` with at most k edges between ``R`` and the rest.

    These are exactly the unions of components of ``G - {u, v} - F`` over
    edge sets ``|F| <= k``.  Found by branching vertex by vertex with the
    partial cut as bound.
    """
    if u == v:
        raise InputError("u and v must differ")
    if not is_biconnected(g):
        raise InputError("candidate enumeration expects a biconnected graph")
    rest = _bfs_order(g, [x for x in g.vertices if x not in (u, v)])
    found: list[frozenset[int]] = []
    side: dict[int, bool] = {}

    def rec(i: int, cut: int) -> None:
        if i == len(rest):
            found.append(frozenset(x for x, s in side.items() if s))
            return
        x = rest[i]
        for s in (False, True):
            add = sum(1 for y in g.neighbors(x) if y in side and side[y] != s)
            if cut + add <= k:
                side[x] = s
                rec(i + 1, cut + add)
                del side[x]

    rec(0, 0)
    return sorted(found, key=lambda r: (len(r), sorted(r)))


def _bfs_order(g: Graph, vertices: Sequence[int]) -> list[int]:
    """Order ``vertices`` so that each one tends to follow a neighbour."""
    pool = set(vertices)
    seen: set[int] = set()
    out: list[int] = []
    for s in sorted(pool):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            x = queue.pop(0)
            out.append(x)
            for y in sorted(g.neighbors(x)):
                if y in pool and y not in seen:
                    seen.add(y)
                    queue.append(y)
    return out


def too_many_components(g: Graph, k: int) -> bool:
    """True if some pair ``{u, v}`` leaves more than ``2k+3`` components.

    In a biconnected graph each component of ``G - {u, v}`` yields an
    internally disjoint u-v path, and an outer k-planar graph has at most
    ``2k+3`` of those between any two vertices.
    """
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if len(connected_components(g, [x for x in range(n) if x != u and x != v])) > 2 * k + 3:
                return True
    return False


# ---------------------------------------------------------------------------
# the triangle frame
# ---------------------------------------------------------------------------

def _frame_chords(
    u: int,
    v: int,
    w: int,
    tau: Sequence[Edge],
    tau1: Sequence[Edge],
    tau2: Sequence[Edge],
    uv_edge: bool,
) -> dict[Edge, tuple[int, int]]:
    """Positions of the image of every frame edge in the drawing
    ``(u, tau..., v, reversed tau2..., w, reversed tau1...)``."""
    l, l1, l2 = len(tau), len(tau1), len(tau2)
    p_u, p_v, p_w = 0, l + 1, l + 2 + l2
    t0 = {c: 1 + i for i, c in enumerate(tau)}
    t2 = {c: p_v + l2 - i for i, c in enumerate(tau2)}
    t1 = {c: p_w + l1 - i for i, c in enumerate(tau1)}
    anchor = {u: p_u, v: p_v, w: p_w}
    chords: dict[Edge, tuple[int, int]] = {}
    if uv_edge:
        chords[norm_edge((u, v))] = (p_u, p_v)
    for c in dict.fromkeys(list(tau) + list(tau1) + list(tau2)):
        ends = [m[c] for m in (t0, t1, t2) if c in m]
        if len(ends) == 3:
            raise InvariantViolation(f"edge {c} lies in all three cuts")
        if len(ends) == 1:
            hits = [anchor[x] for x in c if x in anchor]
            if len(hits) != 1:
                raise InvariantViolation(f"cut edge {c} must have exactly one end in the triangle")
            ends.append(hits[0])
        a, b = sorted(ends)
        chords[c] = (a, b)
    return chords


def triangle_crossings(
    u: int,
    v: int,
    w: int,
    tau: Sequence[Edge],
    tau1: Sequence[Edge],
    tau2: Sequence[Edge],
    uv_edge: bool = False,
) -> dict[Edge, int]:
    """Crossings of every frame edge inside the triangle ``u, v, w``.

    ``tau`` orders the cut edges of the parent region as they leave between
    ``u`` and ``v``; ``tau1`` those of the region between ``u`` and ``w``
    (first one nearest ``u``), ``tau2`` those between ``w`` and ``v`` (first
    one nearest ``w``).  An edge in two of the cuts joins the two terminals;
    an edge in one cut joins its terminal to its endpoint among ``u, v, w``.
    """
    chords = _frame_chords(u, v, w, tau, tau1, tau2, uv_edge)
    items = list(chords.items())
    out = dict.fromkeys(chords, 0)
    for i in range(len(items)):
        a, b = items[i][1]
        for j in range(i + 1, len(items)):
            c, d = items[j][1]
            if a < c < b < d or c < a < d < b:
                out[items[i][0]] += 1
                out[items[j][0]] += 1
    return out


def combine_budgets(
    k: int,
    tau: Sequence[Edge],
    tau1: Sequence[Edge],
    chi1: Sequence[int],
    tau2: Sequence[Edge],
    chi2: Sequence[int],
    cross: dict[Edge, int],
) -> Optional[tuple[int, ...]]:
    """The parent budget vector implied by a split, or None if some edge exceeds k.

    A cut edge of the parent that continues into a child region has the
    child's count plus its triangle crossings; one ending at ``w`` has just
    its triangle crossings.  Edges not in the parent cut are complete and
    must stay within k.
    """
    i1 = {c: i for i, c in enumerate(tau1)}
    i2 = {c: i for i, c in enumerate(tau2)}
    parent = []
    for c in tau:
        val = cross[c]
        if c in i1:
            val += chi1[i1[c]]
        elif c in i2:
            val += chi2[i2[c]]
        if val > k:
            return None
        parent.append(val)
    in_tau = set(tau)
    for c, i in i1.items():
        if c in in_tau:
            continue
        val = chi1[i] + cross[c] + (chi2[i2[c]] if c in i2 else 0)
        if val > k:
            return None
    for c, i in i2.items():
        if c in in_tau or c in i1:
            continue
        if chi2[i] + cross[c] > k:
            return None
    for c, val in cross.items():
        if c not in i1 and c not in i2 and c not in in_tau and val > k:
            return None
    return tuple(parent)


def check_consistency(
    k: int,
    tau: Sequence[Edge],
    chi: Sequence[int],
    tau1: Sequence[Edge],
    chi1: Sequence[int],
    tau2: Sequence[Edge],
    chi2: Sequence[int],
    cross: dict[Edge, int],
) -> bool:
    """All split conditions: both child cuts have at most k edges, budgets
    add up on parent cut edges, and complete edges stay within k."""
    if len(tau1) > k or len(tau2) > k:
        return False
    return combine_budgets(k, tau, tau1, chi1, tau2, chi2, cross) == tuple(chi)


# ---------------------------------------------------------------------------
# the dynamic program on one block
# ---------------------------------------------------------------------------

class _OuterDP:
    def __init__(self, g: Graph, k: int, cap: int, stats: SolveStats):
        self.g = g
        self.k = k
        self.cap = cap
        self.stats = stats
        self.adj = g.adjacency
        self.memo: dict[tuple, dict[tuple[int, ...], Optional[tuple]]] = {}
        self.size = 0

    def _charge(self, n: int) -> None:
        self.size += n
        self.stats.entries += n
        self.stats.peak = max(self.stats.peak, self.size)
        if self.size > self.cap:
            raise ResourceError(f"memo table exceeded the cap of {self.cap} entries")

    def splits(self, u: int, v: int, R: frozenset, w: int):
        """Partitions ``(R1, R2)`` of ``R - {w}`` with both child cuts of size <= k."""
        k, adj = self.k, self.adj
        rest = [x for x in _bfs_order(self.g, [x for x in R if x != w])]
        ext1 = {}
        ext2 = {}
        for r in rest:
            outside = [y for y in adj[r] if y not in R and y != u and y != v]
            ext1[r] = len(outside) + (v in adj[r])
            ext2[r] = len(outside) + (u in adj[r])
        side: dict[int, int] = {}

        def rec(i: int, c1: int, c2: int):
            if i == len(rest):
                r1 = frozenset(x for x, s in side.items() if s == 1)
                yield r1, frozenset(rest) - r1
                return
            x = rest[i]
            for s in (1, 2):
                across = sum(1 for y in adj[x] if side.get(y, s) != s)
                n1 = c1 + across + (ext1[x] if s == 1 else 0)
                n2 = c2 + across + (ext2[x] if s == 2 else 0)
                if n1 <= k and n2 <= k:
                    side[x] = s
                    yield from rec(i + 1, n1, n2)
                    del side[x]

        yield from rec(0, 0, 0)

    def achievable(self, u: int, v: int, R: frozenset, tau: tuple) -> dict:
        key = (u, v, R, tau)
        got = self.memo.get(key)
        if got is not None:
            return got
        if not R:
            res: dict = {(): None}
            self.memo[key] = res
            self._charge(1)
            return res
        k, g = self.k, self.g
        res = {}
        uv_edge = g.has_edge(u, v)
        for w in sorted(R):
            for R1, R2 in self.splits(u, v, R, w):
                C1 = cut_edges(g, u, w, R1)
                C2 = cut_edges(g, w, v, R2)
                for tau1 in permutations(C1):
                    A1 = self.achievable(u, w, R1, tau1)
                    if not A1:
                        continue
                    for tau2 in permutations(C2):
                        A2 = self.achievable(w, v, R2, tau2)
                        if not A2:
                            continue
                        cross = triangle_crossings(u, v, w, tau, tau1, tau2, uv_edge)
                        for chi1 in A1:
                            for chi2 in A2:
                                chi = combine_budgets(k, tau, tau1, chi1, tau2, chi2, cross)
                                if chi is not None and chi not in res:
                                    res[chi] = (w, R1, tau1, chi1, R2, tau2, chi2)
            if len(res) == (k + 1) ** len(tau):
                break
        self.memo[key] = res
        self._charge(1 + len(res))
        return res

    def sequence(self, u: int, v: int, R: frozenset, tau: tuple, chi: tuple, nodes: list) -> list[int]:
        """Vertices of ``R`` in cyclic order from ``v`` back to ``u``."""
        if not R:
            return []
        w, R1, tau1, chi1, R2, tau2, chi2 = self.memo[(u, v, R, tau)][chi]
        nodes.append((u, v, w, len(cut_edges(self.g, u, w, R1)), len(cut_edges(self.g, w, v, R2))))
        return (
            self.sequence(w, v, R2, tau2, chi2, nodes)
            + [w]
            + self.sequence(u, w, R1, tau1, chi1, nodes)
        )

    def top(self, v: int) -> Optional[tuple[int, ...]]:
        u = 0
        R = frozenset(x for x in self.g.vertices if x != u and x != v)
        if () not in self.achievable(u, v, R, ()):
            return None
        nodes: list = []
        cycle = [u, v] + self.sequence(u, v, R, (), (), nodes)
        drawing = CircularDrawing(cycle)
        for a, b, w, l1, l2 in nodes:
            for pair in ((a, w), (w, b)):
                pierced = sum(1 for e in self.g.edges if circular_pierce(drawing, e, pair))
                if pierced > self.k:
                    raise InvariantViolation(f"splitter {w} leaves pair {pair} pierced {pierced} times")
        return tuple(cycle)


def _top_worker(args) -> Optional[tuple[int, ...]]:
    g, k, cap, v = args
    return _OuterDP(g, k, cap, SolveStats()).top(v)


def solve_outer_biconnected(
    g: Graph,
    k: int,
    *,
    table_cap: Optional[int] = None,
    stats: Optional[SolveStats] = None,
    jobs: int = 1,
) -> Optional[CircularDrawing]:
    """Outer k-planar drawing of a biconnected graph, or None.

    Vertex 0 is fixed and its successor on the cycle is tried in increasing
    order; the first success is returned.  With ``jobs > 1`` the successors
    are tried in parallel and the smallest successful one still wins.
    """
    if k < 0:
        raise InputError("k must be nonnegative")
    if g.n <= 2:
        if g.n == 2 and g.m != 1:
            raise InputError("graph is not biconnected")
        return CircularDrawing(range(g.n))
    if not is_biconnected(g):
        raise InputError("graph is not biconnected")
    stats = stats if stats is not None else SolveStats()
    cap = config.table_cap(table_cap)
    if not density_guard(g, k) or too_many_components(g, k):
        return None
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 50 * g.n + 1000))
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for cycle in pool.map(_top_worker, [(g, k, cap, v) for v in range(1, g.n)]):
                    if cycle is not None:
                        return CircularDrawing(cycle).canonical()
            return None
        dp = _OuterDP(g, k, cap, stats)
        for v in range(1, g.n):
            cycle = dp.top(v)
            if cycle is not None:
                return CircularDrawing(cycle).canonical()
        return None
    finally:
        sys.setrecursionlimit(limit)


def _stitch(blocks: list[list[int]], drawings: dict[int, tuple[int, ...]], start: int) -> list[int]:
    """Glue block cycles at cut vertices.

    Each block not yet placed is rotated to begin at the cut vertex it shares
    with the sequence and spliced in right after that vertex.  Its vertices
    then form one interval next to the cut vertex, so no chord of another
    block separates two of them.
    """
    by_vertex: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for x in b:
            by_vertex.setdefault(x, []).append(i)
    first = by_vertex[start][0]
    seq = list(drawings[first])
    done = {first}
    queue = list(seq)
    while queue:
        x = queue.pop(0)
        for bi in by_vertex[x]:
            if bi in done:
                continue
            done.add(bi)
            cyc = drawings[bi]
            i = cyc.index(x)
            rest = list(cyc[i + 1:] + cyc[:i])
            at = seq.index(x)
            seq[at + 1:at + 1] = rest
            queue.extend(rest)
    return seq


def solve_outer(
    g: Graph,
    k: int,
    *,
    table_cap: Optional[int] = None,
    stats: Optional[SolveStats] = None,
    jobs: int = 1,
) -> Optional[CircularDrawing]:
    """Outer k-planar drawing of any graph, or None if some block has none."""
    if k < 0:
        raise InputError("k must be nonnegative")
    stats = stats if stats is not None else SolveStats()
    blocks = biconnected_components(g)
    drawings: dict[int, tuple[int, ...]] = {}
    for i, block in enumerate(blocks):
        if len(block) <= 2:
            drawings[i] = tuple(block)
            continue
        sub, old = g.induced(block)
        d = solve_outer_biconnected(sub, k, table_cap=table_cap, stats=stats, jobs=jobs)
        if d is None:
            return None
        drawings[i] = tuple(old[x] for x in d.cycle)
    cycle: list[int] = []
    for comp in connected_components(g):
        cycle.extend(_stitch(blocks, drawings, comp[0]))
    return CircularDrawing(cycle).canonical()


def local_outer_crossing_number(g: Graph, k_max: int, **kwargs) -> Optional[int]:
    """Smallest ``k <= k_max`` with an outer k-planar drawing; None means above the cap."""
    if k_max < 0:
        raise InputError("k_max must be nonnegative")
    for k in range(k_max + 1):
        if solve_outer(g, k, **kwargs) is not None:
            return k
    return None
