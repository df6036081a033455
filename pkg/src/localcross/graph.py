"""Graphs, drawings, and the crossing semantics everything else is checked against.

Vertices are the integers ``0..n-1``.  Edges are stored as sorted pairs.  A
2-layer drawing is nothing but a pair of linear orders and a circular drawing
is nothing but a cyclic order; whether two edges cross depends only on these
orders, so no coordinates are ever computed here.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from functools import cached_property
from typing import Optional

from .errors import InputError

Edge = tuple[int, int]


def norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on ``0..vertex_count-1`` with optional positive weights."""

    __slots__ = ("_n", "_edges", "_edge_set", "_weights", "_adj", "__dict__")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Iterable[int]] = (),
        weights: Optional[Mapping[Iterable[int], int]] = None,
    ):
        if vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        n = int(vertex_count)
        edge_set = set()
        for e in edges:
            u, v = norm_edge(e)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u < 0 or v >= n:
                raise InputError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            if (u, v) in edge_set:
                raise InputError(f"parallel edge {(u, v)}")
            edge_set.add((u, v))
        w: dict[Edge, int] = {}
        if weights:
            for e, val in weights.items():
                e = norm_edge(e)
                if e not in edge_set:
                    raise InputError(f"weight given for non-edge {e}")
                if int(val) != val or val <= 0:
                    raise InputError(f"edge weight must be a positive integer, got {val!r} on {e}")
                if val != 1:
                    w[e] = int(val)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edge_set:
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = tuple(sorted(edge_set))
        self._edge_set = frozenset(edge_set)
        self._weights = w
        self._adj = tuple(frozenset(a) for a in adj)

    # -- basic accessors -------------------------------------------------
    @property
    def vertex_count(self) -> int:
        return self._n

    n = vertex_count

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def is_weighted(self) -> bool:
        return bool(self._weights)

    @property
    def weights(self) -> dict[Edge, int]:
        """Explicit weights of all edges (default 1)."""
        return {e: self._weights.get(e, 1) for e in self._edges}

    def weight(self, e: Iterable[int]) -> int:
        e = norm_edge(e)
        if e not in self._edge_set:
            raise InputError(f"{e} is not an edge")
        return self._weights.get(e, 1)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge((u, v)) in self._edge_set

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def incident_edges(self, v: int) -> list[Edge]:
        return [norm_edge((v, u)) for u in sorted(self._adj[v])]

    # -- derived graphs --------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len-1``; also returns new->old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        weights = {
            (index[u], index[v]): w for (u, v), w in self._weights.items() if u in index and v in index
        }
        return Graph(len(old), edges, weights), old

    def without_edge(self, e: Iterable[int]) -> "Graph":
        e = norm_edge(e)
        if e not in self._edge_set:
            raise InputError(f"{e} is not an edge")
        weights = {f: w for f, w in self._weights.items() if f != e}
        return Graph(self._n, [f for f in self._edges if f != e], weights)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise InputError("relabelling must be a permutation")
        weights = {(perm[u], perm[v]): w for (u, v), w in self._weights.items()}
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges], weights)

    # -- dunder ------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges and self._weights == other._weights

    def __hash__(self) -> int:
        return hash((self._n, self._edges, tuple(sorted(self._weights.items()))))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


class BipartiteInstance:
    """A graph with a bipartition ``(X, Y)`` and optionally a fixed order of ``X``."""

    def __init__(
        self,
        graph: Graph,
        x_side: Iterable[int],
        y_side: Optional[Iterable[int]] = None,
        fixed_x_order: Optional[Sequence[int]] = None,
    ):
        xs = frozenset(int(x) for x in x_side)
        if y_side is None:
            ys = frozenset(graph.vertices) - xs
        else:
            ys = frozenset(int(y) for y in y_side)
        if xs & ys or (xs | ys) != frozenset(graph.vertices):
            raise InputError("x_side and y_side must partition the vertex set")
        for u, v in graph.edges:
            if (u in xs) == (v in xs):
                raise InputError(f"edge {(u, v)} does not join the two sides")
        if fixed_x_order is not None:
            fixed_x_order = tuple(int(x) for x in fixed_x_order)
            if sorted(fixed_x_order) != sorted(xs):
                raise InputError("fixed_x_order must be a permutation of x_side")
        self.graph = graph
        self.x_side = xs
        self.y_side = ys
        self.fixed_x_order = fixed_x_order

    def with_order(self, order: Optional[Sequence[int]]) -> "BipartiteInstance":
        return BipartiteInstance(self.graph, self.x_side, self.y_side, order)

    def oriented(self, e: Iterable[int]) -> tuple[int, int]:
        """Return an edge as ``(x, y)`` with ``x`` in X."""
        u, v = e
        return (u, v) if u in self.x_side else (v, u)

    def __repr__(self) -> str:
        return f"BipartiteInstance({self.graph!r}, |X|={len(self.x_side)}, |Y|={len(self.y_side)})"


class TwoLayerDrawing:
    """A pair of linear orders, one for each layer."""

    __slots__ = ("x_order", "y_order", "_pos")

    def __init__(self, x_order: Sequence[int], y_order: Sequence[int]):
        self.x_order = tuple(int(x) for x in x_order)
        self.y_order = tuple(int(y) for y in y_order)
        pos = {}
        for i, x in enumerate(self.x_order):
            pos[x] = (0, i)
        for i, y in enumerate(self.y_order):
            if y in pos:
                raise InputError(f"vertex {y} appears twice in the drawing")
            pos[y] = (1, i)
        if len(pos) != len(self.x_order) + len(self.y_order):
            raise InputError("repeated vertex in a layer order")
        self._pos = pos

    def position(self, v: int) -> tuple[int, int]:
        """``(layer, index)`` of ``v``; layer 0 is X."""
        try:
            return self._pos[v]
        except KeyError:
            raise InputError(f"vertex {v} is not in the drawing") from None

    def check_instance(self, inst: BipartiteInstance) -> None:
        if sorted(self.x_order) != sorted(inst.x_side) or sorted(self.y_order) != sorted(inst.y_side):
            raise InputError("drawing layers are not permutations of the instance sides")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoLayerDrawing):
            return NotImplemented
        return self.x_order == other.x_order and self.y_order == other.y_order

    def __hash__(self) -> int:
        return hash((self.x_order, self.y_order))

    def __repr__(self) -> str:
        return f"TwoLayerDrawing(x_order={list(self.x_order)}, y_order={list(self.y_order)})"


class CircularDrawing:
    """A cyclic vertex order.  Equality is up to rotation and reflection."""

    __slots__ = ("cycle", "_pos")

    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(int(v) for v in cycle)
        self._pos = {v: i for i, v in enumerate(self.cycle)}
        if len(self._pos) != len(self.cycle):
            raise InputError("repeated vertex in cyclic order")

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise InputError(f"vertex {v} is not in the drawing") from None

    def canonical(self) -> "CircularDrawing":
        """Rotate the smallest vertex to the front and pick the smaller direction."""
        c = self.cycle
        if len(c) <= 2:
            return CircularDrawing(sorted(c))
        i = c.index(min(c))
        fwd = c[i:] + c[:i]
        back = (fwd[0],) + tuple(reversed(fwd[1:]))
        return CircularDrawing(min(fwd, back))

    def rotated_to(self, v: int) -> tuple[int, ...]:
        i = self.position(v)
        return self.cycle[i:] + self.cycle[:i]

    def reversed(self) -> "CircularDrawing":
        return CircularDrawing(tuple(reversed(self.cycle)))

    def check_graph(self, g: Graph) -> None:
        if sorted(self.cycle) != list(g.vertices):
            raise InputError("cyclic order is not a permutation of the vertex set")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircularDrawing):
            return NotImplemented
        return self.canonical().cycle == other.canonical().cycle

    def __hash__(self) -> int:
        return hash(self.canonical().cycle)

    def __repr__(self) -> str:
        return f"CircularDrawing({list(self.cycle)})"


class LinearLayout:
    """A bijection ``V -> [n]`` given as the sequence of vertices."""

    __slots__ = ("order", "_pos")

    def __init__(self, order: Sequence[int]):
        self.order = tuple(int(v) for v in order)
        self._pos = {v: i for i, v in enumerate(self.order)}
        if len(self._pos) != len(self.order):
            raise InputError("repeated vertex in layout")

    def position(self, v: int) -> int:
        return self._pos[v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearLayout) and self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"LinearLayout({list(self.order)})"


# ---------------------------------------------------------------------------
# crossing semantics
# ---------------------------------------------------------------------------

def _split(drawing: TwoLayerDrawing, e: Iterable[int]) -> tuple[int, int]:
    u, v = e
    (lu, iu), (lv, iv) = drawing.position(u), drawing.position(v)
    if lu == lv:
        raise InputError(f"edge {(u, v)} does not join the two layers")
    return (iu, iv) if lu == 0 else (iv, iu)


def two_layer_cross(drawing: TwoLayerDrawing, e: Iterable[int], f: Iterable[int]) -> bool:
    """Order-inversion test: ``x < x'`` and ``y' < y`` with four distinct endpoints."""
    xe, ye = _split(drawing, e)
    xf, yf = _split(drawing, f)
    if xe == xf or ye == yf:
        return False
    return (xe < xf) != (ye < yf)


def two_layer_crossings_per_edge(g: Graph, drawing: TwoLayerDrawing) -> dict[Edge, int]:
    edges = g.edges
    split = [_split(drawing, e) for e in edges]
    count = dict.fromkeys(edges, 0)
    for i in range(len(edges)):
        xe, ye = split[i]
        for j in range(i + 1, len(edges)):
            xf, yf = split[j]
            if xe != xf and ye != yf and (xe < xf) != (ye < yf):
                count[edges[i]] += 1
                count[edges[j]] += 1
    return count


def two_layer_weighted_load(g: Graph, drawing: TwoLayerDrawing, mode: str = "sum") -> dict[Edge, int]:
    """Per-edge weighted crossing load.

    ``sum``: total weight of the edges crossing ``e``.
    ``product``: ``w(e)`` times that total, i.e. the sum of ``w(e) * w(f)``.
    """
    if mode not in ("sum", "product"):
        raise InputError(f"unknown weight mode {mode!r}")
    edges = g.edges
    w = g.weights
    split = [_split(drawing, e) for e in edges]
    load = dict.fromkeys(edges, 0)
    for i in range(len(edges)):
        xe, ye = split[i]
        for j in range(i + 1, len(edges)):
            xf, yf = split[j]
            if xe != xf and ye != yf and (xe < xf) != (ye < yf):
                load[edges[i]] += w[edges[j]]
                load[edges[j]] += w[edges[i]]
    if mode == "product":
        load = {e: w[e] * c for e, c in load.items()}
    return load


def circular_pierce(drawing: CircularDrawing, e: Iterable[int], pair: Iterable[int]) -> bool:
    """True iff the endpoints of ``e`` strictly interleave with ``pair`` on the cycle."""
    a, b = sorted(drawing.position(v) for v in e)
    c, d = sorted(drawing.position(v) for v in pair)
    if c == d:
        raise InputError("pair must consist of two distinct vertices")
    return a < c < b < d or c < a < d < b


def circular_crossings_per_edge(g: Graph, drawing: CircularDrawing) -> dict[Edge, int]:
    edges = g.edges
    spans = [tuple(sorted((drawing.position(u), drawing.position(v)))) for u, v in edges]
    count = dict.fromkeys(edges, 0)
    for i in range(len(edges)):
        a, b = spans[i]
        for j in range(i + 1, len(edges)):
            c, d = spans[j]
            if a < c < b < d or c < a < d < b:
                count[edges[i]] += 1
                count[edges[j]] += 1
    return count


def max_crossings(counts: Mapping[Edge, int]) -> int:
    return max(counts.values(), default=0)


def is_two_layer_k_planar(g: Graph, drawing: TwoLayerDrawing, k: int) -> bool:
    return max_crossings(two_layer_crossings_per_edge(g, drawing)) <= k


def is_outer_k_planar(g: Graph, drawing: CircularDrawing, k: int) -> bool:
    return max_crossings(circular_crossings_per_edge(g, drawing)) <= k


def pierce_count(g: Graph, drawing: CircularDrawing, pair: Iterable[int]) -> int:
    pair = tuple(pair)
    return sum(1 for e in g.edges if circular_pierce(drawing, e, pair))


# ---------------------------------------------------------------------------
# layouts and bandwidth
# ---------------------------------------------------------------------------

def layout_bandwidth(g: Graph, layout: LinearLayout) -> int:
    if sorted(layout.order) != list(g.vertices):
        raise InputError("layout is not a permutation of the vertex set")
    return max((abs(layout.position(u) - layout.position(v)) for u, v in g.edges), default=0)


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def connected_components(g: Graph, vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Components of ``g`` restricted to ``vertices`` (default: all), each sorted."""
    allowed = set(g.vertices) if vertices is None else set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if u in allowed and u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def two_coloring(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A bipartition ``(X, Y)`` with the smallest vertex of each component in X, or None."""
    side: dict[int, int] = {}
    for comp in connected_components(g):
        side[comp[0]] = 0
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    xs = frozenset(v for v, s in side.items() if s == 0)
    return xs, frozenset(g.vertices) - xs


def biconnected_components(g: Graph) -> list[list[int]]:
    """Blocks of ``g`` as sorted vertex lists; isolated vertices are singleton blocks.

    Iterative Hopcroft-Tarjan over an explicit edge stack.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            disc[root] = timer
            timer += 1
            blocks.append([root])
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(sorted(g.neighbors(u)))))
                    advanced = True
                    break
                if disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(sorted(block))
    blocks.sort(key=lambda b: (b[0], b))
    return blocks


def is_biconnected(g: Graph) -> bool:
    """Connected with at least two vertices and no cut vertex (K2 counts as biconnected)."""
    if g.n < 2 or not is_connected(g):
        return False
    return len(biconnected_components(g)) == 1


def density_guard(g: Graph, k: int) -> bool:
    """Necessary edge-count condition for outer k-planarity.

    ``m <= 4.1 * sqrt(k) * n`` for ``k >= 1``, compared exactly as
    ``100 m^2 <= 41^2 k n^2``; the outerplanar bound ``m <= 2n - 3`` for ``k = 0``.
    """
    if k < 0:
        raise InputError("k must be nonnegative")
    if g.n < 2:
        return g.m == 0
    if k == 0:
        return g.m <= 2 * g.n - 3
    return 100 * g.m * g.m <= 41 * 41 * k * g.n * g.n
