"""Graph catalogs and independent checks shared by the test modules."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import networkx as nx

from localcross.graph import BipartiteInstance, Graph, TwoLayerDrawing


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(mapping), [(mapping[a], mapping[b]) for a, b in h.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@lru_cache(maxsize=None)
def atlas_connected(max_n: int) -> tuple[Graph, ...]:
    """All connected graphs with 1..max_n vertices up to isomorphism (max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(from_nx(h))
    return tuple(out)


def atlas_connected_bipartite(max_n: int) -> tuple[Graph, ...]:
    return tuple(g for g in atlas_connected(max_n) if nx.is_bipartite(to_nx(g)))


def trees(max_n: int) -> list[Graph]:
    out = [Graph(1, [])]
    for n in range(2, max_n + 1):
        out.extend(from_nx(t) for t in nx.nonisomorphic_trees(n))
    return out


def one_sided_catalog(max_x: int, max_y: int) -> list[BipartiteInstance]:
    """Every connected bipartite graph with |X| <= max_x, |Y| <= max_y and X in
    its natural order, up to relabelling Y (which never matters since the Y
    order is free)."""
    out = []
    for a in range(1, max_x + 1):
        subsets = [s for r in range(1, a + 1) for s in combinations(range(a), r)]
        for b in range(1, max_y + 1):
            for nbhds in combinations_with_replacement(subsets, b):
                edges = [(x, a + j) for j, s in enumerate(nbhds) for x in s]
                g = Graph(a + b, edges)
                if nx.is_connected(to_nx(g)):
                    out.append(BipartiteInstance(g, range(a), fixed_x_order=range(a)))
    return out


def random_connected(n: int, rng: random.Random, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph(n, edges)
        if nx.is_connected(to_nx(g)):
            return g
        p = min(1.0, p + 0.05)


def random_bipartite(rng: random.Random, max_x: int, max_y: int, weights: int = 1) -> BipartiteInstance:
    a, b = rng.randint(1, max_x), rng.randint(1, max_y)
    p = rng.random()
    edges = [(x, a + y) for x in range(a) for y in range(b) if rng.random() < p]
    w = {e: rng.randint(1, weights) for e in edges} if weights > 1 else None
    order = list(range(a))
    rng.shuffle(order)
    return BipartiteInstance(Graph(a + b, edges, w), range(a), fixed_x_order=order)


def random_connected_bipartite(rng: random.Random, n: int) -> Graph:
    while True:
        a = rng.randint(1, n - 1) if n > 1 else 1
        p = rng.uniform(0.3, 0.9)
        edges = [(x, y) for x in range(a) for y in range(a, n) if rng.random() < p]
        g = Graph(n, edges)
        if nx.is_connected(to_nx(g)):
            return g


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


# ---------------------------------------------------------------------------
# independent characterizations
# ---------------------------------------------------------------------------

def is_caterpillar(t: Graph) -> bool:
    """Removing all leaves leaves a path (or nothing)."""
    spine = [v for v in t.vertices if t.degree(v) > 1]
    if len(spine) <= 1:
        return True
    h = to_nx(t).subgraph(spine)
    return nx.is_connected(h) and max(d for _, d in h.degree()) <= 2


def _connected_partitions(g: nx.Graph, nodes: list, min_parts: int):
    """Partitions of ``nodes`` into connected blocks, at least ``min_parts`` of them."""
    blocks: list[list] = []

    def rec(i: int):
        if i == len(nodes):
            if len(blocks) >= min_parts and all(nx.is_connected(g.subgraph(b)) for b in blocks):
                yield [list(b) for b in blocks]
            return
        if len(blocks) + (len(nodes) - i) < min_parts:
            return
        v = nodes[i]
        for b in blocks:
            b.append(v)
            yield from rec(i + 1)
            b.pop()
        blocks.append([v])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def has_minor(g: Graph, h: nx.Graph) -> bool:
    """Exhaustive minor test: some contraction of ``g`` into connected blocks
    contains ``h`` as a subgraph (deletions are covered by the subgraph step)."""
    gx = to_nx(g)
    k = h.number_of_nodes()
    for parts in _connected_partitions(gx, list(gx.nodes()), k):
        where = {v: i for i, b in enumerate(parts) for v in b}
        q = nx.Graph()
        q.add_nodes_from(range(len(parts)))
        q.add_edges_from((where[a], where[b]) for a, b in gx.edges() if where[a] != where[b])
        if q.number_of_edges() < h.number_of_edges():
            continue
        if nx.algorithms.isomorphism.GraphMatcher(q, h).subgraph_is_monomorphic():
            return True
    return False


def is_outerplanar_by_minors(g: Graph) -> bool:
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    return not has_minor(g, nx.complete_graph(4)) and not has_minor(g, nx.complete_bipartite_graph(2, 3))


def is_outerplanar_by_apex(g: Graph) -> bool:
    """A graph is outerplanar iff adding a vertex adjacent to everything keeps it planar."""
    h = to_nx(g)
    h.add_edges_from(("apex", v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def disjoint_paths(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths."""
    h = to_nx(g)
    extra = 0
    if h.has_edge(u, v):
        h.remove_edge(u, v)
        extra = 1
    return nx.connectivity.local_node_connectivity(h, u, v) + extra


def far_edges_hold(inst: BipartiteInstance, drawing: TwoLayerDrawing, k: int) -> bool:
    """Edges whose X endpoints lie more than 2k non-isolated positions apart never cross."""
    g = inst.graph
    xs = [x for x in drawing.x_order if g.degree(x) > 0]
    xpos = {x: i for i, x in enumerate(xs)}
    ypos = {y: i for i, y in enumerate(drawing.y_order)}
    edges = [inst.oriented(e) for e in g.edges]
    for x, y in edges:
        for x2, y2 in edges:
            if xpos[x] + 2 * k < xpos[x2] and ypos[y] > ypos[y2]:
                return False
    return True


def subset_sum_partition(a) -> bool:
    """Brute force over all subsets."""
    total = sum(a)
    return any(
        2 * sum(c) == total for r in range(len(a) + 1) for c in combinations(a, r)
    )
