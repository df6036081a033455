"""Deterministic instance generators.

Every generator takes its parameters plus a seed and returns an
:class:`~localcross.io.Instance`.  Bipartite outputs carry an X side and a
fixed X order so the same file works for every problem kind.
"""

from __future__ import annotations

import random
from typing import Optional

from .errors import InputError
from .graph import Graph, two_coloring
from .io import Instance

__all__ = [
    "random_bipartite",
    "random_tree",
    "caterpillar",
    "cycle",
    "complete",
    "complete_bipartite",
    "GENERATORS",
]


def _positive(name: str, value: int, low: int = 1) -> None:
    if not isinstance(value, int) or value < low:
        raise InputError(f"{name} must be an integer >= {low}")


def _with_coloring(g: Graph, order: Optional[list[int]] = None) -> Instance:
    sides = two_coloring(g)
    if sides is None:
        return Instance(g)
    xs = sides[0]
    if order is None:
        order = sorted(xs)
    return Instance(g, xs, tuple(order))


def _relabel(edges, n: int, rng: random.Random) -> tuple[list[int], list[tuple[int, int]]]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm, [(perm[u], perm[v]) for u, v in edges]


def random_bipartite(nx: int, ny: int, p: float = 0.5, seed: int = 0) -> Instance:
    """X is ``0..nx-1`` in that order, Y is ``nx..nx+ny-1``; each pair is an edge with probability p."""
    _positive("nx", nx)
    _positive("ny", ny)
    if not 0.0 <= p <= 1.0:
        raise InputError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(x, nx + y) for x in range(nx) for y in range(ny) if rng.random() < p]
    xs = tuple(range(nx))
    return Instance(Graph(nx + ny, edges), frozenset(xs), xs)


def random_tree(n: int, seed: int = 0) -> Instance:
    """Each vertex attaches to a uniformly random earlier one, then ids are shuffled."""
    _positive("n", n)
    rng = random.Random(seed)
    raw = [(rng.randrange(v), v) for v in range(1, n)]
    _, edges = _relabel(raw, n, rng)
    return _with_coloring(Graph(n, edges))


def caterpillar(spine: int, legs: int, seed: int = 0) -> Instance:
    """A path of ``spine`` vertices, each with ``legs`` leaves, ids shuffled by the seed.

    The fixed X order is the one of a crossing-free 2-layer drawing: walk
    along the spine and list each spine vertex, then its leaves.
    """
    _positive("spine", spine)
    _positive("legs", legs, 0)
    rng = random.Random(seed)
    raw = [(i, i + 1) for i in range(spine - 1)]
    walk: list[int] = []
    nxt = spine
    for i in range(spine):
        walk.append(i)
        for _ in range(legs):
            raw.append((i, nxt))
            walk.append(nxt)
            nxt += 1
    perm, edges = _relabel(raw, nxt, rng)
    g = Graph(nxt, edges)
    xs = two_coloring(g)[0]
    order = [perm[v] for v in walk if perm[v] in xs]
    return Instance(g, xs, tuple(order))


def cycle(n: int, seed: int = 0) -> Instance:
    """The cycle ``0, 1, ..., n-1``."""
    _positive("n", n, 3)
    return _with_coloring(Graph(n, [(i, (i + 1) % n) for i in range(n)]))


def complete(n: int, seed: int = 0) -> Instance:
    _positive("n", n)
    return _with_coloring(Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)]))


def complete_bipartite(a: int, b: int, seed: int = 0) -> Instance:
    """``K_{a,b}`` with X = ``0..a-1``."""
    _positive("a", a)
    _positive("b", b)
    xs = tuple(range(a))
    g = Graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])
    return Instance(g, frozenset(xs), xs)


GENERATORS = {
    "random-bipartite": random_bipartite,
    "random-tree": random_tree,
    "caterpillar": caterpillar,
    "cycle": cycle,
    "complete": complete,
    "complete-bipartite": complete_bipartite,
}
