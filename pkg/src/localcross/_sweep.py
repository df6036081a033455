"""Left-to-right sweep shared by the one-sided and two-sided 2-layer solvers.

Both solvers place X vertices one at a time from left to right and keep only
a compressed view of the Y order: the Y vertices that still have an *open*
edge (an edge that may still receive crossings) or a neighbour that has not
been placed yet.  An edge is *closed* once enough X vertices follow its X
endpoint that no later edge can cross it in any k-planar drawing.  From then
on its crossing count is final, and its Y endpoint acts as a barrier: every
Y endpoint of a later edge must lie at or to the right of it.

Positions in the compressed order use doubled coordinates.  The vertex at
index ``t`` sits at ``2t+1`` and the gap just before it at ``2t`` (gap
``len(order)`` is the right end).  The barrier ``b`` is such a coordinate;
a vertex or gap at coordinate ``c`` may receive a new edge iff ``c >= b``.
A new edge at coordinate ``c`` crosses an older open edge at coordinate
``c'`` iff ``c < c'``.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import InputError
from .graph import Graph

OpenEdges = list[tuple[int, int]]  # (x, y), aligned with a chi tuple


class Sweep:
    def __init__(self, g: Graph, k: int, weight_mode: Optional[str] = None):
        if weight_mode not in (None, "sum", "product"):
            raise InputError(f"unknown weight mode {weight_mode!r}")
        self.g = g
        self.k = k
        self.wt: dict[tuple[int, int], int] = {}
        self.lim: dict[tuple[int, int], int] = {}
        weights = g.weights
        for (a, b), w in weights.items():
            w = 1 if weight_mode is None else w
            lim = k // w if weight_mode == "product" else k
            for e in ((a, b), (b, a)):
                self.wt[e] = w
                self.lim[e] = lim
        self._twin: dict[int, tuple] = {}

    def twin_key(self, y: int) -> tuple:
        key = self._twin.get(y)
        if key is None:
            key = tuple(sorted((x, self.wt[(x, y)]) for x in self.g.neighbors(y)))
            self._twin[y] = key
        return key

    def extend(
        self,
        order: Sequence[int],
        open_edges: OpenEdges,
        chi: Sequence[int],
        b: int,
        u: int,
        nbrs: Sequence[int],
    ) -> Iterator[tuple[tuple[int, ...], OpenEdges, tuple[int, ...]]]:
        """All ways of adding X vertex ``u`` (with sorted neighbours ``nbrs``).

        Yields ``(merged_order, open_edges', chi')`` where the new edges of
        ``u`` are appended to the open edges in the order of ``nbrs``.
        Nothing is yielded if some budget is exceeded.
        """
        pos = {y: t for t, y in enumerate(order)}
        L = len(order)
        wt, lim = self.wt, self.lim
        ecoord = [2 * pos[y] + 1 for _, y in open_edges]
        ew = [wt[e] for e in open_edges]
        elim = [lim[e] for e in open_edges]
        base = list(chi)
        fchi: dict[int, int] = {}
        new: list[int] = []
        for y in nbrs:
            if y not in pos:
                new.append(y)
                continue
            c = 2 * pos[y] + 1
            if c < b:
                return
            wf = wt[(u, y)]
            tot = 0
            for i, ce in enumerate(ecoord):
                if ce > c:
                    base[i] += wf
                    tot += ew[i]
            if tot > lim[(u, y)]:
                return
            fchi[y] = tot
        for i, v in enumerate(base):
            if v > elim[i]:
                return
        # suffix weight of open edges at or after gap g
        suffix = [0] * (L + 2)
        for ce, w in zip(ecoord, ew):
            suffix[(ce - 1) // 2] += w
        for g in range(L - 1, -1, -1):
            suffix[g] += suffix[g + 1]
        gmin = (b + 1) // 2
        new_edges = [(u, y) for y in nbrs]
        twin_prev: list[Optional[int]] = []
        seen_key: dict[tuple, int] = {}
        for a, y in enumerate(new):
            key = self.twin_key(y)
            twin_prev.append(seen_key.get(key))
            seen_key[key] = a
        gaps = [0] * len(new)

        def assign(a: int, cur: list[int]) -> Iterator[tuple[list[int], list[int]]]:
            if a == len(new):
                yield list(gaps), cur
                return
            y = new[a]
            wf, lf = wt[(u, y)], lim[(u, y)]
            lo = gmin if twin_prev[a] is None else max(gmin, gaps[twin_prev[a]])
            for g in range(lo, L + 1):
                if suffix[g] > lf:
                    continue
                nxt = cur[:]
                ok = True
                for i, ce in enumerate(ecoord):
                    if ce > 2 * g:
                        nxt[i] += wf
                        if nxt[i] > elim[i]:
                            ok = False
                            break
                if ok:
                    gaps[a] = g
                    yield from assign(a + 1, nxt)

        for assigned, cur in assign(0, base):
            groups: list[list[int]] = [[] for _ in range(L + 1)]
            for y, g in zip(new, assigned):
                groups[g].append(y)
            choices = [self._arrangements(grp) for grp in groups]
            fvals = []
            gap_of = dict(zip(new, assigned))
            for y in nbrs:
                fvals.append(fchi[y] if y in fchi else suffix[gap_of[y]])
            new_chi = tuple(cur) + tuple(fvals)
            for combo in product(*choices):
                merged: list[int] = []
                for g in range(L + 1):
                    merged.extend(combo[g])
                    if g < L:
                        merged.append(order[g])
                yield tuple(merged), list(open_edges) + new_edges, new_chi

    def finish(
        self,
        order: Sequence[int],
        open_edges: OpenEdges,
        chi: Sequence[int],
        b: int,
        closing: Iterable[int] | set[int],
        future: Callable[[int], Optional[tuple[int, int]]],
    ) -> Optional[tuple[tuple[int, ...], OpenEdges, tuple[int, ...], int]]:
        """Close the edges of the X vertices in ``closing`` and drop finished Y vertices.

        ``future(y)`` describes the edges of ``y`` not added yet as
        ``(total weight, smallest budget)``, or None if there are none.

        The state is rejected if a Y vertex that still needs an edge lies left
        of the barrier, or if the crossings that are already unavoidable would
        overload an edge: a later edge at ``y`` crosses every present edge
        whose Y endpoint is right of ``y``, whatever happens in between.
        """
        pos = {y: t for t, y in enumerate(order)}
        keep_edges: OpenEdges = []
        keep_chi: list[int] = []
        for e, c in zip(open_edges, chi):
            if e[0] in closing:
                b = max(b, 2 * pos[e[1]] + 1)
            else:
                keep_edges.append(e)
                keep_chi.append(c)
        open_y = {y for _, y in keep_edges}
        out = list(order)
        fut: dict[int, tuple[int, int]] = {}
        for t in range(len(out) - 1, -1, -1):
            y = out[t]
            f = future(y)
            if f is not None:
                fut[y] = f
            elif y not in open_y:
                del out[t]
                if b >= 2 * t + 2:
                    b -= 2
                elif b == 2 * t + 1:
                    b = 2 * t
        pos = {y: t for t, y in enumerate(out)}
        at: list[list[int]] = [[] for _ in out]
        for i, (_, y) in enumerate(keep_edges):
            at[pos[y]].append(i)
        wt, lim = self.wt, self.lim
        right = sum(wt[e] for e in keep_edges)
        pending = 0
        for t, y in enumerate(out):
            for i in at[t]:
                right -= wt[keep_edges[i]]
                if keep_chi[i] + pending > lim[keep_edges[i]]:
                    return None
            f = fut.get(y)
            if f is not None:
                if 2 * t + 1 < b or right > f[1]:
                    return None
                pending += f[0]
        return tuple(out), keep_edges, tuple(keep_chi), b


    def _arrangements(self, group: list[int]) -> list[tuple[int, ...]]:
        if len(group) <= 1:
            return [tuple(group)]
        out = []
        for perm in permutations(group):
            last: dict[tuple, int] = {}
            ok = True
            for y in perm:
                key = self.twin_key(y)
                if key in last and last[key] > y:
                    ok = False
                    break
                last[key] = y
            if ok:
                out.append(perm)
        return out


def replay(glob: list[int], old_order: Sequence[int], merged: Sequence[int]) -> None:
    """Insert the vertices of ``merged`` that are not in ``old_order`` into ``glob``.

    Each new vertex goes immediately before the next old vertex that follows
    it in ``merged`` (or at the end), which keeps it right of every vertex
    that was dropped from the compressed view.
    """
    olds = set(old_order)
    anchored = []
    nxt = None
    for y in reversed(merged):
        if y in olds:
            nxt = y
        else:
            anchored.append((y, nxt))
    for y, a in reversed(anchored):
        if a is None:
            glob.append(y)
        else:
            glob.insert(glob.index(a), y)
