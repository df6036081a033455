"""Acceptance criteria, one test per criterion.

Each test records a one-line verdict (printed again in the terminal summary).
"""

from __future__ import annotations

import random
import time
from itertools import combinations
from pathlib import Path

import localcross.two_sided as two_sided_mod
from localcross import config
from localcross.graph import (
    BipartiteInstance,
    CircularDrawing,
    Graph,
    circular_crossings_per_edge,
    layout_bandwidth,
    two_coloring,
    two_layer_crossings_per_edge,
)
from localcross.io import read_instance
from localcross.one_sided import solve_one_sided, solve_one_sided_weighted
from localcross.oracle import (
    oracle_bandwidth,
    oracle_local_outer_crossing_number,
    oracle_one_sided,
    oracle_outer,
    oracle_two_sided,
)
from localcross.outer import solve_outer
from localcross.reductions import (
    bandwidth_tree_to_two_sided,
    layout_from_outer_drawing,
    partition_to_weighted_one_sided,
    tree_to_apex,
    two_sided_drawing_from_layout,
)
from localcross.two_sided import component_bound, solve_two_sided
from localcross.verify import verify_drawing

from _acceptance_log import CERTS, record
from _catalog import (
    atlas_connected,
    atlas_connected_bipartite,
    disjoint_paths,
    far_edges_hold,
    is_caterpillar,
    is_outerplanar_by_apex,
    is_outerplanar_by_minors,
    one_sided_catalog,
    random_bipartite,
    random_connected,
    random_connected_bipartite,
    random_tree,
    subset_sum_partition,
    trees,
)

DATA = Path(__file__).parent / "data"


def certify(problem, target, drawing, k, mode=None) -> bool:
    """Count a YES certificate and check it with the independent counters."""
    ok = verify_drawing(problem, target, drawing, k, mode)
    CERTS["verified" if ok else "failed"] += 1
    return ok


def bipartite_of(g: Graph) -> BipartiteInstance:
    xs, ys = two_coloring(g)
    return BipartiteInstance(g, xs, ys)


# ---------------------------------------------------------------------------


def test_criterion_01_one_sided_oracle_equivalence():
    start = time.perf_counter()
    mismatches, bad_certs, runs = [], 0, 0
    for inst in one_sided_catalog(4, 4):
        for k in (0, 1, 2):
            got = solve_one_sided(inst, k)
            want = oracle_one_sided(inst, k)
            runs += 1
            if (got is None) != (want is None):
                mismatches.append((inst.graph.edges, k))
            if got is not None and not (certify("one-sided", inst, got, k) and far_edges_hold(inst, got, k)):
                bad_certs += 1
    rng = random.Random(101)
    for _ in range(1000):
        inst = random_bipartite(rng, 6, 7)
        k = rng.randint(0, 3)
        got = solve_one_sided(inst, k)
        want = oracle_one_sided(inst, k)
        runs += 1
        if (got is None) != (want is None):
            mismatches.append((inst.graph.edges, inst.fixed_x_order, k))
        if got is not None and not certify("one-sided", inst, got, k):
            bad_certs += 1
    elapsed = time.perf_counter() - start
    ok = not mismatches and not bad_certs and elapsed < 600
    record(1, ok, f"{runs} runs, {len(mismatches)} mismatches, {bad_certs} bad certificates, {elapsed:.1f}s")
    assert ok, mismatches[:5]


def test_criterion_02_two_sided_oracle_equivalence():
    mismatches, bad_certs, runs = [], 0, 0
    for g in atlas_connected_bipartite(7):
        inst = bipartite_of(g)
        for k in (0, 1, 2):
            got = solve_two_sided(inst, k)
            want = oracle_two_sided(inst, k)
            runs += 1
            if (got is None) != (want is None):
                mismatches.append((g.edges, k))
            if got is not None and not certify("two-sided", inst, got, k):
                bad_certs += 1
    rng = random.Random(202)
    for _ in range(500):
        g = random_connected_bipartite(rng, rng.randint(2, 9))
        inst = bipartite_of(g)
        k = rng.randint(0, 2)
        got = solve_two_sided(inst, k)
        want = oracle_two_sided(inst, k)
        runs += 1
        if (got is None) != (want is None):
            mismatches.append((g.edges, k))
        if got is not None and not certify("two-sided", inst, got, k):
            bad_certs += 1
    ok = not mismatches and not bad_certs
    record(2, ok, f"{runs} runs, {len(mismatches)} mismatches, {bad_certs} bad certificates")
    assert ok, mismatches[:5]


def test_criterion_03_outer_oracle_equivalence():
    mismatches, bad_certs, runs = [], 0, 0
    for g in atlas_connected(7):
        for k in (0, 1, 2):
            got = solve_outer(g, k)
            want = oracle_outer(g, k)
            runs += 1
            if (got is None) != (want is None):
                mismatches.append((g.n, g.edges, k))
            if got is not None and not certify("outer", g, got, k):
                bad_certs += 1
    rng = random.Random(303)
    for _ in range(1000):
        g = random_connected(rng.randint(1, 9), rng)
        k = rng.randint(0, 2)
        got = solve_outer(g, k)
        want = oracle_outer(g, k)
        runs += 1
        if (got is None) != (want is None):
            mismatches.append((g.n, g.edges, k))
        if got is not None and not certify("outer", g, got, k):
            bad_certs += 1
    ok = not mismatches and not bad_certs
    record(3, ok, f"{runs} runs, {len(mismatches)} mismatches, {bad_certs} bad certificates")
    assert ok, mismatches[:5]


def test_criterion_04_class_characterizations():
    tree_bad, graph_bad = [], []
    all_trees = trees(9)
    for t in all_trees:
        d = solve_two_sided(bipartite_of(t), 0)
        if d is not None:
            certify("two-sided", bipartite_of(t), d, 0)
        if (d is not None) != is_caterpillar(t):
            tree_bad.append(t.edges)
    graphs = atlas_connected(7)
    for g in graphs:
        d = solve_outer(g, 0)
        if d is not None:
            certify("outer", g, d, 0)
        want = is_outerplanar_by_minors(g)
        if (d is not None) != want or want != (oracle_outer(g, 0) is not None) or want != is_outerplanar_by_apex(g):
            graph_bad.append(g.edges)
    ok = not tree_bad and not graph_bad
    record(
        4,
        ok,
        f"{len(all_trees)} trees ({len(tree_bad)} wrong), {len(graphs)} graphs ({len(graph_bad)} wrong)",
    )
    assert ok, (tree_bad[:3], graph_bad[:3])


def _multisets(n_max: int, s_max: int):
    out = []

    def rec(cur, lo, s):
        if cur:
            out.append(tuple(cur))
        if len(cur) == n_max:
            return
        for v in range(lo, s_max - s + 1):
            cur.append(v)
            rec(cur, v, s + v)
            cur.pop()

    rec([], 1, 0)
    return out


def test_criterion_05_partition_reduction():
    cases = [a for a in _multisets(6, 24) if sum(a) % 2 == 0]
    bad = []
    for a in cases:
        red = partition_to_weighted_one_sided(a)
        want = subset_sum_partition(a)
        got = oracle_one_sided(red.instance, red.k, "sum")
        if got is not None:
            certify("one-sided", red.instance, got, red.k, "sum")
        solved = solve_one_sided_weighted(red.instance, red.k, "sum")
        if (got is not None) != want or (solved is not None) != want:
            bad.append(a)
    ok = not bad
    record(5, ok, f"{len(cases)} even-sum multisets, {len(bad)} mismatches")
    assert ok, bad[:5]


def test_criterion_06_apex_sandwich():
    rng = random.Random(606)
    bad = []
    for _ in range(200):
        t = random_tree(rng.randint(1, 8), rng)
        g = tree_to_apex(t)
        kstar, drawing = oracle_local_outer_crossing_number(g)
        certify("outer", g, drawing, kstar)
        b, _ = oracle_bandwidth(t)
        layout = layout_from_outer_drawing(t, drawing)
        if not (b <= kstar + 1 and kstar <= max(0, 5 * b - 5) and layout_bandwidth(t, layout) <= kstar + 1):
            bad.append((t.edges, kstar, b))
    ok = not bad
    record(6, ok, f"200 trees, {len(bad)} violations of bw <= k*+1 and k* <= max(0, 5bw-5)")
    assert ok, bad[:5]


def test_criterion_07_bandwidth_two_sided():
    bad, count = [], 0
    for t in trees(5):
        count += 1
        b, layout = oracle_bandwidth(t)
        gad = bandwidth_tree_to_two_sided(t, 1)
        assert gad.instance.graph.n <= 25
        got = oracle_two_sided(gad.instance, gad.k, cap=float("inf"))
        if got is not None:
            certify("two-sided", gad.instance, got, gad.k)
        if (b <= 1) != (got is not None):
            bad.append(t.edges)
        if b <= 1:
            witness = two_sided_drawing_from_layout(gad, layout)
            if not certify("two-sided", gad.instance, witness, gad.k):
                bad.append(("witness", t.edges))
    ok = not bad
    record(7, ok, f"{count} trees at b=1, {len(bad)} mismatches")
    assert ok, bad


def test_criterion_08_certificate_integrity():
    rng = random.Random(808)
    panics, bad = [], 0
    for i in range(10_000):
        kind = i % 4
        k = rng.randint(0, 3)
        try:
            if kind == 0:
                inst = random_bipartite(rng, 5, 6)
                d = solve_one_sided(inst, k)
                if d is not None and not certify("one-sided", inst, d, k):
                    bad += 1
            elif kind == 1:
                inst = random_bipartite(rng, 4, 5, weights=3)
                mode = rng.choice(["sum", "product"])
                d = solve_one_sided_weighted(inst, k, mode)
                if d is not None and not certify("one-sided", inst, d, k, mode):
                    bad += 1
            elif kind == 2:
                g = random_connected_bipartite(rng, rng.randint(2, 8))
                inst = bipartite_of(g)
                d = solve_two_sided(inst, min(k, 2))
                if d is not None and not certify("two-sided", inst, d, min(k, 2)):
                    bad += 1
            else:
                g = random_connected(rng.randint(1, 9), rng)
                d = solve_outer(g, k)
                if d is not None and not certify("outer", g, d, k):
                    bad += 1
        except Exception as exc:  # any exception is a failure here
            panics.append((i, repr(exc)))
    ok = not panics and not bad and CERTS["failed"] == 0
    record(
        8,
        ok,
        f"10000 fuzz runs, {len(panics)} exceptions; {CERTS['verified']} certificates verified, "
        f"{CERTS['failed']} failed (all suites)",
    )
    assert ok, panics[:5]


def test_criterion_09_performance_budget():
    files = sorted((DATA / "outer_n12").glob("*.graph"))
    assert len(files) >= 20
    worst, slow = 0.0, []
    for path in files:
        g = read_instance(path).graph
        start = time.perf_counter()
        d = solve_outer(g, 1, table_cap=config.DEFAULT_TABLE_CAP)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        if d is not None:
            certify("outer", g, d, 1)
        if elapsed > 120:
            slow.append(path.name)
    inst = read_instance(DATA / "one_sided_n200_k3.bip").bipartite()
    assert inst.graph.n == 200
    start = time.perf_counter()
    d = solve_one_sided(inst, 3)
    one_sided_time = time.perf_counter() - start
    assert d is not None and certify("one-sided", inst, d, 3)
    ok = not slow and one_sided_time < 60
    record(
        9,
        ok,
        f"outer k=1 on {len(files)} biconnected n=12 graphs, worst {worst:.2f}s; "
        f"one-sided k=3 n=200 in {one_sided_time:.2f}s",
    )
    assert ok, slow


def test_criterion_10_invariant_suite(monkeypatch):
    rng = random.Random(1010)
    failures: list[str] = []

    # crossing symmetry, even sums, rotation and reflection, edge deletion
    for _ in range(300):
        g = random_connected(rng.randint(2, 9), rng)
        cyc = list(range(g.n))
        rng.shuffle(cyc)
        d = CircularDrawing(cyc)
        counts = circular_crossings_per_edge(g, d)
        if sum(counts.values()) % 2:
            failures.append("circular even sum")
        r = rng.randrange(g.n)
        for other in (CircularDrawing(cyc[r:] + cyc[:r]), CircularDrawing(cyc[::-1])):
            if circular_crossings_per_edge(g, other) != counts:
                failures.append("rotation/reflection")
        e = rng.choice(g.edges)
        fewer = circular_crossings_per_edge(g.without_edge(e), d)
        if any(fewer[f] > counts[f] for f in fewer):
            failures.append("edge deletion (circular)")
        inst = random_bipartite(rng, 5, 5)
        ys = sorted(inst.y_side)
        rng.shuffle(ys)
        from localcross.graph import TwoLayerDrawing, two_layer_cross

        td = TwoLayerDrawing(inst.fixed_x_order, ys)
        tc = two_layer_crossings_per_edge(inst.graph, td)
        if sum(tc.values()) % 2:
            failures.append("two-layer even sum")
        for e1, e2 in combinations(inst.graph.edges[:8], 2):
            if two_layer_cross(td, e1, e2) != two_layer_cross(td, e2, e1):
                failures.append("two-layer symmetry")

    # k-monotonicity and edge-deletion monotonicity of the solvers
    for _ in range(150):
        g = random_connected(rng.randint(2, 8), rng)
        answers = [solve_outer(g, k) is not None for k in range(4)]
        if answers != sorted(answers):
            failures.append("outer k-monotonicity")
        if answers[1] and g.m:
            if solve_outer(g.without_edge(rng.choice(g.edges)), 1) is None:
                failures.append("outer edge deletion")
        inst = random_bipartite(rng, 5, 6)
        answers = [solve_one_sided(inst, k) is not None for k in range(4)]
        if answers != sorted(answers):
            failures.append("one-sided k-monotonicity")
        for k in range(3):
            d = solve_one_sided(inst, k)
            if d is not None and not far_edges_hold(inst, d, k):
                failures.append("far edges")

    # component bound on every expanded two-sided key
    seen = {"keys": 0, "worst": 0.0}
    original = two_sided_mod.components_outside_window
    current_k = {"k": 0}

    def spy(g, S, vertices=None):
        comps = original(g, S, vertices)
        if len(S) == 2 * current_k["k"] + 1:
            seen["keys"] += 1
            seen["worst"] = max(seen["worst"], len(comps) / component_bound(current_k["k"]))
        return comps

    monkeypatch.setattr(two_sided_mod, "components_outside_window", spy)
    for _ in range(200):
        g = random_connected_bipartite(rng, rng.randint(4, 16))
        current_k["k"] = rng.randint(0, 2)
        solve_two_sided(bipartite_of(g), current_k["k"])
    if seen["worst"] > 1:
        failures.append("component bound")

    # disjoint paths on outer YES instances
    pairs = 0
    for _ in range(150):
        g = random_connected(rng.randint(3, 9), rng)
        k = rng.randint(0, 2)
        if solve_outer(g, k) is None:
            continue
        for u, v in combinations(range(g.n), 2):
            pairs += 1
            if disjoint_paths(g, u, v) > 2 * k + 3:
                failures.append("disjoint paths")
    ok = not failures
    record(
        10,
        ok,
        f"{len(failures)} failures; {seen['keys']} two-sided keys expanded "
        f"(max |C_S|/bound {seen['worst']:.2f}); {pairs} vertex pairs on outer YES instances",
    )
    assert ok, sorted(set(failures))
