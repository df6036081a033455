"""Command-line front end.

Exit codes: 0 YES (or success), 1 NO, 2 bad input, 3 resource limit,
4 oracle mismatch.  ``recognize``, ``min-k`` and ``oracle`` print a JSON
report on stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from . import config
from .errors import InputError, InvariantViolation, OracleMismatch, ResourceError
from .generators import GENERATORS, random_bipartite, random_tree
from .graph import BipartiteInstance, Graph, is_connected, two_coloring
from .io import (
    Instance,
    certificate,
    dumps_json,
    format_text,
    instance_digest,
    instance_to_json,
    load_certificate,
    read_instance,
    write_instance,
)
from .one_sided import SolveStats, solve_one_sided, solve_one_sided_weighted
from .oracle import (
    oracle_bandwidth,
    oracle_local_outer_crossing_number,
    oracle_one_sided,
    oracle_outer,
    oracle_two_sided,
)
from .outer import solve_outer
from .reductions import (
    bandwidth_tree_to_outer,
    bandwidth_tree_to_two_sided,
    partition_to_weighted_one_sided,
    tree_to_apex,
)
from .render import RENDERERS, render_json
from .two_sided import solve_two_sided
from .verify import PROBLEMS, verify_drawing

log = logging.getLogger("localcross")

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3, 4

@dataclass
class RunReport:
    problem: str
    digest: str
    k: Optional[int]
    answer: str
    certificate: Optional[str] = None
    wall_time: float = 0.0
    table: dict = field(default_factory=lambda: {"entries": 0, "peak": 0})
    oracle: Optional[str] = None

    def emit(self) -> None:
        sys.stdout.write(dumps_json(asdict(self)))


# ---------------------------------------------------------------------------
# problem dispatch
# ---------------------------------------------------------------------------

def _weight_mode(inst: Instance, requested: str) -> Optional[str]:
    if requested == "auto":
        return "sum" if inst.graph.is_weighted else None
    return None if requested == "none" else requested


def _target(inst: Instance, problem: str):
    """The object the solver and verifier for ``problem`` expect."""
    if problem == "outer":
        return inst.graph
    if problem == "one-sided":
        b = inst.bipartite()
        if b.fixed_x_order is None:
            raise InputError("one-sided instances need an 'order:' line")
        return b
    if inst.x_side is not None:
        return BipartiteInstance(inst.graph, inst.x_side)
    sides = two_coloring(inst.graph)
    if sides is None:
        raise InputError("graph is not bipartite")
    return BipartiteInstance(inst.graph, sides[0], sides[1])


def _solve(problem: str, target, k: int, args, stats: SolveStats):
    cap = args.table_cap
    if problem == "outer":
        return solve_outer(target, k, table_cap=cap, stats=stats, jobs=args.jobs)
    if problem == "two-sided":
        return solve_two_sided(target, k, table_cap=cap, stats=stats)
    if args.mode is not None:
        return solve_one_sided_weighted(target, k, args.mode, table_cap=cap, stats=stats)
    return solve_one_sided(target, k, table_cap=cap, stats=stats)


def _oracle(problem: str, target, k: int, mode: Optional[str]):
    if problem == "outer":
        return oracle_outer(target, k)
    if problem == "two-sided":
        return oracle_two_sided(target, k)
    return oracle_one_sided(target, k, mode)


def _cross_check(problem: str, target, k: int, mode: Optional[str], answer: bool) -> str:
    try:
        found = _oracle(problem, target, k, mode)
    except ResourceError as exc:
        log.warning("oracle skipped: %s", exc)
        return "skipped"
    if (found is not None) != answer:
        raise OracleMismatch(
            f"solver says {'YES' if answer else 'NO'}, oracle says {'YES' if found is not None else 'NO'} at k={k}"
        )
    return "agree"


def _cert_path(args, problem: str, k: int) -> Path:
    if args.cert:
        return Path(args.cert)
    src = Path(args.file)
    return src.with_name(f"{src.stem}.{problem}.k{k}.cert.json")


def _write_certificate(args, inst: Instance, drawing, k: int, problem: str, mode) -> str:
    cert = certificate(inst, drawing, k, problem, mode)
    path = _cert_path(args, problem, k)
    path.write_text(dumps_json(cert))
    if args.verify:
        inst2, drawing2, data = load_certificate(json.loads(path.read_text()))
        if not verify_drawing(problem, _target(inst2, problem), drawing2, data["k"], data.get("weight_mode")):
            raise InvariantViolation(f"certificate {path} does not re-verify")
    return str(path)


def _decide(args, inst: Instance, problem: str, k: int, stats: SolveStats):
    target = _target(inst, problem)
    drawing = _solve(problem, target, k, args, stats)
    if drawing is not None and not verify_drawing(problem, target, drawing, k, args.mode):
        raise InvariantViolation("solver returned a drawing that does not verify")
    oracle = _cross_check(problem, target, k, args.mode, drawing is not None) if args.oracle else None
    return drawing, oracle


def cmd_recognize(args) -> int:
    inst = read_instance(args.file)
    args.mode = _weight_mode(inst, args.weight_mode) if args.problem == "one-sided" else None
    stats = SolveStats()
    start = time.perf_counter()
    report = RunReport(args.problem, instance_digest(inst), args.k, "NO")
    try:
        drawing, report.oracle = _decide(args, inst, args.problem, args.k, stats)
    except ResourceError:
        report.answer = "RESOURCE"
        report.wall_time = round(time.perf_counter() - start, 6)
        report.table = {"entries": stats.entries, "peak": stats.peak}
        report.emit()
        raise
    report.wall_time = round(time.perf_counter() - start, 6)
    report.table = {"entries": stats.entries, "peak": stats.peak}
    if drawing is not None:
        report.answer = "YES"
        report.certificate = _write_certificate(args, inst, drawing, args.k, args.problem, args.mode)
    report.emit()
    return EXIT_YES if drawing is not None else EXIT_NO


def cmd_min_k(args) -> int:
    if args.k_max < 0:
        raise InputError("--k-max must be nonnegative")
    inst = read_instance(args.file)
    args.mode = _weight_mode(inst, args.weight_mode) if args.problem == "one-sided" else None
    stats = SolveStats()
    start = time.perf_counter()
    report = RunReport(args.problem, instance_digest(inst), None, "ABOVE_CAP")
    oracles = []
    for k in range(args.k_max + 1):
        drawing, oracle = _decide(args, inst, args.problem, k, stats)
        oracles.append(oracle)
        if drawing is not None:
            report.k = k
            report.answer = "YES"
            report.certificate = _write_certificate(args, inst, drawing, k, args.problem, args.mode)
            break
    if args.oracle:
        report.oracle = "agree" if all(o == "agree" for o in oracles) else "partial"
    report.wall_time = round(time.perf_counter() - start, 6)
    report.table = {"entries": stats.entries, "peak": stats.peak}
    report.emit()
    return EXIT_YES if report.k is not None else EXIT_NO


def cmd_oracle(args) -> int:
    inst = read_instance(args.file)
    start = time.perf_counter()
    if args.problem == "bandwidth":
        b, layout = oracle_bandwidth(inst.graph)
        out = {"problem": "bandwidth", "digest": instance_digest(inst), "bandwidth": b, "layout": list(layout.order)}
        out["wall_time"] = round(time.perf_counter() - start, 6)
        sys.stdout.write(dumps_json(out))
        return EXIT_YES
    if args.problem == "outer" and args.k is None:
        best, drawing = oracle_local_outer_crossing_number(inst.graph)
        out = {"problem": "outer", "digest": instance_digest(inst), "k": best, "cycle": list(drawing.cycle)}
        out["wall_time"] = round(time.perf_counter() - start, 6)
        sys.stdout.write(dumps_json(out))
        return EXIT_YES
    if args.k is None:
        raise InputError("--k is required")
    mode = _weight_mode(inst, args.weight_mode) if args.problem == "one-sided" else None
    target = _target(inst, args.problem)
    drawing = _oracle(args.problem, target, args.k, mode)
    report = RunReport(args.problem, instance_digest(inst), args.k, "NO" if drawing is None else "YES")
    report.oracle = "exhaustive"
    report.wall_time = round(time.perf_counter() - start, 6)
    report.emit()
    return EXIT_YES if drawing is not None else EXIT_NO


# ---------------------------------------------------------------------------
# reductions, drawings, generators, benchmarks
# ---------------------------------------------------------------------------

def _read_tree(path: Optional[str]) -> Graph:
    if not path:
        raise InputError("--tree is required")
    return read_instance(path).graph


def _emit_instance(args, inst: Instance, manifest: dict[str, Any]) -> int:
    if args.out:
        base = Path(args.out)
        inst_path = base.with_suffix(".json") if args.format == "json" else base.with_suffix(".graph")
        write_instance(inst_path, inst)
        manifest["instance_file"] = str(inst_path)
        manifest_path = base.with_name(base.name + ".manifest.json")
        manifest_path.write_text(dumps_json(manifest))
        sys.stdout.write(dumps_json(manifest))
    else:
        sys.stdout.write(dumps_json(instance_to_json(inst)) if args.format == "json" else format_text(inst))
        sys.stderr.write(dumps_json(manifest))
    return EXIT_YES


def cmd_reduce(args) -> int:
    kind = args.kind
    if kind == "partition":
        if not args.a:
            raise InputError("--a is required")
        try:
            a = [int(v) for v in args.a.split(",")]
        except ValueError:
            raise InputError("--a must be a comma-separated list of integers") from None
        red = partition_to_weighted_one_sided(a)
        inst = Instance(red.instance.graph, red.instance.x_side, red.instance.fixed_x_order)
        manifest = {
            "kind": kind,
            "params": {"a": list(red.a)},
            "k": red.k,
            "weight_mode": "sum",
            "trivial_no": red.trivial_no,
            "guarantee": "for an even total, A splits into two equal halves iff the gadget is weighted one-sided k-planar",
            "witness": f"y_i = {len(a) + 2}+i lies left of y_mid = {len(a) + 2} iff a_i is in the first half",
        }
        if red.trivial_no:
            log.warning("odd total: the partition instance is a NO instance without solving")
    elif kind == "bandwidth-2layer":
        if args.b is None:
            raise InputError("--b is required")
        tree = _read_tree(args.tree)
        gad = bandwidth_tree_to_two_sided(tree, args.b)
        inst = Instance(gad.instance.graph, gad.instance.x_side)
        manifest = {
            "kind": kind,
            "params": {"b": args.b, "tree_vertices": tree.n},
            "k": gad.k,
            "pendants_per_vertex": gad.ell,
            "guarantee": "the tree has bandwidth <= b iff the gadget is two-sided k-planar",
            "witness": "the X order of a drawing is a layout of the tree (tree vertices keep their ids)",
        }
    elif kind == "apex":
        tree = _read_tree(args.tree)
        g = tree_to_apex(tree)
        inst = Instance(g)
        manifest = {
            "kind": kind,
            "params": {"tree_vertices": tree.n},
            "apex": tree.n,
            "guarantee": "outer k-planar implies bandwidth <= k+1; bandwidth b implies outer max(0, 5b-5)-planar",
            "witness": "cut the cyclic order open at the apex to get a layout of the tree",
        }
    elif kind == "bandwidth-outer":
        if args.b is None:
            raise InputError("--b is required")
        tree = _read_tree(args.tree)
        gad = bandwidth_tree_to_outer(tree, args.b)
        inst = Instance(gad.graph)
        manifest = {
            "kind": kind,
            "params": {"b": args.b, "tree_vertices": tree.n},
            "k": gad.k,
            "t": gad.t,
            "ell": gad.ell,
            "gadget_size": gad.gadget_size,
            "vertex_count": gad.graph.n,
            "apex": gad.apex,
            "guarantee": "the tree has bandwidth <= b iff the gadget is outer k-planar",
            "witness": "clique path of tree vertex v occupies ids v*gadget_size .. (v+1)*gadget_size-1",
        }
        log.warning("k=%d is far beyond what the solvers can handle; export only", gad.k)
    else:
        raise InputError(f"unknown reduction {kind!r}")
    return _emit_instance(args, inst, manifest)


def cmd_draw(args) -> int:
    try:
        data = json.loads(Path(args.certificate).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from None
    inst, drawing, data = load_certificate(data)
    problem = data.get("problem", "outer")
    if problem not in PROBLEMS:
        raise InputError(f"unknown problem {problem!r} in certificate")
    if not verify_drawing(problem, _target(inst, problem), drawing, data["k"], data.get("weight_mode")):
        raise InputError("certificate does not verify")
    if args.format == "json":
        text = render_json(data)
    else:
        text = RENDERERS[args.format](inst.graph, drawing)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


_GEN_PARAMS = {
    "random-bipartite": ("nx", "ny", "p"),
    "random-tree": ("n",),
    "caterpillar": ("spine", "legs"),
    "cycle": ("n",),
    "complete": ("n",),
    "complete-bipartite": ("a", "b"),
}


def cmd_gen(args) -> int:
    params = {}
    for name in _GEN_PARAMS[args.kind]:
        value = getattr(args, "a_size" if name == "a" else name)
        if value is None:
            if name == "p":
                continue
            raise InputError(f"--{name} is required for {args.kind}")
        params[name] = value
    inst = GENERATORS[args.kind](**params, seed=args.seed)
    text = dumps_json(instance_to_json(inst)) if args.format == "json" else format_text(inst)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def _bench_one(job) -> dict:
    problem, n, k, seed, cap = job
    if problem == "outer":
        rng = random.Random(seed)
        while True:
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 3.0 / n]
            g = Graph(n, edges)
            if is_connected(g):
                break
        target = g
    elif problem == "two-sided":
        inst = random_tree(n, seed)
        target = BipartiteInstance(inst.graph, inst.x_side)
    else:
        target = random_bipartite(n // 2, n - n // 2, 4.0 / n, seed).bipartite()
    stats = SolveStats()
    start = time.perf_counter()
    try:
        if problem == "outer":
            d = solve_outer(target, k, table_cap=cap, stats=stats)
        elif problem == "two-sided":
            d = solve_two_sided(target, k, table_cap=cap, stats=stats)
        else:
            d = solve_one_sided(target, k, table_cap=cap, stats=stats)
        answer = "YES" if d is not None else "NO"
    except ResourceError:
        answer = "RESOURCE"
    return {
        "seed": seed,
        "n": n,
        "k": k,
        "answer": answer,
        "seconds": round(time.perf_counter() - start, 6),
        "entries": stats.entries,
        "peak": stats.peak,
    }


def cmd_bench(args) -> int:
    jobs = [(args.problem, args.n, args.k, args.seed + i, args.table_cap) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    sys.stdout.write(dumps_json({"problem": args.problem, "runs": rows}))
    return EXIT_YES


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, problems: Sequence[str] = PROBLEMS) -> None:
    p.add_argument("file", help="instance file (text or JSON)")
    p.add_argument("--problem", required=True, choices=problems)
    p.add_argument("--weight-mode", default="auto", choices=("auto", "none", "sum", "product"),
                   help="one-sided only; auto uses 'sum' when the file has weights")


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--oracle", action="store_true", help="cross-check against the exhaustive oracle")
    p.add_argument("--verify", action="store_true", help="reload the written certificate and verify it")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--table-cap", type=int, default=None,
                   help=f"memo cap (default {config.DEFAULT_TABLE_CAP}, or ${config.TABLE_CAP_ENV})")
    p.add_argument("--cert", default=None, help="certificate path (default: next to the input)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="localcross", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide k-planarity")
    _common(p)
    p.add_argument("--k", type=int, required=True)
    _solver_flags(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("min-k", help="smallest feasible k up to --k-max")
    _common(p)
    p.add_argument("--k-max", type=int, required=True)
    _solver_flags(p)
    p.set_defaults(func=cmd_min_k)

    p = sub.add_parser("oracle", help="run only the exhaustive reference solver")
    _common(p, PROBLEMS + ("bandwidth",))
    p.add_argument("--k", type=int, default=None, help="omit with --problem outer for the exact minimum")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", help="build a reduction instance and manifest")
    p.add_argument("kind", choices=("partition", "bandwidth-2layer", "apex", "bandwidth-outer"))
    p.add_argument("--a", default=None, help="partition multiset, e.g. 1,2,3")
    p.add_argument("--tree", default=None, help="tree instance file")
    p.add_argument("--b", type=int, default=None, help="bandwidth bound")
    p.add_argument("--out", default=None, help="output prefix; prints to stdout if omitted")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("draw", help="render a certificate")
    p.add_argument("certificate")
    p.add_argument("--format", default="svg", choices=("svg", "dot", "json"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("--n", type=int)
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--spine", type=int)
    p.add_argument("--legs", type=int)
    p.add_argument("--a", dest="a_size", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time a solver on generated instances")
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--table-cap", type=int, default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="localcross: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "k", None) is not None and args.k < 0:
        log.error("--k must be nonnegative")
        return EXIT_INPUT
    if getattr(args, "jobs", 1) < 1:
        log.error("--jobs must be positive")
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except ResourceError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE
    except OracleMismatch as exc:
        log.error("oracle mismatch: %s", exc)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
