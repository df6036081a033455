"""Reading and writing instances and certificates.

Text format::

    n m
    u v [w]        (m lines)
    X: u1 u2 ...   (bipartite files only)
    order: u1 ...  (optional fixed order of X)

Blank lines and ``#`` comments are ignored.  The JSON mirror uses the keys
``vertex_count``, ``edges`` (``[u, v]`` or ``[u, v, w]``), ``x_side`` and
``fixed_x_order``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .errors import InputError
from .graph import BipartiteInstance, CircularDrawing, Graph, TwoLayerDrawing


@dataclass(frozen=True)
class Instance:
    """What a file contains: a graph plus optional bipartite data."""

    graph: Graph
    x_side: Optional[frozenset[int]] = None
    fixed_x_order: Optional[tuple[int, ...]] = None

    def bipartite(self) -> BipartiteInstance:
        if self.x_side is None:
            raise InputError("file has no 'X:' line")
        return BipartiteInstance(self.graph, self.x_side, fixed_x_order=self.fixed_x_order)


def _ints(tokens: Sequence[str], line_no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {line_no}: expected integers, got {' '.join(tokens)!r}") from None


def parse_text(text: str) -> Instance:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line))
    if not lines:
        raise InputError("empty instance file")
    no, header = lines[0]
    head = _ints(header.split(), no)
    if len(head) != 2:
        raise InputError(f"line {no}: header must be 'n m'")
    n, m = head
    edges, weights = [], {}
    x_side = order = None
    body = lines[1:]
    if len(body) < m:
        raise InputError(f"expected {m} edge lines, found {len(body)}")
    for no, line in body[:m]:
        vals = _ints(line.split(), no)
        if len(vals) not in (2, 3):
            raise InputError(f"line {no}: edge line must be 'u v [w]'")
        edges.append((vals[0], vals[1]))
        if len(vals) == 3:
            weights[(vals[0], vals[1])] = vals[2]
    for no, line in body[m:]:
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        if key == "x":
            x_side = frozenset(_ints(rest.split(), no))
        elif key == "order":
            order = tuple(_ints(rest.split(), no))
        else:
            raise InputError(f"line {no}: unexpected content {line!r}")
    graph = Graph(n, edges, weights)
    if order is not None and x_side is None:
        x_side = frozenset(order)
    inst = Instance(graph, x_side, order)
    if x_side is not None:
        inst.bipartite()  # validate
    return inst


def format_text(inst: Instance) -> str:
    g = inst.graph
    out = [f"{g.n} {g.m}"]
    w = g.weights
    for u, v in g.edges:
        out.append(f"{u} {v} {w[(u, v)]}" if g.is_weighted else f"{u} {v}")
    if inst.x_side is not None:
        out.append("X: " + " ".join(map(str, sorted(inst.x_side))))
    if inst.fixed_x_order is not None:
        out.append("order: " + " ".join(map(str, inst.fixed_x_order)))
    return "\n".join(out) + "\n"


def instance_to_json(inst: Instance) -> dict[str, Any]:
    g = inst.graph
    w = g.weights
    edges = [[u, v, w[(u, v)]] if g.is_weighted else [u, v] for u, v in g.edges]
    data: dict[str, Any] = {"vertex_count": g.n, "edges": edges}
    if inst.x_side is not None:
        data["x_side"] = sorted(inst.x_side)
    if inst.fixed_x_order is not None:
        data["fixed_x_order"] = list(inst.fixed_x_order)
    return data


def instance_from_json(data: dict[str, Any]) -> Instance:
    try:
        edges, weights = [], {}
        for e in data["edges"]:
            edges.append((e[0], e[1]))
            if len(e) == 3:
                weights[(e[0], e[1])] = e[2]
        graph = Graph(int(data["vertex_count"]), edges, weights)
        x_side = frozenset(data["x_side"]) if "x_side" in data else None
        order = tuple(data["fixed_x_order"]) if data.get("fixed_x_order") is not None else None
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"malformed JSON instance: {exc}") from None
    if order is not None and x_side is None:
        x_side = frozenset(order)
    inst = Instance(graph, x_side, order)
    if x_side is not None:
        inst.bipartite()
    return inst


def dumps_json(data: Any) -> str:
    """Canonical JSON text; parsing and re-dumping gives the same bytes."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def read_instance(path: Union[str, Path]) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if text.lstrip().startswith("{"):
        try:
            return instance_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from None
    return parse_text(text)


def write_instance(path: Union[str, Path], inst: Instance) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dumps_json(instance_to_json(inst)))
    else:
        path.write_text(format_text(inst))


def instance_digest(inst: Instance) -> str:
    """sha256 over the canonical JSON of the instance."""
    return hashlib.sha256(dumps_json(instance_to_json(inst)).encode()).hexdigest()


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def certificate(
    inst: Instance,
    drawing: Union[TwoLayerDrawing, CircularDrawing],
    k: int,
    problem: str,
    weight_mode: Optional[str] = None,
) -> dict[str, Any]:
    cert: dict[str, Any] = {
        "problem": problem,
        "k": k,
        "instance": instance_to_json(inst),
        "digest": instance_digest(inst),
    }
    if weight_mode is not None:
        cert["weight_mode"] = weight_mode
    if isinstance(drawing, TwoLayerDrawing):
        cert["kind"] = "two-layer"
        cert["x_order"] = list(drawing.x_order)
        cert["y_order"] = list(drawing.y_order)
    else:
        cert["kind"] = "circular"
        cert["cycle"] = list(drawing.cycle)
    return cert


def load_certificate(
    data: dict[str, Any],
) -> tuple[Instance, Union[TwoLayerDrawing, CircularDrawing], dict[str, Any]]:
    """Parse a certificate and check that its digest matches its instance."""
    try:
        inst = instance_from_json(data["instance"])
        digest = data["digest"]
        kind = data["kind"]
    except KeyError as exc:
        raise InputError(f"certificate lacks field {exc}") from None
    if instance_digest(inst) != digest:
        raise InputError("stale certificate: instance digest mismatch")
    if kind == "two-layer":
        drawing: Union[TwoLayerDrawing, CircularDrawing] = TwoLayerDrawing(data["x_order"], data["y_order"])
    elif kind == "circular":
        drawing = CircularDrawing(data["cycle"])
    else:
        raise InputError(f"unknown certificate kind {kind!r}")
    return inst, drawing, data
