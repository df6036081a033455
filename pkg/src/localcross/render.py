"""Export drawings as SVG, Graphviz DOT or JSON.

All output is a pure function of the certificate: coordinates are rounded
to two decimals and elements are emitted in sorted order, so the bytes are
stable across runs.
"""

from __future__ import annotations

import math
from typing import Any, Union

from . import config
from .graph import (
    CircularDrawing,
    Edge,
    Graph,
    TwoLayerDrawing,
    circular_crossings_per_edge,
    two_layer_cross,
    two_layer_crossings_per_edge,
)
from .io import dumps_json

__all__ = ["render_svg", "render_dot", "render_json", "crossing_points", "RENDERERS"]

Drawing = Union[TwoLayerDrawing, CircularDrawing]
Point = tuple[float, float]


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _coordinates(drawing: Drawing) -> dict[int, Point]:
    if isinstance(drawing, CircularDrawing):
        r, m = config.SVG_RADIUS, config.SVG_MARGIN
        n = len(drawing.cycle)
        out = {}
        for i, v in enumerate(drawing.cycle):
            a = 2 * math.pi * i / max(n, 1) - math.pi / 2
            out[v] = (m + r + r * math.cos(a), m + r + r * math.sin(a))
        return out
    m, dx, dy = config.SVG_MARGIN, config.SVG_COLUMN_GAP, config.SVG_ROW_GAP
    out = {v: (m + i * dx, m) for i, v in enumerate(drawing.x_order)}
    out.update({v: (m + i * dx, m + dy) for i, v in enumerate(drawing.y_order)})
    return out


def _intersection(p: Point, q: Point, r: Point, s: Point) -> Point:
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def _crossing_pairs(g: Graph, drawing: Drawing) -> list[tuple[Edge, Edge]]:
    edges = g.edges
    out = []
    if isinstance(drawing, CircularDrawing):
        pos = {v: i for i, v in enumerate(drawing.cycle)}
        for i, e in enumerate(edges):
            a, b = sorted((pos[e[0]], pos[e[1]]))
            for f in edges[i + 1:]:
                c, d = sorted((pos[f[0]], pos[f[1]]))
                if a < c < b < d or c < a < d < b:
                    out.append((e, f))
    else:
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                if two_layer_cross(drawing, e, f):
                    out.append((e, f))
    return out


def crossing_points(g: Graph, drawing: Drawing) -> list[tuple[Edge, Edge, Point]]:
    """Every crossing as ``(e, f, point)`` in the SVG coordinate system."""
    xy = _coordinates(drawing)
    return [
        (e, f, _intersection(xy[e[0]], xy[e[1]], xy[f[0]], xy[f[1]]))
        for e, f in _crossing_pairs(g, drawing)
    ]


def _counts(g: Graph, drawing: Drawing) -> dict[Edge, int]:
    if isinstance(drawing, CircularDrawing):
        return circular_crossings_per_edge(g, drawing)
    return two_layer_crossings_per_edge(g, drawing)


def render_svg(g: Graph, drawing: Drawing) -> str:
    """Vertices as labelled dots, edges as straight segments labelled with
    their crossing counts, and a small red mark on every crossing."""
    xy = _coordinates(drawing)
    counts = _counts(g, drawing)
    if isinstance(drawing, CircularDrawing):
        side = 2 * (config.SVG_RADIUS + config.SVG_MARGIN)
        width = height = side
    else:
        cols = max(len(drawing.x_order), len(drawing.y_order), 1)
        width = 2 * config.SVG_MARGIN + (cols - 1) * config.SVG_COLUMN_GAP
        height = 2 * config.SVG_MARGIN + config.SVG_ROW_GAP
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g class="edges" stroke="black" stroke-width="1.5">',
    ]
    for e in g.edges:
        (x1, y1), (x2, y2) = xy[e[0]], xy[e[1]]
        out.append(
            f'<line class="edge" data-edge="{e[0]}-{e[1]}" data-crossings="{counts[e]}" '
            f'x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    out.append("</g>")
    out.append('<g class="edge-labels" font-size="10" fill="#555">')
    for e in g.edges:
        (x1, y1), (x2, y2) = xy[e[0]], xy[e[1]]
        out.append(f'<text x="{_fmt((x1 + x2) / 2)}" y="{_fmt((y1 + y2) / 2 - 3)}">{counts[e]}</text>')
    out.append("</g>")
    out.append('<g class="crossings" fill="red">')
    for e, f, (x, y) in crossing_points(g, drawing):
        out.append(
            f'<circle class="crossing" data-pair="{e[0]}-{e[1]},{f[0]}-{f[1]}" '
            f'cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>'
        )
    out.append("</g>")
    out.append('<g class="vertices">')
    for v in sorted(xy):
        x, y = xy[v]
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="9" fill="white" stroke="black"/>')
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y + 4)}" font-size="11" text-anchor="middle">{v}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(g: Graph, drawing: Drawing) -> str:
    """DOT with pinned positions (use ``neato -n``); edge labels are crossing counts."""
    xy = _coordinates(drawing)
    counts = _counts(g, drawing)
    out = ["graph drawing {", "  node [shape=circle];"]
    for v in sorted(xy):
        x, y = xy[v]
        out.append(f'  {v} [pos="{_fmt(x)},{_fmt(-y)}!"];')
    for e in g.edges:
        out.append(f'  {e[0]} -- {e[1]} [label="{counts[e]}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def render_json(cert: dict[str, Any]) -> str:
    """The certificate itself in canonical form."""
    return dumps_json(cert)


RENDERERS = {"svg": render_svg, "dot": render_dot}
