"""Figure emitters: Hasse diagrams as DOT graphs, dissections as SVG.

Both emitters are pure functions of their input and produce byte-identical
text across runs.  The DOT output constrains children left-to-right by
ascending interval minimum through edge declaration order under
``ordering=out``; the SVG places vertex 1 at the top of a fixed-radius
circle with indices increasing clockwise.
"""
from __future__ import annotations

import math

from .polygon import Dissection
from .poset import IntervalPoset, format_interval, hasse_edges

SVG_SIZE = 400
SVG_RADIUS = 170.0
LABEL_RADIUS = 186.0


def _node_id(v: tuple[int, int]) -> str:
    return f"v{v[0]}_{v[1]}"


def poset_to_dot(P: IntervalPoset) -> str:
    """DOT digraph of the Hasse diagram, root at the top.

    One node per interval labeled like ``[2,5]`` (singletons ``{3}``); one
    edge per cover pair, declared in ascending-minimum order per parent so
    layouts that honor ``ordering=out`` draw children left to right.
    """
    lines = ["digraph interval_poset {",
             "  rankdir=TB;",
             "  ordering=out;",
             "  node [shape=box];"]
    for v in P.sorted_elements():
        lines.append(f'  {_node_id(v)} [label="{format_interval(v)}"];')
    for parent, child in hasse_edges(P):
        lines.append(f"  {_node_id(parent)} -> {_node_id(child)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _vertex_xy(m: int, i: int, radius: float) -> tuple[float, float]:
    """Vertex i of m on the circle: 1 at the top, clockwise."""
    angle = math.pi / 2 - 2 * math.pi * (i - 1) / m
    cx = cy = SVG_SIZE / 2
    return cx + radius * math.cos(angle), cy - radius * math.sin(angle)


def dissection_to_svg(D: Dissection) -> str:
    """SVG 1.1 drawing: outer polygon, straight diagonal segments, dot and
    label per vertex.  Needs m >= 3 (the 2-gon has no drawing)."""
    if D.m < 3:
        raise ValueError("drawing needs m >= 3")
    points = [_vertex_xy(D.m, i, SVG_RADIUS) for i in range(1, D.m + 1)]
    outline = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'  <polygon points="{outline}" fill="none" stroke="black" '
        f'stroke-width="1.5"/>',
    ]
    for u, v in D.sorted_diagonals():
        x1, y1 = points[u - 1]
        x2, y2 = points[v - 1]
        lines.append(f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
                     f'y2="{y2:.2f}" stroke="black" stroke-width="1"/>')
    for i, (x, y) in enumerate(points, start=1):
        lx, ly = _vertex_xy(D.m, i, LABEL_RADIUS)
        lines.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        lines.append(f'  <text x="{lx:.2f}" y="{ly + 5:.2f}" '
                     f'text-anchor="middle" font-size="14">{i}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
