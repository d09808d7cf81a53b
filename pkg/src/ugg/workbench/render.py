"""SVG rendering of hosts and embeddings.

Schematic mode places universal-host vertices at x = index, y = height rank,
drawing tree edges straight and the remaining host edges as arcs.  Exact mode
uses the realized coordinates (log-compressed y, display only).  Convex hosts
go on a circle.  An embedding highlights its image vertices.
"""

from __future__ import annotations

import math

from .. import btree
from ..convex import ConvexHost
from ..errors import SizeTooLarge
from ..geometry import realize_coordinates
from ..ugraph import UniversalGraph

EXACT_LAYOUT_CAP = 31

_V_STYLE = 'fill="#f8f8f8" stroke="#333" stroke-width="1"'
_E_STYLE = 'stroke="#888" stroke-width="1" fill="none"'
_T_STYLE = 'font-size="9" text-anchor="middle" dominant-baseline="middle"'
_M_STYLE = 'fill="none" stroke="#c22" stroke-width="2"'


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
            f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">')
    return "\n".join([head, *body, "</svg>"])


def _vertex(x: float, y: float, label: int) -> list[str]:
    return [f'<circle class="vertex" cx="{x:.1f}" cy="{y:.1f}" r="8" {_V_STYLE}/>',
            f'<text class="label" x="{x:.1f}" y="{y:.1f}" {_T_STYLE}>{label}</text>']


def _universal_svg(G: UniversalGraph, embedding, layout: str) -> str:
    n = G.n
    if layout == "exact":
        if n > EXACT_LAYOUT_CAP:
            raise SizeTooLarge(f"exact layout capped at {EXACT_LAYOUT_CAP}, got {n}")
        real = realize_coordinates(G.shape, n)
        ys = [math.log2(p[1] + 2) for p in real.points]
        ymax = max(ys)
        pos = {i: (30.0 + 34 * i, 40.0 + 24 * (ymax - ys[i])) for i in range(n)}
        height = 80 + 24 * ymax
    else:
        order = sorted(range(n), key=lambda i: btree.height_key(G.shape, i))
        rank = {v: i for i, v in enumerate(order)}
        pos = {i: (30.0 + 34 * i, 40.0 + 18 * rank[i]) for i in range(n)}
        height = 80 + 18 * (n - 1)
    width = 60 + 34 * (n - 1)

    body = ['<g class="edges">']
    for u, v in G.edges():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        straight = layout == "exact" or btree.nav(G.shape, max(u, v)).parent == min(u, v)
        if straight:
            body.append(f'<line class="edge" x1="{x1:.1f}" y1="{y1:.1f}" '
                        f'x2="{x2:.1f}" y2="{y2:.1f}" {_E_STYLE}/>')
        else:
            mx, my = (x1 + x2) / 2, min(y1, y2) - 6 - 0.35 * abs(x2 - x1)
            body.append(f'<path class="edge" d="M {x1:.1f} {y1:.1f} '
                        f'Q {mx:.1f} {my:.1f} {x2:.1f} {y2:.1f}" {_E_STYLE}/>')
    body.append("</g>")
    body.append('<g class="vertices">')
    for i in range(n):
        body.extend(_vertex(*pos[i], i))
    body.append("</g>")
    if embedding is not None:
        body.append('<g class="overlay">')
        for g in sorted(set(embedding.mapping.values())):
            x, y = pos[g]
            body.append(f'<circle class="mapped" cx="{x:.1f}" cy="{y:.1f}" r="11" {_M_STYLE}/>')
        body.append("</g>")
    return _svg(width, height, body)


def _convex_svg(host: ConvexHost, embedding) -> str:
    n = host.n
    radius = max(80.0, 14.0 * n / math.pi)
    cx = cy = radius + 30
    pos = {}
    for i in range(n):
        ang = -math.pi / 2 + 2 * math.pi * i / max(n, 1)
        pos[i] = (cx + radius * math.cos(ang), cy + radius * math.sin(ang))
    body = ['<g class="edges">']
    for u, v in sorted(host.edges):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        body.append(f'<line class="edge" x1="{x1:.1f}" y1="{y1:.1f}" '
                    f'x2="{x2:.1f}" y2="{y2:.1f}" {_E_STYLE}/>')
    body.append("</g>")
    body.append('<g class="vertices">')
    for i in range(n):
        body.extend(_vertex(*pos[i], i))
    body.append("</g>")
    if embedding is not None:
        body.append('<g class="overlay">')
        for g in sorted(set(embedding.mapping.values())):
            x, y = pos[g]
            body.append(f'<circle class="mapped" cx="{x:.1f}" cy="{y:.1f}" r="11" {_M_STYLE}/>')
        body.append("</g>")
    return _svg(2 * (radius + 30), 2 * (radius + 30), body)


def render_svg(host, embedding=None, layout: str = "schematic") -> str:
    if isinstance(host, UniversalGraph):
        return _universal_svg(host, embedding, layout)
    return _convex_svg(host, embedding)
