"""Combinatorial SVG drawings of plane trees given by (sigma0, sigma1)."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .dessins import Dessin, DessinError

__all__ = ["radial_layout", "render_svg"]

Vertex = tuple[str, int]  # ("b", k) or ("w", k): k-th cycle of sigma0 / sigma1


def _rotations(d: Dessin) -> tuple[dict[Vertex, list[int]], dict[int, tuple[Vertex, Vertex]]]:
    rot: dict[Vertex, list[int]] = {}
    ends: dict[int, list[Vertex]] = {e: [] for e in range(1, d.n + 1)}
    for color, perm in (("b", d.sigma0), ("w", d.sigma1)):
        for k, cyc in enumerate(perm.cycles(include_fixed=True)):
            v = (color, k)
            rot[v] = list(cyc)
            for e in cyc:
                ends[e].append(v)
    return rot, {e: (b, w) for e, (b, w) in ends.items()}


def radial_layout(d: Dessin, step: float = 60.0) -> tuple[dict[Vertex, tuple[float, float]], dict[int, tuple[Vertex, Vertex]]]:
    """Vertex positions of a radial layout rooted at the black end of edge 1.

    Children are visited in the rotation order of their parent, starting just
    after the edge leading back to it, so the drawing respects the cyclic
    orders and is planar. Each subtree gets an angular wedge proportional to
    its number of leaves.
    """
    rot, ends = _rotations(d)
    if len(rot) != d.n + 1:
        raise DessinError("not a tree: vertices != edges + 1")
    root = ends[1][0]
    children: dict[Vertex, list[tuple[int, Vertex]]] = {}
    order = [root]
    parent_edge: dict[Vertex, int | None] = {root: None}
    for v in order:
        cyc = rot[v]
        pe = parent_edge[v]
        start = (cyc.index(pe) + 1) if pe is not None else 0
        kids = []
        for i in range(len(cyc) - (pe is not None)):
            e = cyc[(start + i) % len(cyc)]
            b, w = ends[e]
            u = w if v == b else b
            parent_edge[u] = e
            kids.append((e, u))
            order.append(u)
        children[v] = kids

    leaves: dict[Vertex, int] = {}
    for v in reversed(order):
        leaves[v] = max(1, sum(leaves[u] for _, u in children[v]))

    pos: dict[Vertex, tuple[float, float]] = {root: (0.0, 0.0)}
    wedge = {root: (0.0, 2 * math.pi)}
    depth = {root: 0}
    for v in order:
        lo, hi = wedge[v]
        total = leaves[v]
        a = lo
        for _, u in children[v]:
            span = (hi - lo) * leaves[u] / total
            wedge[u] = (a, a + span)
            depth[u] = depth[v] + 1
            mid = a + span / 2
            pos[u] = (step * depth[u] * math.cos(mid), step * depth[u] * math.sin(mid))
            a += span
    return pos, ends


def render_svg(d: Dessin, title: str | None = None, labels: bool = False, step: float = 60.0) -> str:
    """SVG text: black vertices as filled disks, white as open circles."""
    pos, ends = radial_layout(d, step)
    pad, r = 20.0, 6.0
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad

    def f(v: float) -> str:
        s = f"{v:.2f}"
        return "0.00" if s == "-0.00" else s

    def at(v: Vertex) -> tuple[str, str]:
        x, y = pos[v]
        return f(x - x0), f(y - y0)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{f(w)}" height="{f(h)}" viewBox="0 0 {f(w)} {f(h)}">'
    ]
    if title:
        out.append(f"  <title>{escape(title)}</title>")
    out.append('  <g stroke="black" stroke-width="1.5">')
    for e in sorted(ends):
        (bx, by), (wx, wy) = at(ends[e][0]), at(ends[e][1])
        out.append(f'    <line x1="{bx}" y1="{by}" x2="{wx}" y2="{wy}"/>')
    out.append("  </g>")
    for v in sorted(pos):
        cx, cy = at(v)
        fill = "black" if v[0] == "b" else "white"
        out.append(f'  <circle cx="{cx}" cy="{cy}" r="{f(r)}" fill="{fill}" stroke="black" stroke-width="1.5"/>')
    if labels:
        for e in sorted(ends):
            (bx, by), (wx, wy) = pos[ends[e][0]], pos[ends[e][1]]
            mx, my = (bx + wx) / 2 - x0, (by + wy) / 2 - y0
            out.append(f'  <text x="{f(mx + 3)}" y="{f(my - 3)}" font-size="9">{e}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
