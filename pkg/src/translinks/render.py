"""SVG drawings of link diagrams.

Crossings are placed by a Tutte barycentric embedding of the shadow with its
largest face on a circle; when that is degenerate (bouquets, dipoles, maps
whose outer face has fewer than three vertices) all crossings go on a circle
instead.  Edges are quadratic curves; every crossing draws its over-strand
last on top of a white halo, which produces the break in the under-strand.
"""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path

import numpy as np

from .errors import IOFailure, LayoutDegenerate
from .linkdiag import LinkDiagram

SIZE = 400.0
RADIUS = 160.0


def tutte_layout(d: LinkDiagram) -> np.ndarray:
    m = d.underlying_map()
    nv = m.num_vertices
    outer = max(m.faces, key=len)
    ring = []
    for dart in outer:
        v = m.vertex_of[dart]
        if v not in ring:
            ring.append(v)
    if len(ring) < 3:
        raise LayoutDegenerate("outer face has fewer than three crossings")
    pos = np.zeros((nv, 2))
    for k, v in enumerate(ring):
        t = 2 * math.pi * k / len(ring)
        pos[v] = (RADIUS * math.cos(t), RADIUS * math.sin(t))
    inner = [v for v in range(nv) if v not in ring]
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        lap = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for a, b in m.edges:
            u, w = m.vertex_of[a], m.vertex_of[b]
            if u == w:
                continue
            for s, t in ((u, w), (w, u)):
                if s in idx:
                    lap[idx[s], idx[s]] += 1
                    if t in idx:
                        lap[idx[s], idx[t]] -= 1
                    else:
                        rhs[idx[s]] += pos[t]
        try:
            sol = np.linalg.solve(lap, rhs)
        except np.linalg.LinAlgError as exc:
            raise LayoutDegenerate("singular barycentric system") from exc
        for v, i in idx.items():
            pos[v] = sol[i]
    for i in range(nv):
        for j in range(i + 1, nv):
            if np.linalg.norm(pos[i] - pos[j]) < 1e-6:
                raise LayoutDegenerate("coincident crossings")
    return pos


def circle_layout(d: LinkDiagram) -> np.ndarray:
    nv = d.num_crossings
    if nv == 1:
        return np.zeros((1, 2))
    return np.array([(RADIUS * math.cos(2 * math.pi * k / nv), RADIUS * math.sin(2 * math.pi * k / nv))
                     for k in range(nv)])


def layout(d: LinkDiagram) -> np.ndarray:
    try:
        return tutte_layout(d)
    except LayoutDegenerate:
        return circle_layout(d)


def _fmt(p) -> str:
    return f"{p[0] + SIZE / 2:.2f},{p[1] + SIZE / 2:.2f}"


def svg_text(d: LinkDiagram) -> str:
    m = d.underlying_map()
    parts = []
    controls: dict[int, np.ndarray] = {}
    if d.crossings:
        pos = layout(d)
        groups = defaultdict(list)
        for a, b in m.edges:
            u, w = m.vertex_of[a], m.vertex_of[b]
            groups[(min(u, w), max(u, w))].append((a, b))
        for (u, w), es in groups.items():
            for k, (a, b) in enumerate(es):
                pa, pb = pos[m.vertex_of[a]], pos[m.vertex_of[b]]
                if u == w:
                    # loop: bulge away from the vertex along the dart's slot
                    slot = a % 4
                    ang = math.pi / 2 * slot + 0.3 * k
                    ctrl = pa + 90 * np.array([math.cos(ang), math.sin(ang)])
                else:
                    mid = (pa + pb) / 2
                    vec = pb - pa
                    normal = np.array([-vec[1], vec[0]]) / (np.linalg.norm(vec) or 1)
                    ctrl = mid + normal * 40 * (k - (len(es) - 1) / 2)
                controls[a] = controls[b] = ctrl
                parts.append(f'<path class="arc" d="M{_fmt(pa)} Q{_fmt(ctrl)} {_fmt(pb)}" '
                             f'fill="none" stroke="black" stroke-width="2"/>')
        for i, x in enumerate(d.crossings):
            p = pos[i]
            ends = []
            for j in (1, 3):
                vec = controls[4 * i + j] - p
                norm = np.linalg.norm(vec) or 1
                ends.append(p + vec / norm * 12)
            seg = f"M{_fmt(ends[0])} L{_fmt(p)} L{_fmt(ends[1])}"
            parts.append(f'<path class="halo" d="{seg}" fill="none" stroke="white" stroke-width="8"/>')
            parts.append(f'<path class="over" d="{seg}" fill="none" stroke="black" stroke-width="2"/>')
    for k in range(d.loops):
        cx = 30 + 40 * k - SIZE / 2
        parts.append(f'<circle class="loop" cx="{cx + SIZE / 2:.2f}" cy="{SIZE - 30:.2f}" r="15" '
                     f'fill="none" stroke="black" stroke-width="2"/>')
    body = "\n  ".join(parts)
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{SIZE:.0f}" height="{SIZE:.0f}" viewBox="0 0 {SIZE:.0f} {SIZE:.0f}">\n'
            f'  {body}\n</svg>\n')


def render_svg(d: LinkDiagram, out) -> Path:
    path = Path(out)
    try:
        path.write_text(svg_text(d))
    except OSError as exc:
        raise IOFailure(str(exc)) from exc
    return path
