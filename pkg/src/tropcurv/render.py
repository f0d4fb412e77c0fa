"""Plain SVG drawings of subdivisions, tropical curves, real parts and amoebas."""
from __future__ import annotations

import math
from typing import Mapping

import numpy as np

from .patchwork import SignDistribution, orthant_label, orthants, real_part
from .tropical import HypersurfaceComplex, TropicalPolynomial, dual_subdivision

__all__ = ["render_subdivision", "render_curve", "render_real_part", "render_amoeba"]

SIZE = 400
MARGIN = 30


class _Canvas:
    def __init__(self, width, height):
        self.w, self.h = width, height
        self.items: list[str] = []

    def line(self, p, q, stroke="black", width=1.5, dash=None):
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.items.append(
            f'<line x1="{p[0]:.3f}" y1="{p[1]:.3f}" x2="{q[0]:.3f}" y2="{q[1]:.3f}" '
            f'stroke="{stroke}" stroke-width="{width}"{extra}/>'
        )

    def polyline(self, pts, stroke="black", width=1.5):
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        self.items.append(f'<polyline points="{coords}" fill="none" stroke="{stroke}" stroke-width="{width}"/>')

    def polygon(self, pts, fill="none", stroke="black", width=1.0):
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        self.items.append(f'<polygon points="{coords}" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>')

    def circle(self, p, r=3, fill="black"):
        self.items.append(f'<circle cx="{p[0]:.3f}" cy="{p[1]:.3f}" r="{r}" fill="{fill}"/>')

    def text(self, p, s, size=12, fill="black"):
        self.items.append(
            f'<text x="{p[0]:.3f}" y="{p[1]:.3f}" font-size="{size}" fill="{fill}" '
            f'font-family="sans-serif">{s}</text>'
        )

    def svg(self) -> str:
        body = "\n  ".join(self.items)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.w}" height="{self.h}" '
            f'viewBox="0 0 {self.w} {self.h}">\n  <rect width="100%" height="100%" fill="white"/>\n  '
            f"{body}\n</svg>\n"
        )


class _Frame:
    """Affine map of a data box onto a square panel (y axis pointing up)."""

    def __init__(self, lo, hi, x0=0.0, y0=0.0, size=SIZE, margin=MARGIN):
        span = max(hi[0] - lo[0], hi[1] - lo[1], 1e-9)
        self.s = (size - 2 * margin) / span
        self.lo = lo
        self.ox = x0 + margin + ((size - 2 * margin) - self.s * (hi[0] - lo[0])) / 2
        self.oy = y0 + size - margin - ((size - 2 * margin) - self.s * (hi[1] - lo[1])) / 2

    def __call__(self, p):
        return (self.ox + self.s * (float(p[0]) - self.lo[0]), self.oy - self.s * (float(p[1]) - self.lo[1]))


def _plane_only(f: TropicalPolynomial):
    if f.ambient_dim != 2:
        raise ValueError("this drawing is only available for plane curves")


def render_subdivision(f: TropicalPolynomial, signs: Mapping | None = None) -> str:
    """Newton polygon, its dual subdivision, and the signs at lattice points."""
    _plane_only(f)
    sub = dual_subdivision(f)
    pts = np.asarray(f.exponents, dtype=float)
    frame = _Frame(pts.min(axis=0), pts.max(axis=0))
    c = _Canvas(SIZE, SIZE)
    for cell in sub.maximal_cells:
        verts = _hull_order(cell.vertices)
        c.polygon([frame(v) for v in verts], fill="#eef3fb", width=1.5)
    used = {a for cell in sub.maximal_cells for a in cell.vertices}
    for a in f.exponents:
        p = frame(a)
        c.circle(p, 4 if a in used else 2, "black" if a in used else "#999")
        if signs and a in signs:
            c.text((p[0] + 6, p[1] - 6), "+" if signs[a] > 0 else "&#8722;", 16)
    return c.svg()


def _hull_order(vertices):
    v = np.asarray(vertices, dtype=float)
    if len(v) <= 2:
        return [tuple(x) for x in v]
    ctr = v.mean(axis=0)
    ang = np.arctan2(v[:, 1] - ctr[1], v[:, 0] - ctr[0])
    return [tuple(v[i]) for i in np.argsort(ang)]


def _curve_segments(V: HypersurfaceComplex):
    """(start, end, edge id) for every edge; rays are cut at a length fitting the picture."""
    pos = np.asarray([[float(x) for x in v.position] for v in V.vertices]) if V.vertices else np.zeros((1, 2))
    extent = max(float(np.ptp(pos[:, 0])), float(np.ptp(pos[:, 1])), 1.0)
    ray_len = 0.6 * extent
    segs = []
    for e in V.edges:
        if len(e.vertices) == 2:
            a, b = (pos[i] for i in e.vertices)
        elif len(e.vertices) == 1:
            a = pos[e.vertices[0]]
            r = np.asarray(e.rays[0], dtype=float)
            b = a + ray_len * r / np.linalg.norm(r)
        else:
            p = np.asarray([float(x) for x in e.point])
            d = np.asarray(e.lineality[0], dtype=float)
            d = ray_len * d / np.linalg.norm(d)
            a, b = p - d, p + d
        segs.append((tuple(a), tuple(b), e.id))
    return segs


def render_curve(V: HypersurfaceComplex) -> str:
    """The tropical curve V(f), unbounded edges drawn as short rays."""
    _plane_only(V.poly)
    segs = _curve_segments(V)
    allp = np.asarray([p for s in segs for p in s[:2]] or [(0.0, 0.0)])
    frame = _Frame(allp.min(axis=0), allp.max(axis=0))
    c = _Canvas(SIZE, SIZE)
    for a, b, _ in segs:
        c.line(frame(a), frame(b), width=2)
    for v in V.vertices:
        c.circle(frame([float(x) for x in v.position]), 3)
    return c.svg()


_OBLIQUE = np.asarray([[1.0, 0.0], [0.0, 1.0], [-0.5, -0.35]])


def render_real_part(V: HypersurfaceComplex, theta: Mapping) -> str:
    """One panel per orthant: present copies solid and thick, absent ones dashed.

    For surfaces each panel is an oblique wireframe projection of the
    bounded part of the edge skeleton.
    """
    theta = theta if isinstance(theta, SignDistribution) else SignDistribution(theta)
    rp = real_part(V, theta)
    d = V.poly.ambient_dim
    zs = orthants(d)
    cols = 2 if d == 2 else 4
    rows = math.ceil(len(zs) / cols)
    c = _Canvas(cols * SIZE, rows * SIZE)
    if d == 2:
        segs = _curve_segments(V)
        present = rp.edges
    else:
        pos = np.asarray([[float(x) for x in v.position] for v in V.vertices]) @ _OBLIQUE
        segs = [(tuple(pos[e.vertices[0]]), tuple(pos[e.vertices[1]]), e.id)
                for e in V.edges if len(e.vertices) == 2]
        present = rp.edges
    allp = np.asarray([p for s in segs for p in s[:2]] or [(0.0, 0.0)])
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    for k, z in enumerate(zs):
        x0, y0 = (k % cols) * SIZE, (k // cols) * SIZE
        frame = _Frame(lo, hi, x0, y0)
        c.text((x0 + 8, y0 + 18), f"orthant {orthant_label(z)}", 14)
        on = set(present.get(z, []))
        for a, b, eid in segs:
            if eid in on:
                c.line(frame(a), frame(b), width=3)
            else:
                c.line(frame(a), frame(b), stroke="#888", width=1, dash="6,3,1,3")
    return c.svg()


def render_amoeba(tc) -> str:
    """Traced real amoeba in Log_t coordinates, one colour per quadrant."""
    colours = {"++": "#1b6ca8", "+-": "#c0392b", "-+": "#27ae60", "--": "#8e44ad"}
    xmin, xmax, ymin, ymax = tc.window
    frame = _Frame((xmin, ymin), (xmax, ymax))
    c = _Canvas(SIZE, SIZE)
    for q, lines in tc.polylines.items():
        for pts in lines:
            c.polyline([frame(p) for p in pts], stroke=colours.get(q, "black"))
    c.text((8, 18), f"t = {tc.family.t:g}", 14)
    return c.svg()
