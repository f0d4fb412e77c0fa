"""Numeric experiments with real amoebas of plane curves.

A signed tropical polynomial (coefficients read as valuations) gives the
family F_t = sum sign_a * t^(-u_a) * x^a. Its real zero set is traced in each
quadrant, mapped through Log_t, and the total curvature of the resulting
curves is measured as the total variation of their tangent direction.

Everything is done in Log_t coordinates (X, Y) with x = +-t^X, y = +-t^Y, so
a term has magnitude exp(|log t| * (u_a - a.(X, Y))) and can be evaluated in
log-space without overflow.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from skimage.measure import find_contours

from .errors import InsufficientResolution, InvalidT, NotNonSingular, NotPlaneCurve
from .patchwork import orthant_label, orthants
from .tropical import TropicalPolynomial, classify, dual_subdivision, hypersurface, read_document

__all__ = [
    "T_FLOOR",
    "RealFamily",
    "evaluate_family",
    "TracedCurve",
    "trace_real_curve",
    "amoeba_total_curvature",
    "ConvergenceTable",
    "convergence_experiment",
]

T_FLOOR = 1e-4
PAD = 10.0
NEWTON_TOL = 1e-12


@dataclass
class RealFamily:
    """Leading-term model of a real polynomial over Puiseux series, at a fixed t."""

    exponents: np.ndarray  # (k, 2) ints
    signs: np.ndarray  # (k,) +-1
    valuations: np.ndarray  # (k,) floats, the tropical coefficients u_a
    t: float
    poly: TropicalPolynomial | None = None

    @property
    def log_scale(self) -> float:
        return -math.log(self.t)

    @property
    def coefficients(self) -> np.ndarray:
        """sign * t^(-valuation); may overflow for huge valuations, use log_terms."""
        return self.signs * np.exp(self.log_scale * self.valuations)

    def log_terms(self, X, Y) -> np.ndarray:
        """log|term_a| at Log_t coordinates, shape (k, *X.shape)."""
        X = np.asarray(X, dtype=float)
        Y = np.asarray(Y, dtype=float)
        a = self.exponents
        lin = (
            self.valuations.reshape((-1,) + (1,) * X.ndim)
            - a[:, 0].reshape((-1,) + (1,) * X.ndim) * X
            - a[:, 1].reshape((-1,) + (1,) * X.ndim) * Y
        )
        return self.log_scale * lin

    def quadrant_signs(self, quadrant) -> np.ndarray:
        """Signs of the terms on the quadrant with coordinate signs (-1)^z."""
        z = np.asarray(quadrant, dtype=int)
        parity = (self.exponents @ z) & 1
        return np.where(parity == 1, -self.signs, self.signs)

    def scaled(self, factor: float) -> "RealFamily":
        """All coefficients multiplied by ``factor`` > 0 (same zero set)."""
        shift = math.log(factor) / self.log_scale
        return RealFamily(self.exponents, self.signs, self.valuations + shift, self.t, self.poly)


def _coerce_input(source, signs=None):
    if isinstance(source, Mapping):
        poly, doc_signs = read_document(source)
        return poly, (signs if signs is not None else doc_signs) or {}
    if isinstance(source, TropicalPolynomial):
        return source, dict(signs or {})
    raise TypeError(f"cannot build a family from {type(source).__name__}")


def evaluate_family(source, t: float, signs: Mapping | None = None) -> RealFamily:
    """Coefficients sign * t^(-u) for a tropical polynomial or input document.

    Missing signs default to +. ``t`` must lie in [1e-4, 1).
    """
    if not (0 < t < 1):
        raise InvalidT(f"t must lie in (0, 1), got {t}")
    if t < T_FLOOR:
        raise InvalidT(f"t below {T_FLOOR} underflows the coefficients")
    poly, sg = _coerce_input(source, signs)
    alphas = sorted(poly.terms)
    return RealFamily(
        exponents=np.asarray(alphas, dtype=int).reshape(-1, poly.ambient_dim),
        signs=np.asarray([1 if sg.get(a, 1) > 0 else -1 for a in alphas], dtype=int),
        valuations=np.asarray([float(poly.terms[a]) for a in alphas]),
        t=float(t),
        poly=poly,
    )


# ---------------------------------------------------------------------------
# tracing

@dataclass
class TracedCurve:
    family: RealFamily
    resolution: int
    window: tuple  # (xmin, xmax, ymin, ymax) in Log_t coordinates
    h: float
    polylines: dict = field(default_factory=dict)  # label -> list of (m, 2) arrays
    quadrants: list = field(default_factory=list)
    max_residual: float = 0.0

    def nonempty_quadrants(self) -> list[str]:
        return [q for q in self.polylines if self.polylines[q]]

    def to_dict(self) -> dict:
        return {
            "t": self.family.t,
            "resolution": self.resolution,
            "window": list(self.window),
            "h": self.h,
            "max_residual": self.max_residual,
            "quadrants": {q: [p.tolist() for p in ps] for q, ps in self.polylines.items()},
        }


def _landmarks(poly: TropicalPolynomial) -> np.ndarray:
    sub = dual_subdivision(poly)
    pts = [c.witness for c in sub.cells if c.dim >= 1]
    pts += [v.position for v in hypersurface(poly, cells=False).vertices]
    if not pts:
        return np.zeros((1, 2))
    return np.asarray([[float(x) for x in p] for p in pts])


def _window(fam: RealFamily) -> tuple:
    # the amoeba sits near -V(f) in these coordinates
    pts = -_landmarks(fam.poly)
    pad = PAD / fam.log_scale
    lo = pts.min(axis=0) - pad
    hi = pts.max(axis=0) + pad
    return float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1])


def _normalized(fam: RealFamily, s: np.ndarray, X, Y, grad: bool = False):
    """R = sum(s_a e^l_a) / sum(e^l_a), in [-1, 1], with the same zeros as F_t."""
    logs = fam.log_terms(X, Y)
    m = logs.max(axis=0)
    w = np.exp(logs - m)
    sv = s.reshape((-1,) + (1,) * (logs.ndim - 1))
    G = (sv * w).sum(axis=0)
    S = w.sum(axis=0)
    R = G / S
    if not grad:
        return R
    out = []
    for k in range(2):
        dl = (-fam.log_scale * fam.exponents[:, k]).reshape(sv.shape)
        dG = (sv * w * dl).sum(axis=0)
        dS = (w * dl).sum(axis=0)
        out.append((dG * S - G * dS) / S**2)
    return R, np.stack(out, axis=-1)


def _refine(fam: RealFamily, s: np.ndarray, pts: np.ndarray) -> tuple[np.ndarray, float]:
    p = pts.copy()
    for _ in range(50):
        R, g = _normalized(fam, s, p[:, 0], p[:, 1], grad=True)
        if np.max(np.abs(R)) < NEWTON_TOL:
            break
        gg = np.maximum((g * g).sum(axis=1), 1e-300)
        step = (R / gg)[:, None] * g
        p = p - step
    R = _normalized(fam, s, p[:, 0], p[:, 1])
    return p, float(np.max(np.abs(R))) if len(R) else 0.0


def trace_real_curve(fam: RealFamily, resolution: int = 400, quadrants: Sequence | None = None) -> TracedCurve:
    """Marching-squares trace of R V(F_t) in each open quadrant, in Log_t coordinates.

    Contour points are Newton-refined until the normalized residual
    |F_t| / sum|terms| drops below 1e-12. Quadrants without zeros get an
    empty list.
    """
    if fam.exponents.shape[1] != 2:
        raise NotPlaneCurve(f"amoebas are traced for plane curves only (got {fam.exponents.shape[1]} variables)")
    win = _window(fam)
    xs = np.linspace(win[0], win[1], resolution)
    ys = np.linspace(win[2], win[3], resolution)
    X, Y = np.meshgrid(xs, ys)
    hx = xs[1] - xs[0]
    hy = ys[1] - ys[0]
    zs = orthants(2) if quadrants is None else [tuple(q) for q in quadrants]
    tc = TracedCurve(fam, resolution, win, float(max(hx, hy)), quadrants=zs)
    worst = 0.0
    for z in zs:
        s = fam.quadrant_signs(z)
        lines = []
        if len(set(s.tolist())) == 2:
            R = _normalized(fam, s, X, Y)
            for c in find_contours(R, 0.0):
                pts = np.column_stack([win[0] + c[:, 1] * hx, win[2] + c[:, 0] * hy])
                pts, res = _refine(fam, s, pts)
                worst = max(worst, res)
                keep = np.ones(len(pts), dtype=bool)
                keep[1:] = np.linalg.norm(np.diff(pts, axis=0), axis=1) > 1e-12
                pts = pts[keep]
                if len(pts) >= 2:
                    lines.append(pts)
        tc.polylines[orthant_label(z)] = lines
    tc.max_residual = worst
    return tc


# ---------------------------------------------------------------------------
# curvature

def _turning(pts: np.ndarray) -> float:
    closed = len(pts) > 3 and np.allclose(pts[0], pts[-1], atol=1e-9)
    if closed:
        pts = np.vstack([pts, pts[1:2]])
    d = np.diff(pts, axis=0)
    theta = np.arctan2(d[:, 1], d[:, 0])
    dt = np.diff(theta)
    dt = (dt + np.pi) % (2 * np.pi) - np.pi
    return float(np.abs(dt).sum())


def polyline_curvature(tc: TracedCurve) -> float:
    """Sum of |turning angles| along every polyline of ``tc``."""
    return sum(_turning(p) for ps in tc.polylines.values() for p in ps if len(p) >= 2)


def amoeba_total_curvature(tc: TracedCurve, check: bool = True, max_resolution: int = 6400,
                           rel_tol: float = 0.01) -> float:
    """Total curvature of the real amoeba traced in ``tc``.

    With ``check`` the trace is repeated on doubled grids until two successive
    estimates agree within ``rel_tol``; the finer estimate is returned.
    InsufficientResolution is raised if that never happens below
    ``max_resolution``.
    """
    value = polyline_curvature(tc)
    if not check:
        return value
    res = tc.resolution
    while 2 * res <= max_resolution:
        res *= 2
        finer = polyline_curvature(trace_real_curve(tc.family, res, tc.quadrants))
        if abs(finer - value) <= rel_tol * max(abs(finer), 1e-9):
            return finer
        value = finer
    raise InsufficientResolution(
        f"curvature estimate did not settle within {rel_tol:.0%} up to resolution {max_resolution}"
    )


# ---------------------------------------------------------------------------
# convergence

@dataclass
class ConvergenceTable:
    rows: list  # dicts with t, measured, target, rel_error
    vertex_count: int

    @property
    def final_error(self) -> float:
        return self.rows[-1]["rel_error"]

    def errors_decreasing(self, slack: float = 0.0) -> bool:
        errs = [r["rel_error"] for r in self.rows]
        return all(b <= a + slack for a, b in zip(errs, errs[1:]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["t", "measured", "target", "rel_error"], lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            w.writerow(r)
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"quantity": "amoeba_convergence", "vertex_count": self.vertex_count, "rows": self.rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def convergence_experiment(source, t_list: Sequence[float], signs: Mapping | None = None,
                           resolution: int = 400) -> ConvergenceTable:
    """Measured amoeba curvature against the limit r * pi for each t in ``t_list``."""
    poly, sg = _coerce_input(source, signs)
    if poly.ambient_dim != 2:
        raise NotPlaneCurve("convergence experiments are for plane curves")
    if not classify(poly).non_singular:
        raise NotNonSingular("the limit r * pi is only known for non-singular curves")
    r = len(hypersurface(poly, cells=False).vertices)
    target = r * math.pi
    rows = []
    for t in t_list:
        fam = evaluate_family(poly, t, sg)
        k = amoeba_total_curvature(trace_real_curve(fam, resolution))
        rows.append({"t": t, "measured": k, "target": target, "rel_error": abs(k - target) / target})
    return ConvergenceTable(rows, r)
