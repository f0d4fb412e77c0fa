"""Exact lattice geometry: rational linear algebra, lattice simplices,
polyhedral cones and their solid angles, sphere-volume constants.

Every combinatorial predicate here runs on Python integers or
:class:`fractions.Fraction`. Floating point only appears in the value of an
:class:`AngleMeasure`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateSimplex,
    DimensionMismatch,
    InvalidSampleCount,
    MissingFacets,
    ZeroGenerator,
)

__all__ = [
    "sphere_volume",
    "a_constant",
    "LatticeSimplex",
    "HalfSpace",
    "Cone",
    "AngleMeasure",
    "AngleConfig",
    "simplex_lattice_volume",
    "is_primitive",
    "is_elementary",
    "cone_facets",
    "solid_angle",
    "nullspace",
    "rank",
    "solve",
    "det",
    "primitive_vector",
    "polytope_facets",
    "polytope_volume",
    "affine_rank",
]


# ---------------------------------------------------------------------------
# sphere constants

def _prod(values):
    return reduce(lambda a, b: a * b, values, 1)


def sphere_volume(m: int) -> float:
    """Volume of the unit sphere S^m in R^(m+1).

    Uses the even/odd product forms; ``sphere_volume(1) == 2*pi``.
    """
    if m < 0:
        raise ValueError("sphere dimension must be non-negative")
    k, odd = divmod(m, 2)
    if odd:
        return (2 * math.pi) ** (k + 1) / _prod(range(2, 2 * k + 1, 2))
    return 2 * (2 * math.pi) ** k / _prod(range(1, 2 * k, 2))


def a_constant(n: int) -> float:
    """(2*4*...*2n) / (1*3*...*(2n-1)); equals pi*sigma_2n/sigma_(2n+1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _prod(range(2, 2 * n + 1, 2)) / _prod(range(1, 2 * n, 2))


# ---------------------------------------------------------------------------
# exact linear algebra

def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _rref(rows, ncols):
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    m = _as_fraction_rows(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows, ncols=None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    return len(_rref(rows, ncols)[1])


def primitive_vector(v: Iterable) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    v = [Fraction(x) for x in v]
    den = reduce(math.lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        raise ZeroGenerator("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def nullspace(rows, ncols: int) -> list[tuple[int, ...]]:
    """Integer basis (primitive vectors) of {x : rows @ x = 0}."""
    rows = list(rows)
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    m, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(primitive_vector(v))
    return basis


def solve(a, b) -> list[Fraction]:
    """Solve the square system a @ x = b exactly."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = _rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [m[i][n] for i in range(n)]


def det(rows) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = _as_fraction_rows(rows)
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * result


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def affine_rank(points) -> int:
    points = [tuple(p) for p in points]
    if len(points) <= 1:
        return 0
    return rank([_sub(p, points[0]) for p in points[1:]])


# ---------------------------------------------------------------------------
# lattice simplices

@dataclass(frozen=True)
class LatticeSimplex:
    """Full-dimensional lattice simplex: d+1 affinely independent points of Z^d."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(tuple(int(c) for c in v) for v in self.vertices)
        if not verts:
            raise DegenerateSimplex("simplex needs at least one vertex")
        d = len(verts[0])
        if any(len(v) != d for v in verts):
            raise DimensionMismatch("vertices have different lengths")
        if len(verts) != d + 1:
            raise DegenerateSimplex(f"need {d + 1} vertices in dimension {d}, got {len(verts)}")
        object.__setattr__(self, "vertices", verts)
        if self.determinant == 0:
            raise DegenerateSimplex(f"vertices {verts} are affinely dependent")

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def edges(self, base: int = 0) -> list[tuple[int, ...]]:
        b = self.vertices[base]
        return [_sub(v, b) for i, v in enumerate(self.vertices) if i != base]

    @cached_property
    def determinant(self) -> int:
        return int(det(self.edges()))

    @property
    def volume(self) -> Fraction:
        return Fraction(abs(self.determinant), math.factorial(self.dim))

    @property
    def normalized_volume(self) -> int:
        return abs(self.determinant)

    def facet_normal(self, i: int) -> tuple[int, ...]:
        """Primitive normal of the facet opposite vertex ``i``, pointing into the simplex."""
        others = [v for j, v in enumerate(self.vertices) if j != i]
        rows = [_sub(v, others[0]) for v in others[1:]]
        (nv,) = nullspace(rows, self.dim)
        if _dot(nv, _sub(self.vertices[i], others[0])) < 0:
            nv = tuple(-x for x in nv)
        return nv

    @cached_property
    def facet_normals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.facet_normal(i) for i in range(len(self.vertices)))


def _simplex(s) -> LatticeSimplex:
    return s if isinstance(s, LatticeSimplex) else LatticeSimplex(tuple(s))


def simplex_lattice_volume(s) -> Fraction:
    """Euclidean volume |det(edges)| / d!."""
    return _simplex(s).volume


def is_primitive(s) -> bool:
    return _simplex(s).normalized_volume == 1


def _gf2_rank(vectors) -> int:
    rows = [sum((c & 1) << i for i, c in enumerate(v)) for v in vectors]
    r = 0
    for bit in range(max((x.bit_length() for x in rows), default=0)):
        mask = 1 << bit
        p = next((i for i in range(r, len(rows)) if rows[i] & mask), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        r += 1
    return r


def is_elementary(s, base: int = 0) -> bool:
    """Edge vectors from ``base`` reduce mod 2 to a basis of (Z/2)^d."""
    s = _simplex(s)
    return _gf2_rank(s.edges(base)) == s.dim


# ---------------------------------------------------------------------------
# cones

@dataclass(frozen=True, order=True)
class HalfSpace:
    """{x : sense * (normal . x) >= 0} with a primitive integer normal."""

    normal: tuple
    sense: int = 1

    def __post_init__(self):
        normal = tuple(int(c) for c in self.normal)
        if not any(normal):
            raise ZeroGenerator("half-space normal must be nonzero")
        if reduce(math.gcd, normal, 0) != 1:
            raise ValueError(f"normal {normal} is not primitive")
        if self.sense not in (1, -1):
            raise ValueError("sense must be +1 (>=) or -1 (<=)")
        object.__setattr__(self, "normal", normal)

    def contains(self, x) -> bool:
        return self.sense * _dot(self.normal, x) >= 0

    def as_ge(self) -> "HalfSpace":
        if self.sense == 1:
            return self
        return HalfSpace(tuple(-c for c in self.normal), 1)

    def __str__(self):
        return f"{self.normal}.x {'>=' if self.sense == 1 else '<='} 0"


@lru_cache(maxsize=65536)
def _cone_facets_cached(gens: tuple) -> tuple:
    d = len(gens[0])
    perp = nullspace(gens, d)
    span_dim = d - len(perp)
    out = set()
    for v in perp:
        out.add(HalfSpace(v, 1))
        out.add(HalfSpace(tuple(-c for c in v), 1))
    for subset in itertools.combinations(gens, span_dim - 1):
        ns = nullspace(list(subset) + perp, d)
        if len(ns) != 1:
            continue
        c = ns[0]
        dots = [_dot(c, g) for g in gens]
        if all(x >= 0 for x in dots):
            out.add(HalfSpace(c, 1))
        elif all(x <= 0 for x in dots):
            out.add(HalfSpace(tuple(-x for x in c), 1))
    return tuple(sorted(out))


def _normalize_generators(generators) -> tuple:
    gens = []
    for g in generators:
        g = tuple(int(c) for c in g)
        if not any(g):
            raise ZeroGenerator(f"zero generator {g}")
        gens.append(g)
    if not gens:
        return ()
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise DimensionMismatch("generators have different lengths")
    return tuple(sorted(set(primitive_vector(g) for g in gens)))


def cone_facets(generators: Sequence) -> list[HalfSpace]:
    """Facet half-spaces of the conical hull of ``generators``.

    Brute force over subsets of generators: a candidate normal is the
    one-dimensional null space of a subset (plus the orthogonal complement of
    the span, for cones without interior). Kept if every generator lies weakly
    on one side. A lower-dimensional cone also gets both half-spaces of every
    equation cutting out its span. Output is in ``>=`` form, sorted, without
    duplicates.
    """
    gens = _normalize_generators(generators)
    if not gens:
        return []
    return list(_cone_facets_cached(gens))


class Cone:
    """Conical hull of integer generators. ``facets`` stays None until computed."""

    def __init__(self, generators=(), ambient_dim=None, facets=None):
        self.generators = _normalize_generators(generators)
        if ambient_dim is None:
            if not self.generators:
                raise ValueError("ambient_dim is required for a cone without generators")
            ambient_dim = len(self.generators[0])
        self.ambient_dim = int(ambient_dim)
        self.facets = None if facets is None else list(facets)

    @classmethod
    def from_generators(cls, generators, ambient_dim=None) -> "Cone":
        cone = cls(generators, ambient_dim)
        cone.facets = cone_facets(cone.generators)
        return cone

    @property
    def is_empty(self) -> bool:
        """True when the cone is reduced to the origin."""
        return not self.generators

    def contains(self, x) -> bool:
        if self.facets is None:
            raise MissingFacets("cone facets have not been computed")
        if self.is_empty:
            return not any(x)
        return all(h.contains(x) for h in self.facets)

    def __repr__(self):
        return f"Cone(generators={list(self.generators)})"


# ---------------------------------------------------------------------------
# solid angles

@dataclass
class AngleConfig:
    samples: int = 200_000
    seed: int = 0
    method: str = "auto"  # "auto" or "monte-carlo"


@dataclass
class AngleMeasure:
    value: float
    method: str
    stderr: float = 0.0
    seed: int | None = None
    samples: int | None = None

    @property
    def exact(self) -> bool:
        return self.method != "monte-carlo"

    def __add__(self, other: "AngleMeasure") -> "AngleMeasure":
        if self.method == other.method:
            method = self.method
        elif "monte-carlo" in (self.method, other.method):
            method = "monte-carlo"
        else:
            method = "exact-mixed"
        samples = None
        if self.samples is not None or other.samples is not None:
            samples = (self.samples or 0) + (other.samples or 0)
        return AngleMeasure(
            value=self.value + other.value,
            method=method,
            stderr=math.hypot(self.stderr, other.stderr),
            seed=self.seed if self.seed is not None else other.seed,
            samples=samples,
        )

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "exact": self.exact,
            "stderr": self.stderr,
            "seed": self.seed,
            "samples": self.samples,
        }


def _exact_label(n):
    return "exact-planar" if n == 1 else "exact-spherical"


def _unit(v):
    a = np.asarray(v, dtype=float)
    return a / np.linalg.norm(a)


def _planar_angle(gens, facets) -> float:
    ineq = [h for h in facets]
    if len(ineq) == 1:
        return math.pi
    rays = []
    for h in ineq:
        tight = [g for g in gens if _dot(h.normal, g) == 0]
        rays.append(tight[0])
    (x1, y1), (x2, y2) = rays[0], rays[1]
    return math.atan2(abs(x1 * y2 - x2 * y1), x1 * x2 + y1 * y2)


def _triangle_solid_angle(a, b, c) -> float:
    # Van Oosterom & Strackee
    a, b, c = _unit(a), _unit(b), _unit(c)
    num = abs(float(np.dot(a, np.cross(b, c))))
    den = 1.0 + float(np.dot(a, b) + np.dot(b, c) + np.dot(c, a))
    return 2.0 * math.atan2(num, den)


def _spherical_angle(gens, facets) -> float:
    normals = [h.normal for h in facets]
    if len(normals) == 1:
        return 2 * math.pi
    lineality = nullspace(normals, 3)
    if lineality:
        # wedge: product of a line and a planar sector
        (n1, n2) = normals[:2]
        between = math.atan2(np.linalg.norm(np.cross(n1, n2)), float(_dot(n1, n2)))
        return 2 * (math.pi - between)
    rays = []
    for g in gens:
        tight = [nv for nv in normals if _dot(nv, g) == 0]
        if rank(tight, 3) == 2:
            rays.append(g)
    axis = sum(_unit(r) for r in rays)
    axis /= np.linalg.norm(axis)
    helper = np.eye(3)[int(np.argmin(np.abs(axis)))]
    e1 = np.cross(axis, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    rays.sort(key=lambda r: math.atan2(float(np.dot(r, e2)), float(np.dot(r, e1))))
    return sum(
        _triangle_solid_angle(rays[0], rays[i], rays[i + 1]) for i in range(1, len(rays) - 1)
    )


def _monte_carlo(normals, d, cfg: AngleConfig) -> AngleMeasure:
    n = d - 1
    rng = np.random.default_rng(cfg.seed)
    a = np.asarray(normals, dtype=float)
    hits = 0
    remaining = cfg.samples
    chunk = 100_000
    while remaining:
        m = min(chunk, remaining)
        x = rng.standard_normal((m, d))
        hits += int(np.count_nonzero(np.all(x @ a.T >= 0, axis=1)))
        remaining -= m
    p = hits / cfg.samples
    sigma = sphere_volume(n)
    return AngleMeasure(
        value=sigma * p,
        method="monte-carlo",
        stderr=sigma * math.sqrt(p * (1 - p) / cfg.samples),
        seed=cfg.seed,
        samples=cfg.samples,
    )


@lru_cache(maxsize=65536)
def _solid_angle_cached(gens, facets, d, samples, seed, method):
    n = d - 1
    if not gens:
        return AngleMeasure(0.0, _exact_label(n) if n <= 2 else "exact")
    equations = {h for h in facets if HalfSpace(tuple(-c for c in h.normal), 1) in facets}
    if equations:
        # no interior: measure zero
        return AngleMeasure(0.0, _exact_label(n) if n <= 2 else "exact")
    if not facets:
        return AngleMeasure(sphere_volume(n), _exact_label(n) if n <= 2 else "exact")
    if method == "monte-carlo" or n >= 3:
        return _monte_carlo([h.normal for h in facets], d, AngleConfig(samples, seed, method))
    if n == 1:
        return AngleMeasure(_planar_angle(gens, facets), "exact-planar")
    return AngleMeasure(_spherical_angle(gens, facets), "exact-spherical")


def solid_angle(cone: Cone, cfg: AngleConfig | None = None) -> AngleMeasure:
    """Spherical measure of ``cone`` intersected with the unit sphere S^n.

    Exact planar angle for n = 1, a fan of spherical triangles for n = 2,
    Monte Carlo membership sampling for n >= 3 (or when ``cfg.method`` asks
    for it). Cones without interior measure 0; the whole space measures
    sigma_n.
    """
    cfg = cfg or AngleConfig()
    if cfg.samples < 1:
        raise InvalidSampleCount(f"samples must be >= 1, got {cfg.samples}")
    if cfg.method not in ("auto", "monte-carlo"):
        raise ValueError(f"unknown method {cfg.method!r}")
    if cone.ambient_dim < 2:
        raise DimensionMismatch("solid angles need ambient dimension >= 2")
    if cone.facets is None:
        raise MissingFacets("compute facets first (Cone.from_generators)")
    facets = tuple(sorted(h.as_ge() for h in cone.facets))
    return _solid_angle_cached(
        cone.generators, facets, cone.ambient_dim, cfg.samples, cfg.seed, cfg.method
    )


# ---------------------------------------------------------------------------
# lattice polytopes given by point sets

def _projection_columns(points) -> list[int]:
    """Coordinates on which the affine hull of ``points`` projects bijectively."""
    base = points[0]
    diffs = [_sub(p, base) for p in points[1:]]
    k = rank(diffs) if diffs else 0
    cols: list[int] = []
    for c in range(len(base)):
        trial = cols + [c]
        if rank([[row[i] for i in trial] for row in diffs], len(trial)) == len(trial):
            cols = trial
        if len(cols) == k:
            break
    return cols


def polytope_facets(points) -> list[tuple[frozenset, tuple, Fraction]]:
    """Facets of conv(points) inside its own affine hull.

    Points must already be full-dimensional in their coordinates (callers
    project first). Returns ``(facet points, inward normal, offset)`` with
    ``normal . x >= offset`` on the polytope and equality on the facet.
    """
    points = [tuple(p) for p in points]
    d = len(points[0])
    out = {}
    for subset in itertools.combinations(range(len(points)), d):
        base = points[subset[0]]
        rows = [_sub(points[i], base) for i in subset[1:]]
        ns = nullspace(rows, d) if rows else nullspace([], d)
        if len(ns) != 1:
            continue
        nv = ns[0]
        b = _dot(nv, base)
        vals = [_dot(nv, p) - b for p in points]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            nv = tuple(-c for c in nv)
            b = -b
            vals = [-v for v in vals]
        else:
            continue
        key = frozenset(i for i, v in enumerate(vals) if v == 0)
        out.setdefault(key, (key, nv, Fraction(b)))
    return sorted(out.values(), key=lambda t: sorted(t[0]))


def _project(points, cols):
    return [tuple(p[c] for c in cols) for p in points]


def _polytope_volume_fulldim(points) -> Fraction:
    d = len(points[0])
    if len(points) == d + 1:
        return Fraction(abs(det([_sub(p, points[0]) for p in points[1:]])), math.factorial(d))
    apex = min(points)
    total = Fraction(0)
    for facet, nv, b in polytope_facets(points):
        fpts = [points[i] for i in sorted(facet)]
        if apex in fpts:
            continue
        height = Fraction(_dot(nv, apex) - b)
        total += height * _facet_measure(fpts, nv) / d
    return total


def _facet_measure(fpts, nv) -> Fraction:
    """(d-1)-volume of a facet divided by |nv|.

    A pyramid over the facet has volume (nv . apex - b) * area / (|nv| * d).
    Dropping a coordinate c with nv[c] != 0 scales the area by |nv[c]| / |nv|,
    so area / |nv| = projected area / |nv[c]|, which stays rational.
    """
    d = len(fpts[0])
    c = next(i for i, x in enumerate(nv) if x != 0)
    if d == 1:
        return Fraction(1, abs(nv[0]))
    keep = [i for i in range(d) if i != c]
    return _polytope_volume_fulldim(_project(fpts, keep)) / abs(nv[c])


def polytope_volume(points) -> Fraction:
    """Exact Euclidean volume of conv(points) in its ambient space (0 if not full-dimensional)."""
    points = sorted(set(tuple(int(c) for c in p) for p in points))
    d = len(points[0])
    if affine_rank(points) < d:
        return Fraction(0)
    return _polytope_volume_fulldim(points)
