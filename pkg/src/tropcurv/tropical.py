"""Tropical polynomials (max-plus), their dual regular subdivisions and the
tropical hypersurface as a polyhedral complex.

Convention: ``f(X) = max_a (u_a + X . a)``. The dual subdivision is therefore
read off the UPPER faces of the lifted point set {(a, u_a)}.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, cached_property
from typing import Mapping

import numpy as np

from .core_geometry import (
    LatticeSimplex,
    _dot,
    _projection_columns,
    _sub,
    affine_rank,
    is_elementary,
    nullspace,
    polytope_facets,
    polytope_volume,
    primitive_vector,
    solve,
)
from .errors import (
    DimensionMismatch,
    DuplicateExponent,
    NotGeneric,
    TropicalSyntaxError,
)

__all__ = [
    "TropicalPolynomial",
    "Cell",
    "DualSubdivision",
    "Vertex",
    "ComplexCell",
    "HypersurfaceComplex",
    "Classification",
    "parse_tropical",
    "evaluate",
    "initial_part",
    "dual_subdivision",
    "hypersurface",
    "classify",
    "monomial_shift",
    "read_document",
    "write_document",
]


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class TropicalPolynomial:
    """Finite map exponent -> rational coefficient."""

    def __init__(self, terms: Mapping, ambient_dim: int | None = None):
        if not terms:
            raise ValueError("a tropical polynomial needs at least one term")
        items = {}
        for alpha, c in dict(terms).items():
            alpha = tuple(int(a) for a in alpha)
            items[alpha] = _frac(c)
        dims = {len(a) for a in items}
        if ambient_dim is None:
            if len(dims) != 1:
                raise DimensionMismatch("exponents have different lengths")
            ambient_dim = dims.pop()
        elif dims != {ambient_dim}:
            raise DimensionMismatch(f"exponents must have length {ambient_dim}")
        self.ambient_dim = int(ambient_dim)
        self.terms = dict(sorted(items.items()))

    @property
    def n(self) -> int:
        """Dimension of the hypersurface (ambient dimension minus one)."""
        return self.ambient_dim - 1

    @property
    def exponents(self) -> list[tuple[int, ...]]:
        return list(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, TropicalPolynomial)
            and self.ambient_dim == other.ambient_dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.terms.items())))

    def __repr__(self):
        return f"TropicalPolynomial({self})"

    def __str__(self):
        parts = []
        for alpha, c in self.terms.items():
            mons = [
                f"x{i + 1}" + (f"^{a}" if a != 1 else "") for i, a in enumerate(alpha) if a
            ]
            parts.append("*".join([_fmt(c)] + mons))
        return " + ".join(parts)

    def __call__(self, omega):
        return evaluate(self, omega)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            raise TropicalSyntaxError(f"unexpected character {text[pos + skipped]!r}", pos + skipped)
        start = m.start(m.lastgroup if m.lastgroup != "idx" else "var")
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), start))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("idx")), start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[0] != "end" else "end of input"
            raise TropicalSyntaxError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def integer(self):
        return self.take("num")[1]

    def coefficient(self):
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.i += 1
            sign = -1
        num = self.integer()
        den = 1
        if self.peek()[:2] == ("op", "/"):
            self.i += 1
            tok = self.peek()
            den = self.integer()
            if den == 0:
                raise TropicalSyntaxError("zero denominator", tok[2])
        return sign * Fraction(num, den)

    def power(self):
        _, idx, pos = self.take("var")
        if idx < 1:
            raise TropicalSyntaxError("variables are numbered from x1", pos)
        exp = 1
        if self.peek()[:2] == ("op", "^"):
            self.i += 1
            exp = self.integer()
        return idx, exp

    def term(self):
        start = self.peek()[2]
        coeff = Fraction(0)
        powers = []
        if self.peek()[0] == "var":
            powers.append(self.power())
        else:
            coeff = self.coefficient()
        while self.peek()[:2] == ("op", "*"):
            self.i += 1
            powers.append(self.power())
        return coeff, powers, start

    def polynomial(self):
        terms = [self.term()]
        while self.peek()[:2] == ("op", "+"):
            self.i += 1
            terms.append(self.term())
        self.take("end")
        return terms


def parse_tropical(text: str, ambient_dim: int | None = None) -> TropicalPolynomial:
    """Parse ``"c + c*x1^a*x2^b + ..."`` into a tropical polynomial.

    Coefficients are integers or ``p/q`` with an optional leading minus; a bare
    monomial has coefficient 0 (the tropical unit). Without ``ambient_dim`` the
    number of variables is the largest index used, but at least 2.
    """
    terms = _Parser(text).polynomial()
    used = max((idx for _, powers, _ in terms for idx, _ in powers), default=0)
    if ambient_dim is None:
        ambient_dim = max(used, 2)
    elif used > ambient_dim:
        raise DimensionMismatch(f"x{used} used but ambient_dim is {ambient_dim}")
    out = {}
    for coeff, powers, pos in terms:
        alpha = [0] * ambient_dim
        for idx, exp in powers:
            alpha[idx - 1] += exp
        alpha = tuple(alpha)
        if alpha in out:
            raise DuplicateExponent(f"exponent {alpha} appears twice (term at position {pos})")
        out[alpha] = coeff
    return TropicalPolynomial(out, ambient_dim)


# ---------------------------------------------------------------------------
# evaluation

def _check_point(f, omega):
    omega = tuple(_frac(w) for w in omega)
    if len(omega) != f.ambient_dim:
        raise DimensionMismatch(f"point has length {len(omega)}, expected {f.ambient_dim}")
    return omega


def evaluate(f: TropicalPolynomial, omega) -> Fraction:
    omega = _check_point(f, omega)
    return max(u + _dot(omega, a) for a, u in f.terms.items())


def _argmax(f, omega):
    vals = {a: u + _dot(omega, a) for a, u in f.terms.items()}
    top = max(vals.values())
    return [a for a, v in vals.items() if v == top]


def initial_part(f: TropicalPolynomial, omega) -> TropicalPolynomial:
    """Sub-polynomial of the terms attaining the maximum at ``omega``."""
    omega = _check_point(f, omega)
    return TropicalPolynomial({a: f.terms[a] for a in _argmax(f, omega)}, f.ambient_dim)


def monomial_shift(f: TropicalPolynomial, omega, c=0) -> TropicalPolynomial:
    """Tropical product of ``f`` with ``c * x^omega``."""
    omega = tuple(int(w) for w in omega)
    if len(omega) != f.ambient_dim:
        raise DimensionMismatch("shift vector has the wrong length")
    c = _frac(c)
    return TropicalPolynomial(
        {tuple(a + w for a, w in zip(alpha, omega)): u + c for alpha, u in f.terms.items()},
        f.ambient_dim,
    )


# ---------------------------------------------------------------------------
# dual subdivision

@dataclass(frozen=True)
class Cell:
    """A cell of the dual subdivision.

    ``exponents`` are all exponents of ``f`` lying in the cell (the argmax set
    at ``witness``); ``vertices`` are the vertices of its convex hull.
    """

    exponents: tuple
    vertices: tuple
    dim: int
    witness: tuple

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    @property
    def ambient_dim(self) -> int:
        return len(self.exponents[0])

    @cached_property
    def simplex(self) -> LatticeSimplex | None:
        """The cell as a full-dimensional lattice simplex, if it is one."""
        if self.is_simplex and self.dim == self.ambient_dim:
            return LatticeSimplex(self.vertices)
        return None

    @cached_property
    def volume(self) -> Fraction:
        if self.dim < self.ambient_dim:
            return Fraction(0)
        if self.simplex is not None:
            return self.simplex.volume
        return polytope_volume(self.vertices)

    def to_dict(self) -> dict:
        return {
            "exponents": [list(a) for a in self.exponents],
            "vertices": [list(a) for a in self.vertices],
            "dim": self.dim,
            "witness": [_fmt(w) for w in self.witness],
        }


def _screen_first_cell(P, U):
    """Float screen over (k+1)-subsets; yields candidate index tuples."""
    N, k = P.shape
    scale = 1.0 + float(np.max(np.abs(U))) + float(np.max(np.abs(P)))
    tol = 1e-9 * scale
    combos = itertools.combinations(range(N), k + 1)
    while True:
        chunk = np.array(list(itertools.islice(combos, 4096)), dtype=int)
        if chunk.size == 0:
            return
        A = np.concatenate([P[chunk], -np.ones(chunk.shape + (1,))], axis=2)
        rhs = -U[chunk]
        dets = np.linalg.det(A)
        ok = np.abs(dets) > 1e-9
        if not ok.any():
            continue
        sol = np.linalg.solve(A[ok], rhs[ok][..., None])[..., 0]
        omega, h = sol[:, :k], sol[:, k]
        excess = (U[None, :] + omega @ P.T).max(axis=1) - h
        for idx in np.nonzero(excess <= tol)[0]:
            yield tuple(chunk[ok][idx])


class DualSubdivision:
    """Regular subdivision of the Newton polytope induced by the coefficients.

    Maximal cells are found by walking across facets of the upper hull in
    exact arithmetic, starting from one cell certified exactly. Lower
    dimensional cells and their witnesses are computed on demand.
    """

    def __init__(self, f: TropicalPolynomial):
        self.poly = f
        self.points = f.exponents
        self.lifts = [f.terms[a] for a in self.points]
        self.ambient_dim = f.ambient_dim
        self.dim = affine_rank(self.points)
        if self.dim == 0:
            self.cols = []
        else:
            self.cols = _projection_columns(self.points)
        self._proj = [tuple(p[c] for c in self.cols) for p in self.points]
        self._planes = {}  # maximal cell key -> (omega, h), projected coords
        self._facets = {}  # facet key -> [maximal cell keys]
        self._boundary = {}  # facet key -> (outward normal, offset), projected coords
        if self.dim == 0:
            self._planes[frozenset([0])] = ([], self.lifts[0])
        else:
            self._walk()

    # -- construction ------------------------------------------------------

    def _plane_through(self, subset):
        """Exact (omega, h) with u_i + omega . P_i = h on ``subset``, or None."""
        k = self.dim
        a = [list(self._proj[i]) + [-1] for i in subset]
        b = [-self.lifts[i] for i in subset]
        try:
            sol = solve(a, b)
        except ZeroDivisionError:
            return None
        return sol[:k], sol[k]

    def _argmax_key(self, omega, h):
        return frozenset(
            i for i, (p, u) in enumerate(zip(self._proj, self.lifts)) if u + _dot(omega, p) == h
        )

    def _dominates(self, omega, h):
        return all(u + _dot(omega, p) <= h for p, u in zip(self._proj, self.lifts))

    def _first_cell(self):
        P = np.array(self._proj, dtype=float)
        U = np.array([float(u) for u in self.lifts])
        for subset in _screen_first_cell(P, U):
            plane = self._plane_through(subset)
            if plane is not None and self._dominates(*plane):
                return plane
        # float screening missed everything: exhaustive exact search
        for subset in itertools.combinations(range(len(self.points)), self.dim + 1):
            plane = self._plane_through(subset)
            if plane is not None and self._dominates(*plane):
                return plane
        raise AssertionError("no upper facet found")  # pragma: no cover

    def _cell_facets(self, key):
        idx = sorted(key)
        pts = [self._proj[i] for i in idx]
        return [
            (frozenset(idx[j] for j in facet), nv, b) for facet, nv, b in polytope_facets(pts)
        ]

    def _walk(self):
        omega, h = self._first_cell()
        start = self._argmax_key(omega, h)
        self._planes[start] = (omega, h)
        queue = [start]
        while queue:
            key = queue.pop()
            omega, h = self._planes[key]
            for facet, nv, b in self._cell_facets(key):
                seen = self._facets.setdefault(facet, [])
                if key in seen:
                    continue
                seen.append(key)
                if len(seen) > 1:
                    continue
                beyond = [
                    q for q, p in enumerate(self._proj) if b - _dot(nv, p) > 0
                ]
                if not beyond:
                    self._boundary[facet] = (tuple(-c for c in nv), -b)
                    continue
                lam = max(
                    (self.lifts[q] - h + _dot(omega, self._proj[q])) / (b - _dot(nv, self._proj[q]))
                    for q in beyond
                )
                omega2 = [o + lam * c for o, c in zip(omega, nv)]
                h2 = h + lam * b
                key2 = self._argmax_key(omega2, h2)
                if key2 not in self._planes:
                    self._planes[key2] = (omega2, h2)
                    queue.append(key2)

    # -- helpers -------------------------------------------------------------

    def _ambient_witness(self, omega):
        w = [Fraction(0)] * self.ambient_dim
        for c, o in zip(self.cols, omega):
            w[c] = Fraction(o)
        return tuple(w)

    def _vertices_of(self, key):
        idx = sorted(key)
        if len(idx) == 1:
            return idx
        pts = [self._proj[i] for i in idx]
        cols = _projection_columns(pts)
        local = [tuple(p[c] for c in cols) for p in pts]
        if len(cols) == 0:
            return idx[:1]
        if len(local) == len(cols) + 1:
            return idx
        facets = polytope_facets(local)
        verts = []
        for j in range(len(local)):
            normals = [nv for facet, nv, _ in facets if j in facet]
            if len(normals) >= len(cols) and affine_rank([(0,) * len(cols)] + normals) == len(cols):
                verts.append(idx[j])
        return verts

    def _make_cell(self, key, witness) -> Cell:
        idx = sorted(key)
        return Cell(
            exponents=tuple(self.points[i] for i in idx),
            vertices=tuple(self.points[i] for i in self._vertices_of(key)),
            dim=affine_rank([self._proj[i] for i in idx]),
            witness=witness,
        )

    @cached_property
    def maximal_cells(self) -> list[Cell]:
        cells = [
            self._make_cell(key, self._ambient_witness(omega))
            for key, (omega, _) in self._planes.items()
        ]
        return sorted(cells, key=lambda c: c.exponents)

    @cached_property
    def _delta_facets(self):
        """Facets of the Newton polytope: (outward normal, offset) -> union of cell facets."""
        out = {}
        for facet, (nv, b) in self._boundary.items():
            out.setdefault((nv, b), set()).update(facet)
        return out

    def _faces(self):
        seen = set(self._planes)
        frontier = list(self._planes)
        while frontier:
            nxt = []
            for key in frontier:
                if len(key) == 1:
                    continue
                idx = sorted(key)
                pts = [self._proj[i] for i in idx]
                cols = _projection_columns(pts)
                local = [tuple(p[c] for c in cols) for p in pts]
                if not cols:
                    continue
                for facet, _, _ in polytope_facets(local):
                    sub = frozenset(idx[j] for j in facet)
                    if sub not in seen:
                        seen.add(sub)
                        nxt.append(sub)
            frontier = nxt
        return seen

    def _face_witness(self, key):
        containing = [k for k in self._planes if key <= k]
        m = len(containing)
        omega = [sum(self._planes[k][0][i] for k in containing) / m for i in range(self.dim)]
        push = [0] * self.dim
        for (nv, b), members in self._delta_facets.items():
            if key <= members:
                push = [p + c for p, c in zip(push, nv)]
        s = Fraction(1)
        for _ in range(200):
            trial = [o + s * p for o, p in zip(omega, push)]
            h = max(u + _dot(trial, p) for p, u in zip(self._proj, self.lifts))
            if self._argmax_key(trial, h) == key:
                return self._ambient_witness(trial)
            if not any(push):
                break
            s *= 2
        raise AssertionError(f"no witness found for face {sorted(key)}")  # pragma: no cover

    @cached_property
    def cells(self) -> list[Cell]:
        """All cells of every dimension, sorted by (dim descending, exponents)."""
        out = []
        for key in self._faces():
            if key in self._planes:
                w = self._ambient_witness(self._planes[key][0])
            else:
                w = self._face_witness(key)
            out.append(self._make_cell(key, w))
        return sorted(out, key=lambda c: (-c.dim, c.exponents))

    def cells_of_dim(self, j: int) -> list[Cell]:
        return [c for c in self.cells if c.dim == j]

    def boundary_normals(self, cell: Cell) -> list[tuple[int, ...]]:
        """Outer normals (ambient, integer) of the Newton polytope facets containing ``cell``."""
        key = set(cell.exponents)
        out = []
        for (nv, _), members in self._delta_facets.items():
            if key <= {self.points[i] for i in members}:
                w = [0] * self.ambient_dim
                for c, x in zip(self.cols, nv):
                    w[c] = x
                out.append(primitive_vector(w))
        return sorted(out)

    @cached_property
    def lineality(self) -> list[tuple[int, ...]]:
        """Basis of the directions orthogonal to the Newton polytope."""
        if self.dim == self.ambient_dim:
            return []
        base = self.points[0]
        diffs = [_sub(p, base) for p in self.points[1:]]
        return nullspace(diffs, self.ambient_dim) if diffs else nullspace([], self.ambient_dim)

    @property
    def is_generic(self) -> bool:
        return all(c.is_simplex for c in self.maximal_cells)

    @cached_property
    def newton_volume(self) -> Fraction:
        """Sum of the Euclidean volumes of the maximal cells."""
        return sum((c.volume for c in self.maximal_cells), Fraction(0))

    def to_dict(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "generic": self.is_generic,
            "cells": [c.to_dict() for c in self.cells],
        }


@lru_cache(maxsize=256)
def _cached_subdivision(key: tuple) -> DualSubdivision:
    dim, terms = key
    return DualSubdivision(TropicalPolynomial(dict(terms), dim))


def dual_subdivision(f: TropicalPolynomial) -> DualSubdivision:
    # keyed on a snapshot of the terms, so later mutation of f cannot hit a stale entry
    return _cached_subdivision((f.ambient_dim, tuple(sorted(f.terms.items()))))


# ---------------------------------------------------------------------------
# the hypersurface complex

@dataclass
class Vertex:
    id: int
    position: tuple
    cell: Cell

    @property
    def simplex(self) -> LatticeSimplex | None:
        return self.cell.simplex

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "position": [_fmt(x) for x in self.position],
            "dual": [list(a) for a in self.cell.vertices],
        }


@dataclass
class ComplexCell:
    """A positive-dimensional cell of V(f): point + conv(vertices) + cone(rays) + span(lineality)."""

    id: int
    dim: int
    dual: Cell
    vertices: tuple
    rays: tuple
    lineality: tuple
    point: tuple

    @property
    def bounded(self) -> bool:
        return not self.rays and not self.lineality

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "dim": self.dim,
            "dual": [list(a) for a in self.dual.vertices],
            "vertices": list(self.vertices),
            "rays": [list(r) for r in self.rays],
            "lineality": [list(r) for r in self.lineality],
            "point": [_fmt(x) for x in self.point],
            "bounded": self.bounded,
        }


@dataclass
class HypersurfaceComplex:
    poly: TropicalPolynomial
    subdivision: DualSubdivision
    vertices: list
    edges: list = field(default_factory=list)
    faces: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.poly.n

    @property
    def generic(self) -> bool:
        return self.subdivision.is_generic

    def to_dict(self) -> dict:
        return {
            "ambient_dim": self.poly.ambient_dim,
            "generic": self.generic,
            "vertices": [v.to_dict() for v in self.vertices],
            "edges": [e.to_dict() for e in self.edges],
            "faces": [c.to_dict() for c in self.faces],
        }


def hypersurface(f: TropicalPolynomial, cells: bool = True) -> HypersurfaceComplex:
    """Vertices of V(f) (one per full-dimensional maximal cell of the
    subdivision) and, for n <= 2 with ``cells=True``, its edges and 2-faces.

    Raises NotGeneric when cells are requested for a non-simplicial
    subdivision; pass ``cells=False`` to get the vertices anyway.
    """
    sub = dual_subdivision(f)
    d = f.ambient_dim
    full = sub.dim == d
    maximal = sub.maximal_cells if full else []
    vertices = [Vertex(i, c.witness, c) for i, c in enumerate(maximal)]
    hc = HypersurfaceComplex(f, sub, vertices)
    if not cells or f.n > 2:
        return hc
    if not sub.is_generic:
        raise NotGeneric("the dual subdivision is not simplicial")
    lineality = tuple(sub.lineality)

    def build(dual_dim):
        out = []
        for cell in sub.cells_of_dim(dual_dim):
            key = set(cell.exponents)
            vids = tuple(v.id for v in vertices if key <= set(v.cell.exponents))
            out.append(
                ComplexCell(
                    id=len(out),
                    dim=d - dual_dim,
                    dual=cell,
                    vertices=vids,
                    rays=tuple(sub.boundary_normals(cell)),
                    lineality=lineality,
                    point=cell.witness,
                )
            )
        return out

    if f.n >= 0 and d - 1 >= 0:
        hc.edges = build(d - 1)
    if f.n == 2:
        hc.faces = build(d - 2)
    return hc


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Classification:
    generic: bool
    non_singular: bool
    primitive: bool
    all_duals_elementary: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def classify(f: TropicalPolynomial) -> Classification:
    sub = dual_subdivision(f)
    cells = sub.maximal_cells
    full = sub.dim == f.ambient_dim
    generic = sub.is_generic
    simplices = [c.simplex for c in cells] if full and generic else []
    non_singular = bool(simplices) and all(s.normalized_volume == 1 for s in simplices)
    elementary = bool(simplices) and all(is_elementary(s) for s in simplices)
    primitive = non_singular and len(simplices) == 1
    return Classification(generic, non_singular, primitive, elementary)


# ---------------------------------------------------------------------------
# document format

def read_document(doc: Mapping) -> tuple[TropicalPolynomial, dict | None]:
    """Parse ``{"ambient_dim": d, "terms": [{"exponent", "coeff", "sign"?}]}``.

    Returns the polynomial and the exponent -> +-1 sign map (None when no term
    carries a sign).
    """
    d = int(doc["ambient_dim"])
    terms = {}
    signs = {}
    for t in doc["terms"]:
        alpha = tuple(int(a) for a in t["exponent"])
        if alpha in terms:
            raise DuplicateExponent(f"exponent {alpha} appears twice")
        terms[alpha] = _frac(str(t.get("coeff", 0)))
        if "sign" in t:
            s = t["sign"]
            if s in ("+", 1, "+1"):
                signs[alpha] = 1
            elif s in ("-", -1, "-1"):
                signs[alpha] = -1
            else:
                raise ValueError(f"bad sign {s!r}")
    return TropicalPolynomial(terms, d), (signs or None)


def write_document(f: TropicalPolynomial, signs: Mapping | None = None) -> dict:
    terms = []
    for alpha, u in f.terms.items():
        t = {"exponent": list(alpha), "coeff": _fmt(u)}
        if signs is not None and alpha in signs:
            t["sign"] = "+" if signs[alpha] > 0 else "-"
        terms.append(t)
    return {"ambient_dim": f.ambient_dim, "terms": terms}
