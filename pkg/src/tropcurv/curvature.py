"""Curvature of (real) tropical hypersurfaces.

Polyhedral curvature is computed vertex by vertex: at a vertex with dual
simplex c and twisted signs, the curvature cone is generated by the edge
vectors of c oriented from "-" to "+", and its curvature is the solid angle
of that cone. Complex curvature only depends on the lattice volume of the
Newton polytope.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

from .core_geometry import (
    AngleConfig,
    AngleMeasure,
    Cone,
    HalfSpace,
    LatticeSimplex,
    a_constant,
    is_elementary,
    primitive_vector,
    solid_angle,
    sphere_volume,
)
from .errors import DimensionMismatch, NotElementary, NotGeneric, NotNonSingular
from .patchwork import SignDistribution, orthants, twisted_signs
from .tropical import TropicalPolynomial, classify, hypersurface

__all__ = [
    "constants",
    "curvature_cone",
    "vertex_curvature",
    "per_vertex_total",
    "CurvatureReport",
    "VerificationReport",
    "PartitionReport",
    "GaussBonnetReport",
    "polyhedral_total_curvature",
    "complex_total_curvature",
    "real_total_curvature_nonsingular",
    "verify_inequality",
    "verify_vertex_sum",
    "partition_check",
    "gauss_bonnet",
]

EXACT_TOL = {1: 1e-9, 2: 1e-8}
MC_SIGMAS = 4.0


def constants(n: int) -> dict:
    return {
        "n": n,
        "sigma_n": sphere_volume(n),
        "sigma_2n": sphere_volume(2 * n),
        "sigma_2n_plus_1": sphere_volume(2 * n + 1),
        "a_n": a_constant(n),
    }


def _tolerance(measure: AngleMeasure, n: int, scale: float = 1.0) -> float:
    if measure.exact:
        return EXACT_TOL.get(n, 1e-8) * max(1.0, abs(scale))
    return MC_SIGMAS * measure.stderr * abs(scale) + 1e-12


def _as_simplex(s) -> LatticeSimplex:
    return s if isinstance(s, LatticeSimplex) else LatticeSimplex(tuple(s))


def curvature_cone(simplex, signs) -> Cone:
    """Cone spanned by the edges of ``simplex`` oriented from "-" to "+" vertices.

    ``signs`` follows the vertex order of ``simplex``. Constant signs give the
    cone reduced to the origin.
    """
    s = _as_simplex(simplex)
    signs = [1 if x > 0 else -1 for x in signs]
    if len(signs) != len(s.vertices):
        raise DimensionMismatch(f"{len(signs)} signs for {len(s.vertices)} vertices")
    minus = [v for v, e in zip(s.vertices, signs) if e < 0]
    plus = [v for v, e in zip(s.vertices, signs) if e > 0]
    gens = [tuple(p - m for p, m in zip(pv, mv)) for mv in minus for pv in plus]
    return Cone.from_generators(gens, ambient_dim=s.dim)


def _stream_seed(seed: int, vertex_index: int, orthant_index: int) -> int:
    ss = np.random.SeedSequence([seed, vertex_index, orthant_index])
    return int(ss.generate_state(1)[0])


def vertex_curvature(simplex, theta: Mapping, z, cfg: AngleConfig | None = None,
                     vertex_index: int = 0) -> AngleMeasure:
    """Curvature at the copy s_z(v) of a vertex with dual ``simplex``."""
    s = _as_simplex(simplex)
    cfg = cfg or AngleConfig()
    theta = theta if isinstance(theta, SignDistribution) else SignDistribution(theta)
    signs = twisted_signs(s.vertices, theta, z)
    zi = int("".join(str(int(b) & 1) for b in z), 2)
    sub = AngleConfig(cfg.samples, _stream_seed(cfg.seed, vertex_index, zi), cfg.method)
    return solid_angle(curvature_cone(s, signs), sub)


def per_vertex_total(simplex, theta: Mapping, cfg: AngleConfig | None = None,
                     vertex_index: int = 0) -> AngleMeasure:
    """Sum of the curvatures of all symmetric copies of one vertex."""
    s = _as_simplex(simplex)
    total = None
    for z in orthants(s.dim):
        m = vertex_curvature(s, theta, z, cfg, vertex_index)
        total = m if total is None else total + m
    if cfg is not None and total.method == "monte-carlo":
        total = replace(total, seed=cfg.seed)
    return total


# ---------------------------------------------------------------------------
# reports

@dataclass
class CurvatureReport:
    quantity: str
    value: float
    exact: bool
    constants: dict
    stderr: float = 0.0
    seed: int | None = None
    samples: int | None = None
    per_vertex: list = field(default_factory=list)
    totals: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "value": self.value,
            "exact": self.exact,
            "stderr": self.stderr,
            "seed": self.seed,
            "samples": self.samples,
            "constants": self.constants,
            "per_vertex": self.per_vertex,
            "totals": self.totals,
            "details": self.details,
        }


@dataclass
class VerificationReport:
    check: str
    passed: bool
    constants: dict
    lhs: float | None = None
    rhs: float | None = None
    tolerance: float = 0.0
    exact: bool = True
    stderr: float = 0.0
    seed: int | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "quantity": self.check,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "tolerance": self.tolerance,
            "exact": self.exact,
            "stderr": self.stderr,
            "seed": self.seed,
            "constants": self.constants,
            "details": self.details,
        }


@dataclass
class PartitionReport:
    simplex: tuple
    base_vertex: tuple
    samples: int
    seed: int
    cones: list
    misses: int
    overlaps: int
    descriptions_agree: bool
    facets_match: bool
    constants: dict

    @property
    def violations(self) -> int:
        return self.misses + self.overlaps

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.descriptions_agree and self.facets_match

    def to_dict(self) -> dict:
        return {
            "quantity": "partition",
            "passed": self.passed,
            "simplex": [list(v) for v in self.simplex],
            "base_vertex": list(self.base_vertex),
            "samples": self.samples,
            "seed": self.seed,
            "misses": self.misses,
            "overlaps": self.overlaps,
            "descriptions_agree": self.descriptions_agree,
            "facets_match": self.facets_match,
            "cones": self.cones,
            "constants": self.constants,
        }


@dataclass
class GaussBonnetReport:
    euler_characteristic: int
    vertex_count: int
    complex_total: float
    formula_value: float
    residual: float
    chi_matches_vertices: bool
    constants: dict
    tolerance: float = 1e-12

    @property
    def passed(self) -> bool:
        return self.residual < self.tolerance and self.chi_matches_vertices

    def to_dict(self) -> dict:
        return {
            "quantity": "gauss_bonnet",
            "passed": self.passed,
            "value": self.complex_total,
            "exact": True,
            "euler_characteristic": self.euler_characteristic,
            "vertex_count": self.vertex_count,
            "formula_value": self.formula_value,
            "residual": self.residual,
            "chi_matches_vertices": self.chi_matches_vertices,
            "constants": self.constants,
        }


# ---------------------------------------------------------------------------
# totals

def _require_generic(f):
    cls = classify(f)
    if not cls.generic:
        raise NotGeneric("curvature is only defined for generic tropical polynomials")
    return cls


def _theta(f, theta):
    if theta is None:
        return SignDistribution.for_polynomial(f)
    return theta if isinstance(theta, SignDistribution) else SignDistribution(theta)


def complex_total_curvature(f: TropicalPolynomial) -> CurvatureReport:
    """(-1)^n a_n (n+1)! vol(Newton polytope) vol(CP^n), vol(CP^n) = sigma_(2n+1)/sigma_1."""
    from .tropical import dual_subdivision

    n = f.n
    c = constants(n)
    vol = dual_subdivision(f).newton_volume
    normalized = math.factorial(n + 1) * vol
    value = (-1) ** n * c["a_n"] * float(normalized) * c["sigma_2n_plus_1"] / sphere_volume(1)
    return CurvatureReport(
        quantity="complex_total_curvature",
        value=value,
        exact=True,
        constants=c,
        totals={"complex": value, "abs_complex": abs(value)},
        details={"newton_volume": str(vol), "normalized_volume": int(normalized)},
    )


def polyhedral_total_curvature(f: TropicalPolynomial, theta=None,
                               cfg: AngleConfig | None = None) -> CurvatureReport:
    """Sum over vertices v of V(f) of the per-vertex totals over all orthants."""
    cls = _require_generic(f)
    theta = _theta(f, theta)
    cfg = cfg or AngleConfig()
    n = f.n
    c = constants(n)
    V = hypersurface(f, cells=False)
    rows = []
    total = AngleMeasure(0.0, "exact-planar" if n == 1 else "exact-spherical")
    for v in V.vertices:
        m = per_vertex_total(v.simplex, theta, cfg, v.id)
        rows.append({
            "vertex": v.id,
            "position": [str(x) for x in v.position],
            "dual": [list(a) for a in v.cell.vertices],
            "elementary": is_elementary(v.simplex),
            "value": m.value,
            "stderr": m.stderr,
            "method": m.method,
        })
        total = total + m
    complex_total = complex_total_curvature(f).value
    lhs = c["sigma_2n"] / c["sigma_n"] * total.value
    totals = {
        "polyhedral_real": total.value,
        "complex": complex_total,
        "ratio": lhs / abs(complex_total) if complex_total else None,
    }
    details = {"vertex_count": len(V.vertices), "classification": cls.to_dict()}
    if cls.non_singular:
        details["expected_nonsingular"] = len(V.vertices) * c["sigma_n"] / 2
    exact = total.method != "monte-carlo"
    return CurvatureReport(
        quantity="polyhedral_total_curvature",
        value=total.value,
        exact=exact,
        constants=c,
        stderr=total.stderr,
        seed=None if exact else cfg.seed,
        samples=None if exact else cfg.samples,
        per_vertex=rows,
        totals=totals,
        details=details,
    )


def real_total_curvature_nonsingular(f: TropicalPolynomial) -> CurvatureReport:
    """r * sigma_n / 2 for a non-singular f with r vertices.

    Equal to the limit of the real amoeba curvature as t -> 0.
    """
    cls = classify(f)
    if not cls.non_singular:
        raise NotNonSingular("the tropical polynomial is not non-singular")
    c = constants(f.n)
    r = len(hypersurface(f, cells=False).vertices)
    value = r * c["sigma_n"] / 2
    return CurvatureReport(
        quantity="real_total_curvature",
        value=value,
        exact=True,
        constants=c,
        totals={"real": value},
        details={"vertex_count": r, "equals_amoeba_limit": True},
    )


def verify_inequality(f: TropicalPolynomial, theta=None,
                      cfg: AngleConfig | None = None) -> VerificationReport:
    """Compare L = (sigma_2n/sigma_n) * polyhedral total with R = |complex total|.

    The inequality L <= R is asserted when every dual simplex is elementary;
    otherwise it is only reported. For non-singular f, equality is asserted.
    """
    cls = _require_generic(f)
    poly = polyhedral_total_curvature(f, theta, cfg)
    c = poly.constants
    n = f.n
    factor = c["sigma_2n"] / c["sigma_n"]
    lhs = factor * poly.value
    rhs = abs(poly.totals["complex"])
    measure = AngleMeasure(poly.value, "monte-carlo" if not poly.exact else "exact", poly.stderr)
    tol = _tolerance(measure, n, factor * max(1.0, poly.value))
    holds = lhs <= rhs + tol
    asserted = cls.all_duals_elementary
    equality = abs(lhs - rhs) <= tol
    passed = (holds or not asserted) and (equality or not cls.non_singular)
    return VerificationReport(
        check="inequality",
        passed=passed,
        constants=c,
        lhs=lhs,
        rhs=rhs,
        tolerance=tol,
        exact=poly.exact,
        stderr=factor * poly.stderr,
        seed=poly.seed,
        details={
            "holds": holds,
            "asserted": asserted,
            "equality": equality,
            "equality_expected": cls.non_singular,
            "strict": lhs < rhs - tol,
            "polyhedral_total": poly.value,
        },
    )


def verify_vertex_sum(f: TropicalPolynomial, theta=None,
                  cfg: AngleConfig | None = None) -> VerificationReport:
    """Every vertex with an elementary dual simplex has total curvature sigma_n / 2."""
    poly = polyhedral_total_curvature(f, theta, cfg)
    c = poly.constants
    target = c["sigma_n"] / 2
    failures = []
    worst = 0.0
    for row in poly.per_vertex:
        if not row["elementary"]:
            continue
        m = AngleMeasure(row["value"], row["method"], row["stderr"])
        dev = abs(row["value"] - target)
        worst = max(worst, dev)
        if dev > _tolerance(m, f.n, target):
            failures.append(row["vertex"])
    return VerificationReport(
        check="vertex-sum",
        passed=not failures,
        constants=c,
        lhs=poly.value,
        rhs=target * sum(1 for r in poly.per_vertex if r["elementary"]),
        tolerance=_tolerance(AngleMeasure(0, "monte-carlo" if not poly.exact else "exact",
                                          poly.stderr), f.n, target),
        exact=poly.exact,
        stderr=poly.stderr,
        seed=poly.seed,
        details={"failed_vertices": failures, "max_deviation": worst, "total": poly.value},
    )


def partition_check(simplex, samples: int = 100_000, seed: int = 0,
                    base: int | None = None) -> PartitionReport:
    """Check that the curvature cones with a fixed "-" at the base vertex tile
    the half-space H_{v0}^- = {n_{v0} . x <= 0}.

    Each cone is described twice, from its generators and as the intersection
    of the half-spaces phi(v) n_v . x >= 0 (inward facet normals n_v), and the
    two descriptions are compared on every sample.
    """
    s = _as_simplex(simplex)
    if not is_elementary(s):
        raise NotElementary(f"simplex {s.vertices} is not elementary")
    verts = s.vertices
    d = s.dim
    b = verts.index(min(verts)) if base is None else base
    normals = s.facet_normals
    n0 = np.asarray(normals[b], dtype=float)
    phis = [
        phi for phi in itertools.product((1, -1), repeat=len(verts))
        if phi[b] == -1 and len(set(phi)) == 2
    ]
    cones = []
    facets_match = True
    for phi in phis:
        cone = curvature_cone(s, phi)
        hs = [tuple(p * c for c in nv) for p, nv in zip(phi, normals)]
        relevant = {
            HalfSpace(primitive_vector(h), 1)
            for i, h in enumerate(hs)
            if len({phi[j] for j in range(len(verts)) if j != i}) == 2
        }
        if not set(cone.facets) <= relevant:
            facets_match = False
        cones.append((phi, cone, hs))

    rng = np.random.default_rng(seed)
    checks = np.asarray(
        [nv for nv in normals] + [h.normal for _, cone, _ in cones for h in cone.facets],
        dtype=float,
    )
    checks /= np.linalg.norm(checks, axis=1)[:, None]
    x = rng.standard_normal((samples, d))
    while True:
        tie = np.any(np.abs(x @ checks.T) < 1e-12 * np.linalg.norm(x, axis=1)[:, None], axis=1)
        if not tie.any():
            break
        x[tie] = rng.standard_normal((int(tie.sum()), d))
    x = np.where((x @ n0 > 0)[:, None], -x, x)

    counts = np.zeros(samples, dtype=int)
    agree = True
    rows = []
    half = sphere_volume(d - 1) / 2
    for phi, cone, hs in cones:
        g = np.asarray([h.normal for h in cone.facets], dtype=float)
        by_gen = np.all(x @ g.T >= 0, axis=1)
        by_hs = np.all(x @ np.asarray(hs, dtype=float).T >= 0, axis=1)
        agree &= bool(np.array_equal(by_gen, by_hs))
        counts += by_gen
        hits = int(by_gen.sum())
        exact = solid_angle(cone) if d <= 3 else None
        rows.append({
            "signs": "".join("+" if p > 0 else "-" for p in phi),
            "generators": [list(g_) for g_ in cone.generators],
            "hits": hits,
            "fraction": hits / samples,
            "expected_fraction": exact.value / half if exact is not None else None,
        })
    return PartitionReport(
        simplex=verts,
        base_vertex=verts[b],
        samples=samples,
        seed=seed,
        cones=rows,
        misses=int(np.count_nonzero(counts == 0)),
        overlaps=int(np.count_nonzero(counts > 1)),
        descriptions_agree=agree,
        facets_match=facets_match,
        constants=constants(d - 1),
    )


def gauss_bonnet(f: TropicalPolynomial) -> GaussBonnetReport:
    """Complex total curvature against a_n * vol(CP^n) * chi, chi from Khovanskii's formula."""
    cls = classify(f)
    if not cls.non_singular:
        raise NotNonSingular("Gauss-Bonnet check needs a non-singular tropical polynomial")
    from .tropical import dual_subdivision

    n = f.n
    c = constants(n)
    vol = dual_subdivision(f).newton_volume
    chi_q = (-1) ** n * math.factorial(n + 1) * vol
    assert chi_q.denominator == 1
    chi = int(chi_q)
    r = len(hypersurface(f, cells=False).vertices)
    integral = complex_total_curvature(f).value
    formula = c["a_n"] * c["sigma_2n_plus_1"] / sphere_volume(1) * chi
    return GaussBonnetReport(
        euler_characteristic=chi,
        vertex_count=r,
        complex_total=integral,
        formula_value=formula,
        residual=abs(integral - formula) / max(1.0, abs(formula)),
        chi_matches_vertices=chi == (-1) ** n * r,
        constants=c,
    )
