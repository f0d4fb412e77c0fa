import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.spatial import ConvexHull
from scipy.special import gamma

from gen import random_simplex
from tropcurv.core_geometry import (
    AngleConfig,
    Cone,
    HalfSpace,
    LatticeSimplex,
    a_constant,
    cone_facets,
    is_elementary,
    is_primitive,
    polytope_volume,
    simplex_lattice_volume,
    solid_angle,
    sphere_volume,
)
from tropcurv.errors import DegenerateSimplex, InvalidSampleCount, MissingFacets, ZeroGenerator


def gamma_sphere(m):
    return 2 * math.pi ** ((m + 1) / 2) / gamma((m + 1) / 2)


# --- constants -------------------------------------------------------------

@pytest.mark.parametrize("m,expected", [(0, 2.0), (1, 2 * math.pi), (2, 4 * math.pi), (3, 2 * math.pi**2)])
def test_sphere_volume_small(m, expected):
    assert sphere_volume(m) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("m", range(0, 16))
def test_sphere_volume_matches_gamma_formula(m):
    assert sphere_volume(m) == pytest.approx(gamma_sphere(m), rel=1e-13)


@pytest.mark.parametrize("n,expected", [(0, 1.0), (1, 2.0), (2, 8 / 3)])
def test_a_constant_examples(n, expected):
    assert a_constant(n) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("n", range(0, 7))
def test_a_constant_identity(n):
    assert abs(a_constant(n) * sphere_volume(2 * n + 1) - math.pi * sphere_volume(2 * n)) < 1e-12 * max(
        1.0, math.pi * sphere_volume(2 * n)
    )


def test_sigma4_sigma5_cross_check():
    assert sphere_volume(4) == pytest.approx(8 * math.pi**2 / 3, rel=1e-14)
    assert sphere_volume(5) == pytest.approx(math.pi**3, rel=1e-14)
    assert math.pi * sphere_volume(4) / sphere_volume(5) == pytest.approx(8 / 3, rel=1e-14)


# --- simplices -------------------------------------------------------------

@pytest.mark.parametrize(
    "verts,vol",
    [
        (((0, 0), (1, 0), (0, 1)), Fraction(1, 2)),
        (((0, 0), (1, 0), (0, 3)), Fraction(3, 2)),
        (((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)), Fraction(1, 6)),
    ],
)
def test_simplex_volume_examples(verts, vol):
    assert simplex_lattice_volume(LatticeSimplex(verts)) == vol


def test_degenerate_simplex_rejected():
    with pytest.raises(DegenerateSimplex):
        LatticeSimplex(((0, 0), (1, 1), (2, 2)))


@pytest.mark.parametrize(
    "verts,prim,elem",
    [
        (((0, 0), (1, 0), (0, 1)), True, True),
        (((0, 0), (1, 0), (0, 3)), False, True),
        (((0, 0), (2, 1), (1, 1)), True, True),
        (((0, 0), (2, 0), (0, 1)), False, False),
    ],
)
def test_primitive_and_elementary_examples(verts, prim, elem):
    s = LatticeSimplex(verts)
    assert is_primitive(s) is prim
    assert is_elementary(s) is elem


@given(st.integers(2, 4), st.integers(0, 10**6))
def test_elementary_independent_of_base(dim, seed):
    s = random_simplex(dim, random.Random(seed))
    answers = {is_elementary(s, base=b) for b in range(dim + 1)}
    assert len(answers) == 1


def test_primitive_implies_elementary_500():
    rng = random.Random(7)
    prim = 0
    for k in range(500):
        s = random_simplex(2 + k % 3, rng, box=2)
        if is_primitive(s):
            prim += 1
            assert is_elementary(s)
    assert prim > 20


@given(st.integers(2, 3), st.integers(0, 10**6))
def test_simplex_volume_matches_qhull(dim, seed):
    s = random_simplex(dim, random.Random(seed))
    assert float(s.volume) == pytest.approx(ConvexHull(np.asarray(s.vertices)).volume, rel=1e-9)


@given(st.integers(0, 10**6))
def test_polytope_volume_matches_qhull(seed):
    rng = random.Random(seed)
    pts = [(rng.randint(0, 5), rng.randint(0, 5), rng.randint(0, 5)) for _ in range(8)]
    try:
        hull = ConvexHull(np.asarray(pts, dtype=float))
    except Exception:
        return  # flat point set
    assert float(polytope_volume(pts)) == pytest.approx(hull.volume, rel=1e-9)


def test_facet_normals_are_inward():
    s = LatticeSimplex(((0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1)))
    for i, nv in enumerate(s.facet_normals):
        opposite = s.vertices[i]
        on_facet = s.vertices[(i + 1) % 4]
        assert sum(a * (b - c) for a, b, c in zip(nv, opposite, on_facet)) > 0
        assert math.gcd(*nv) == 1


# --- cones -----------------------------------------------------------------

def test_cone_facets_quadrant():
    assert set(cone_facets([(1, 0), (0, 1)])) == {HalfSpace((1, 0)), HalfSpace((0, 1))}


def test_cone_facets_second_example():
    facets = cone_facets([(-1, 0), (-1, 1)])
    assert set(facets) == {HalfSpace((0, 1)), HalfSpace((-1, -1))}
    # the boundary rays are the two generators
    for g in [(-1, 0), (-1, 1)]:
        assert any(h.normal[0] * g[0] + h.normal[1] * g[1] == 0 for h in facets)


def test_cone_facets_octant():
    assert set(cone_facets([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == {
        HalfSpace((1, 0, 0)),
        HalfSpace((0, 1, 0)),
        HalfSpace((0, 0, 1)),
    }


def test_zero_generator_rejected():
    with pytest.raises(ZeroGenerator):
        cone_facets([(0, 0), (1, 0)])


vec3 = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)).filter(any)


@given(st.lists(vec3, min_size=1, max_size=6))
def test_generators_satisfy_all_facets(gens):
    for h in cone_facets(gens):
        for g in gens:
            assert h.contains(g)


@given(st.lists(vec3, min_size=1, max_size=6))
def test_facets_describe_the_cone(gens):
    """Membership by facets agrees with an LP feasibility test on the generators."""
    from scipy.optimize import linprog

    cone = Cone.from_generators(gens, 3)
    G = np.asarray(gens, dtype=float).T
    rng = np.random.default_rng(0)
    for x in rng.standard_normal((40, 3)):
        slack = [float(np.dot(h.normal, x)) for h in cone.facets]
        if any(abs(v) < 1e-3 for v in slack):
            continue
        lp = linprog(np.zeros(len(gens)), A_eq=G, b_eq=x, bounds=(0, None), method="highs")
        assert (lp.status == 0) == all(v > 0 for v in slack)


def test_missing_facets():
    with pytest.raises(MissingFacets):
        solid_angle(Cone([(1, 0), (0, 1)], 2))


def test_invalid_sample_count():
    with pytest.raises(InvalidSampleCount):
        solid_angle(Cone.from_generators([(1, 0), (0, 1)]), AngleConfig(samples=0))


# --- solid angles ----------------------------------------------------------

def planar_oracle(g1, g2):
    u, v = np.asarray(g1, float), np.asarray(g2, float)
    return math.acos(np.clip(u @ v / np.linalg.norm(u) / np.linalg.norm(v), -1, 1))


def girard_oracle(cone):
    """Spherical polygon area = sum of interior angles - (k - 2) pi."""
    normals = [np.asarray(h.normal, float) for h in cone.facets]
    k = len(normals)
    total = 0.0
    for i, j in itertools.combinations(range(k), 2):
        ni, nj = normals[i], normals[j]
        ray = np.cross(ni, nj)
        if np.linalg.norm(ray) < 1e-12:
            continue
        for r in (ray, -ray):
            if all(n @ r >= -1e-9 for n in normals):
                cos = -(ni @ nj) / np.linalg.norm(ni) / np.linalg.norm(nj)
                total += math.acos(np.clip(cos, -1, 1))
    return total - (k - 2) * math.pi


def test_solid_angle_examples():
    q = solid_angle(Cone.from_generators([(1, 0), (0, 1)]))
    assert q.value == pytest.approx(math.pi / 2, abs=1e-15) and q.method == "exact-planar"
    w = solid_angle(Cone.from_generators([(-1, 0), (-1, 1)]))
    assert w.value == pytest.approx(math.pi / 4, abs=1e-15)
    o = solid_angle(Cone.from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert o.value == pytest.approx(math.pi / 2, abs=1e-14) and o.method == "exact-spherical"
    assert o.stderr == 0.0


def test_degenerate_cones():
    assert solid_angle(Cone.from_generators([(1, 0, 0), (0, 1, 0)], 3)).value == 0.0
    assert solid_angle(Cone.from_generators([], 3)).value == 0.0
    whole = Cone.from_generators([(1, 0), (0, 1), (-1, -1)])
    assert solid_angle(whole).value == pytest.approx(2 * math.pi)
    half = Cone.from_generators([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1)])
    assert solid_angle(half).value == pytest.approx(2 * math.pi)


vec2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(any)


@given(vec2, vec2)
def test_planar_angle_oracle(g1, g2):
    if g1[0] * g2[1] - g1[1] * g2[0] == 0:
        return
    m = solid_angle(Cone.from_generators([g1, g2]))
    assert m.value == pytest.approx(planar_oracle(g1, g2), abs=1e-12)


@given(st.lists(vec3, min_size=3, max_size=5))
def test_spherical_angle_matches_girard(gens):
    cone = Cone.from_generators(gens, 3)
    if cone.is_empty or not cone.facets or any(
        HalfSpace(tuple(-c for c in h.normal)) in cone.facets for h in cone.facets
    ):
        return
    from tropcurv.core_geometry import nullspace

    if nullspace([h.normal for h in cone.facets], 3):
        return  # wedge / half-space: not a polygon
    m = solid_angle(cone)
    assert m.value == pytest.approx(girard_oracle(cone), abs=1e-9)


@given(st.lists(vec3, min_size=3, max_size=4), st.permutations([0, 1, 2]),
       st.tuples(*[st.sampled_from([1, -1])] * 3))
def test_solid_angle_signed_permutation_invariance(gens, perm, signs):
    image = [tuple(signs[i] * g[perm[i]] for i in range(3)) for g in gens]
    a = solid_angle(Cone.from_generators(gens, 3)).value
    b = solid_angle(Cone.from_generators(image, 3)).value
    assert a == pytest.approx(b, abs=1e-9)


def test_standard_orthant_monte_carlo_n3():
    cone = Cone.from_generators([tuple(int(i == j) for j in range(4)) for i in range(4)], 4)
    m = solid_angle(cone, AngleConfig(samples=1_000_000, seed=3))
    assert m.method == "monte-carlo"
    assert abs(m.value - sphere_volume(3) / 16) < 4 * m.stderr


def test_monte_carlo_reproducible_and_seed_sensitive():
    cone = Cone.from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    cfg = AngleConfig(samples=50_000, seed=11, method="monte-carlo")
    a = solid_angle(cone, cfg)
    b = solid_angle(cone, AngleConfig(samples=50_000, seed=11, method="monte-carlo"))
    c = solid_angle(cone, AngleConfig(samples=50_000, seed=12, method="monte-carlo"))
    assert a.value == b.value and a.stderr == b.stderr
    assert a.value != c.value
    assert a.seed == 11 and a.samples == 50_000


def test_monte_carlo_against_independent_sampler():
    """Uniform sphere points from a rejection sampler in the cube, not Gaussians."""
    cone = Cone.from_generators([(1, 0, 0), (1, 1, 0), (0, 1, 1)])
    exact = solid_angle(cone).value
    rng = np.random.default_rng(5)
    pts = rng.uniform(-1, 1, (600_000, 3))
    pts = pts[np.linalg.norm(pts, axis=1) <= 1]
    inside = np.all(pts @ np.asarray([h.normal for h in cone.facets], float).T >= 0, axis=1)
    p = inside.mean()
    est = 4 * math.pi * p
    se = 4 * math.pi * math.sqrt(p * (1 - p) / len(pts))
    assert abs(est - exact) < 4 * se
