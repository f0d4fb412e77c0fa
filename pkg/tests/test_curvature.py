import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gen import random_elementary, random_nonsingular_curve, random_signs
from tropcurv import fixtures
from tropcurv.core_geometry import AngleConfig, sphere_volume
from tropcurv.curvature import (
    complex_total_curvature,
    constants,
    curvature_cone,
    gauss_bonnet,
    partition_check,
    per_vertex_total,
    polyhedral_total_curvature,
    real_total_curvature_nonsingular,
    verify_inequality,
    verify_vertex_sum,
    vertex_curvature,
)
from tropcurv.errors import NotElementary, NotGeneric, NotNonSingular
from tropcurv.core_geometry import solid_angle
from tropcurv.patchwork import SignDistribution, orthants
from tropcurv.tropical import TropicalPolynomial, monomial_shift

PI = math.pi
TRI = ((0, 0), (1, 0), (0, 1))
TET = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
PLUS = SignDistribution.constant(TRI)


def test_constants_block():
    c = constants(1)
    assert set(c) == {"n", "sigma_n", "sigma_2n", "sigma_2n_plus_1", "a_n"}
    assert c["sigma_n"] == pytest.approx(2 * PI) and c["a_n"] == 2


# --- cones and vertex curvature --------------------------------------------

def test_curvature_cone_examples():
    c = curvature_cone(TRI, (-1, 1, 1))
    assert set(c.generators) == {(1, 0), (0, 1)}
    assert solid_angle(c).value == pytest.approx(PI / 2)
    c = curvature_cone(TRI, (1, -1, 1))
    assert set(c.generators) == {(-1, 0), (-1, 1)}
    assert solid_angle(c).value == pytest.approx(PI / 4)
    c = curvature_cone(TRI, (1, 1, 1))
    assert c.is_empty and solid_angle(c).value == 0


def test_vertex_curvature_examples():
    assert vertex_curvature(TRI, PLUS, (1, 0)).value == pytest.approx(PI / 4)
    assert vertex_curvature(TRI, PLUS, (1, 1)).value == pytest.approx(PI / 2)
    assert vertex_curvature(TRI, PLUS, (0, 0)).value == 0


def test_per_vertex_total_line_triangle():
    m = per_vertex_total(TRI, PLUS)
    assert abs(m.value - PI) < 1e-12 and m.exact


def test_per_vertex_total_tetrahedron_every_sign():
    for signs in itertools.product((1, -1), repeat=4):
        m = per_vertex_total(TET, dict(zip(TET, signs)))
        assert abs(m.value - 2 * PI) < 1e-9


def test_per_vertex_total_tetrahedron_monte_carlo():
    cfg = AngleConfig(samples=100_000, seed=4, method="monte-carlo")
    m = per_vertex_total(TET, dict(zip(TET, (1, -1, 1, 1))), cfg)
    assert m.method == "monte-carlo"
    assert abs(m.value - 2 * PI) < 4 * m.stderr


def test_per_vertex_total_4d_monte_carlo():
    s = tuple(tuple(int(i == j) for j in range(4)) for i in range(-1, 4))
    cfg = AngleConfig(samples=100_000, seed=1)
    m = per_vertex_total(s, dict(zip(s, (1, 1, -1, 1, -1))), cfg)
    assert m.method == "monte-carlo"
    assert abs(m.value - sphere_volume(3) / 2) < 4 * m.stderr


def test_non_elementary_vertex_is_only_reported():
    s = ((0, 0), (2, 0), (0, 1))
    values = {per_vertex_total(s, dict(zip(s, sg))).value for sg in itertools.product((1, -1), repeat=3)}
    assert any(abs(v - PI) > 1e-6 for v in values)


@given(st.integers(0, 10**6))
def test_vertex_sum_random_elementary_triangles(seed):
    rng = random.Random(seed)
    s = random_elementary(2, rng, box=5)
    theta = random_signs(s.vertices, rng)
    assert abs(per_vertex_total(s, theta).value - PI) < 1e-9


@given(st.integers(0, 10**6))
def test_orthant_values_are_planar_angles(seed):
    """Oracle: each cone angle from arccos of the two boundary directions."""
    rng = random.Random(seed)
    s = random_elementary(2, rng, box=4)
    theta = SignDistribution(random_signs(s.vertices, rng))
    for z in orthants(2):
        c = curvature_cone(s, [theta[a] * (-1) ** ((z[0] * a[0] + z[1] * a[1]) & 1) for a in s.vertices])
        got = vertex_curvature(s, theta, z).value
        if c.is_empty:
            assert got == 0
            continue
        gens = [np.asarray(g, float) / np.linalg.norm(g) for g in c.generators]
        widest = max(math.acos(np.clip(u @ v, -1, 1)) for u, v in itertools.combinations(gens, 2))
        assert got == pytest.approx(widest, abs=1e-12)


# --- totals ----------------------------------------------------------------

def test_polyhedral_totals():
    assert polyhedral_total_curvature(fixtures.line(), PLUS).value == pytest.approx(PI, abs=1e-12)
    rep = polyhedral_total_curvature(fixtures.conic())
    assert rep.value == pytest.approx(4 * PI, abs=1e-12)
    assert rep.totals["polyhedral_real"] == rep.value
    assert sum(r["value"] for r in rep.per_vertex) == pytest.approx(rep.value, abs=1e-12)


def test_surface_cubic_total():
    rep = polyhedral_total_curvature(fixtures.surface_cubic())
    assert rep.exact
    assert abs(rep.value - 27 * 2 * PI) < 1e-8
    assert len(rep.per_vertex) == 27


def test_polyhedral_refuses_non_generic():
    from gen import dilated_points

    f = TropicalPolynomial({(i, j): -(i * i + j * j) for i, j in dilated_points(2)}, 2)
    with pytest.raises(NotGeneric):
        polyhedral_total_curvature(f)


@given(st.integers(0, 10**6))
def test_cor59_random_curves(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 6)
    f = random_nonsingular_curve(d, rng)
    values = {
        round(polyhedral_total_curvature(f, random_signs(f.exponents, rng)).value, 9) for _ in range(3)
    }
    assert len(values) == 1
    assert abs(values.pop() - d * d * PI) < 1e-8


@given(st.integers(0, 10**6))
def test_sign_flip_and_shift_invariance(seed):
    rng = random.Random(seed)
    f = random_nonsingular_curve(rng.randint(1, 3), rng)
    theta = random_signs(f.exponents, rng)
    base = polyhedral_total_curvature(f, theta).value
    flipped = {a: -s for a, s in theta.items()}
    assert polyhedral_total_curvature(f, flipped).value == base
    omega = (rng.randint(-2, 2), rng.randint(-2, 2))
    g = monomial_shift(f, omega, 1)
    theta_g = {(a[0] + omega[0], a[1] + omega[1]): s for a, s in theta.items()}
    assert polyhedral_total_curvature(g, theta_g).value == pytest.approx(base, abs=1e-12)


def test_complex_total_examples():
    assert complex_total_curvature(fixtures.line()).value == pytest.approx(-2 * PI, rel=1e-14)
    assert complex_total_curvature(fixtures.conic()).value == pytest.approx(-8 * PI, rel=1e-14)
    tet = TropicalPolynomial({a: 0 for a in TET}, 3)
    assert complex_total_curvature(tet).value == pytest.approx(4 * PI**2 / 3, rel=1e-14)


@pytest.mark.parametrize("name", ["line", "conic", "cubic", "surface_cubic"])
def test_complex_total_is_r_times_vertex_constant(name):
    f = fixtures.ALL[name]()
    n = f.n
    r = len(polyhedral_total_curvature(f).per_vertex)
    c = constants(n)
    expected = r * (-1) ** n * c["a_n"] * c["sigma_2n_plus_1"] / sphere_volume(1)
    assert complex_total_curvature(f).value == pytest.approx(expected, rel=1e-13)


def test_real_total_nonsingular():
    assert real_total_curvature_nonsingular(fixtures.line()).value == pytest.approx(PI)
    assert real_total_curvature_nonsingular(fixtures.conic()).value == pytest.approx(4 * PI)
    assert real_total_curvature_nonsingular(fixtures.surface_cubic()).value == pytest.approx(54 * PI)
    with pytest.raises(NotNonSingular):
        real_total_curvature_nonsingular(fixtures.witness())


# --- inequality ------------------------------------------------------------

def test_inequality_examples():
    line = verify_inequality(fixtures.line())
    assert line.lhs == pytest.approx(2 * PI) and line.rhs == pytest.approx(2 * PI) and line.details["equality"]
    conic = verify_inequality(fixtures.conic())
    assert conic.lhs == pytest.approx(8 * PI) and conic.rhs == pytest.approx(8 * PI)
    w = verify_inequality(fixtures.witness())
    assert w.lhs == pytest.approx(2 * PI) and w.rhs == pytest.approx(6 * PI)
    assert w.details["strict"] and w.passed


def test_inequality_non_elementary_is_reported_not_asserted():
    f = TropicalPolynomial({(0, 0): 0, (2, 0): 0, (0, 1): 0}, 2)
    rep = verify_inequality(f, {(0, 0): 1, (2, 0): 1, (0, 1): -1})
    assert not rep.details["asserted"]
    assert rep.passed


def test_vertex_sum_verifier():
    assert verify_vertex_sum(fixtures.cubic()).passed
    rep = verify_vertex_sum(fixtures.surface_cubic())
    assert rep.passed and rep.details["max_deviation"] < 1e-8


# --- partition -------------------------------------------------------------

def test_partition_unit_triangle():
    rep = partition_check(TRI, 100_000, 0)
    assert rep.passed and len(rep.cones) == 3
    fractions = sorted(c["fraction"] for c in rep.cones)
    assert fractions == pytest.approx([0.25, 0.25, 0.5], abs=0.01)
    assert sorted(c["expected_fraction"] for c in rep.cones) == pytest.approx([0.25, 0.25, 0.5])


def test_partition_unit_tetrahedron():
    rep = partition_check(TET, 100_000, 0)
    assert rep.passed and len(rep.cones) == 7 and rep.misses == 0 and rep.overlaps == 0


def test_partition_refuses_non_elementary():
    with pytest.raises(NotElementary):
        partition_check(((0, 0), (2, 0), (0, 1)))


def test_partition_hit_fractions_match_exact_angles():
    rng = random.Random(9)
    s = random_elementary(3, rng)
    rep = partition_check(s, 100_000, 3)
    for c in rep.cones:
        p = c["expected_fraction"]
        se = math.sqrt(p * (1 - p) / rep.samples)
        assert abs(c["fraction"] - p) < 4 * se + 1e-12


# --- Gauss-Bonnet ----------------------------------------------------------

def test_gauss_bonnet_examples():
    g = gauss_bonnet(fixtures.line())
    assert g.euler_characteristic == -1 and g.complex_total == pytest.approx(-2 * PI)
    g = gauss_bonnet(fixtures.cubic())
    assert g.euler_characteristic == -9 and g.complex_total == pytest.approx(-18 * PI)
    # genus formula: 2 - 2g - 3d with g = (d-1)(d-2)/2 for a smooth plane curve of degree 3
    assert g.euler_characteristic == 2 - 2 * 1 - 3 * 3
    tet = TropicalPolynomial({a: 0 for a in TET}, 3)
    g = gauss_bonnet(tet)
    assert g.euler_characteristic == 1 and g.complex_total == pytest.approx(4 * PI**2 / 3)
    assert g.passed


def test_gauss_bonnet_refuses_singular():
    with pytest.raises(NotNonSingular):
        gauss_bonnet(fixtures.witness())


def test_report_json_fields():
    d = polyhedral_total_curvature(fixtures.conic()).to_dict()
    for key in ("quantity", "value", "exact", "stderr", "seed", "constants"):
        assert key in d


def test_monte_carlo_streams_are_deterministic():
    f = fixtures.surface_cubic()
    cfg = AngleConfig(samples=2000, seed=5, method="monte-carlo")
    a = polyhedral_total_curvature(f, None, cfg)
    b = polyhedral_total_curvature(f, None, cfg)
    assert a.to_dict() == b.to_dict()
    assert not a.exact and a.seed == 5
