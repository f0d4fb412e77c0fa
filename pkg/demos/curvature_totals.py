"""
Polyhedral and complex total curvature
======================================

Each vertex of a real tropical curve carries a curvature cone. Summing
their angles gives a polyhedral total that can be set against the complex
total curvature, which only depends on the Newton polytope.
"""
import math

from tropcurv import (
    complex_total_curvature,
    gauss_bonnet,
    polyhedral_total_curvature,
    verify_inequality,
)
from tropcurv import fixtures

for name in ("line", "conic", "cubic"):
    f = fixtures.ALL[name]()
    poly = polyhedral_total_curvature(f, fixtures.harnack_signs(f.exponents))
    cplx = complex_total_curvature(f)
    print(f"{name:6s} polyhedral = {poly.value / math.pi:6.3f} pi   complex = {cplx.value / math.pi:7.3f} pi")

# %%
# Changing the signs moves the real curve around but, for a non-singular
# curve, never changes the total.
import random

rng = random.Random(0)
cubic = fixtures.cubic()
totals = {
    round(polyhedral_total_curvature(cubic, {a: rng.choice((1, -1)) for a in cubic.exponents}).value, 12)
    for _ in range(20)
}
print("\ncubic totals over 20 random sign choices:", [t / math.pi for t in totals], "(x pi)")

# %%
# A singular example: one triangle of normalized volume 3 whose edges are
# independent mod 2. The real side falls strictly short of the complex one.
rep = verify_inequality(fixtures.witness())
print(f"\nwitness  L = {rep.lhs / math.pi:.3f} pi  <  R = {rep.rhs / math.pi:.3f} pi   strict: {rep.details['strict']}")

# %%
# For a surface, per-vertex angles are spherical areas on S^2.
surf = fixtures.surface_cubic()
rep = verify_inequality(surf)
print(f"surface cubic  L = {rep.lhs:.6f}  R = {rep.rhs:.6f}")

for f in (fixtures.cubic(), surf):
    gb = gauss_bonnet(f)
    print(f"Gauss-Bonnet n={f.n}: chi = {gb.euler_characteristic}, integral = {gb.complex_total:.6f}, "
          f"residual = {gb.residual:.1e}")
