"""
Curvature cones, exact angles and Monte Carlo
=============================================

In the plane and in space cone angles are computed exactly. In higher
dimension they are sampled, with a reproducible seed per vertex and orthant.
"""
import math

import numpy as np

from tropcurv import AngleConfig, Cone, LatticeSimplex, solid_angle
from tropcurv.curvature import curvature_cone, partition_check, per_vertex_total

octant = Cone.from_generators(np.eye(3, dtype=int).tolist())
print("octant, exact:", solid_angle(octant).value, " 4pi/8 =", math.pi / 2)
for samples in (10_000, 100_000, 1_000_000):
    m = solid_angle(octant, AngleConfig(samples=samples, seed=1, method="monte-carlo"))
    print(f"  MC {samples:>9,d}: {m.value:.5f} +- {m.stderr:.5f}")

# %%
# A unit tetrahedron with signs (-, +, +, -): the cone is spanned by the
# four edges running from a "-" vertex to a "+" vertex.
tet = LatticeSimplex(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
cone = curvature_cone(tet, (-1, 1, 1, -1))
print("\ncone generators:", cone.generators)
print("facets:", [str(h) for h in cone.facets])

# summed over the 8 symmetric copies, every sign choice gives 2 pi
for signs in [(1, 1, 1, 1), (-1, 1, 1, -1), (-1, 1, 1, 1)]:
    total = per_vertex_total(tet, dict(zip(tet.vertices, signs)))
    print(f"signs {signs}: {total.value / math.pi:.12f} pi ({total.method})")

# %%
# The cones with "-" at a fixed vertex tile half of space.
rep = partition_check(tet, samples=200_000, seed=3)
print(f"\npartition: misses {rep.misses}, overlaps {rep.overlaps}")
for row in rep.cones:
    print(f"  {row['signs']}: sampled {row['fraction']:.4f}, exact {row['expected_fraction']:.4f}")
