"""
Patchworking a line and a conic
===============================

A signed tropical polynomial picks out, orthant by orthant, which pieces of
the tropical curve survive in the real picture. SVGs land in demos/output/.
"""
from pathlib import Path

from tropcurv import classify, dual_subdivision, hypersurface, parse_tropical, real_part
from tropcurv import fixtures
from tropcurv.patchwork import SignDistribution, orthant_label
from tropcurv.render import render_curve, render_real_part, render_subdivision

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

# the tropical line max(0, x1, x2): a single vertex at the origin, three rays
line = parse_tropical("0 + x1 + x2")
V = hypersurface(line)
print("line vertices:", [tuple(map(str, v.position)) for v in V.vertices])
print("line rays:", [e.rays[0] for e in V.edges])

# all signs "+": the positive quadrant stays empty
plus = SignDistribution.constant(line.exponents)
rp = real_part(V, plus)
for z in rp.nonempty_orthants():
    print(f"  quadrant {orthant_label(z)}: edges {sorted(rp.edges[z])}")

# %%
# The bundled conic uses the lift -(i^2 + ij + j^2), which cuts the doubled
# triangle into four unit triangles.
conic = fixtures.conic()
sub = dual_subdivision(conic)
print("\nconic cells:", [c.vertices for c in sub.maximal_cells])
print("classification:", classify(conic).to_dict())

signs = fixtures.harnack_signs(conic.exponents)
Vc = hypersurface(conic)
(out / "conic_subdivision.svg").write_text(render_subdivision(conic, signs))
(out / "conic_curve.svg").write_text(render_curve(Vc))
(out / "conic_real.svg").write_text(render_real_part(Vc, signs))
print("wrote", sorted(p.name for p in out.glob("conic_*.svg")))
