"""
Real amoebas approaching the tropical limit
===========================================

For small t the real curve F_t = sum sign * t^(-u) * x^a, drawn in log_t
coordinates, hugs the tropical curve, and its total curvature tends to the
polyhedral value. How fast depends on the signs.
"""
import math
from pathlib import Path

from tropcurv import fixtures
from tropcurv.amoeba import amoeba_total_curvature, convergence_experiment, evaluate_family, trace_real_curve
from tropcurv.render import render_amoeba

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

t_list = [0.1, 0.05, 0.01, 0.001]

conic = fixtures.conic()
harnack = fixtures.harnack_signs(conic.exponents)
table = convergence_experiment(conic, t_list, harnack)
print("conic, Harnack signs (target 4 pi)")
print(table.to_csv())

# %%
# With every sign "+" the curve has ovals that only flatten out slowly.
constant = {a: 1 for a in conic.exponents}
print("conic, constant signs")
print(convergence_experiment(conic, t_list, constant).to_csv())

# %%
# One quadrant at a time: the line's (-,-) branch turns by pi/2.
tc = trace_real_curve(evaluate_family(fixtures.line(), 0.05), quadrants=[(1, 1)])
print(f"line, quadrant --: {amoeba_total_curvature(tc) / math.pi:.4f} pi")

tc = trace_real_curve(evaluate_family(conic, 0.05, constant))
(out / "conic_amoeba.svg").write_text(render_amoeba(tc))
print("wrote", out / "conic_amoeba.svg")
