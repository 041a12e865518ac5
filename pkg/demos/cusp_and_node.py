"""A cusp is not LNE, a node is.

Both y^2 = x^3 and xy = 0 have a double point at the origin. The node's tangent
cone xy splits into two distinct lines, so the germ is two transverse smooth
discs. The cusp's cone y^2 is a doubled line: the two conjugate points
(s, +-s^(3/2)) are 2 s^(3/2) apart in C^2, yet any path between them inside the
curve must pass near the origin, a detour of length about 2s. The ratio blows up
like s^(-1/2).

Run with:  python3 demos/cusp_and_node.py
"""

import math

from lnelab.cli.parser import parse_curve_input
from lnelab.plane import CurveInput, lne_verdict
from lnelab.probe import empirical_lne_constant, hint_from_verdict, sample_curve, witness_series

cusp = CurveInput.from_poly(parse_curve_input("y^2 - x^3").expanded)
node = CurveInput.from_poly(parse_curve_input("x*y").expanded)

for c in (cusp, node):
    v = lne_verdict(c)
    for rec in v.singular:
        px, py = rec.point.numeric()
        print(f"{c.f}: point ({px.real:.3g}, {py.real:.3g}), multiplicity {rec.multiplicity}, "
              f"cone {rec.cone_str()}, ordinary {rec.ordinary}")
    print(f"  LNE = {v.is_lne}")

rep = witness_series(cusp, hint_from_verdict(lne_verdict(cusp)))
print("\ncusp pair ratios")
for s, ratio in rep.witness_series:
    print(f"  s = {s:.4f}   ratio = {ratio:8.3f}   s^(-1/2) = {s ** -0.5:8.3f}")
print(f"  fitted exponent {rep.fitted_exponent:.3f} (expected -1/2)")

cloud = sample_curve(node, 1.0, 0.02, special_points=[(0j, 0j)])
L = empirical_lne_constant(cloud).empirical_L
print(f"\nnode: empirical LNE constant {L:.4f}, sqrt(2) = {math.sqrt(2):.4f}")
