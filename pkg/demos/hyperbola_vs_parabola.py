"""Two projectively identical conics, one LNE affine trace and one not.

In the projective plane, yz - x^2 and xy - z^2 differ only by swapping x and z.
Remove the line z = 0 and they become the parabola y = x^2 and the hyperbola
xy = 1. The hyperbola keeps two distinct points at infinity. The parabola's two
points collapse into [0:1], where the line at infinity is tangent to it.

Run with:  python3 demos/hyperbola_vs_parabola.py
"""

from lnelab.cli.parser import parse_curve_input
from lnelab.plane import CurveInput, general_position_trace, lne_verdict
from lnelab.probe import hint_from_verdict, witness_series


def affine(text):
    return CurveInput.from_poly(parse_curve_input(text).expanded)


def projective(text):
    return parse_curve_input(text, "projective").expanded


z = projective("z")
for name, F in (("hyperbola", projective("x*y - z^2")), ("parabola", projective("y*z - x^2"))):
    gp, trace = general_position_trace(F, z)
    print(f"{name}: {F}  meets z = 0 in general position: {gp}")

for text in ("x*y - 1", "y - x^2"):
    c = affine(text)
    v = lne_verdict(c)
    print(f"\n{text}: LNE = {v.is_lne}, certificate {v.certificate.kind}")
    for p in v.infinity.points_at_infinity:
        print(f"  at infinity {p.label()} with multiplicity {p.multiplicity}")

    # Inner/outer ratio of a pair of points far out along the witness direction.
    rep = witness_series(c, hint_from_verdict(v))
    for R, ratio in rep.witness_series:
        print(f"  R = {R:6.1f}   d_inner / d_outer = {ratio:8.3f}")
    print(f"  fitted growth exponent {rep.fitted_exponent:.3f}")
