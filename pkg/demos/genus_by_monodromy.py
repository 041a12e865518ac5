"""Genus two ways: the plane-curve formula and the monodromy of the y-sheets.

For an irreducible curve with only ordinary singularities the genus is
(d-1)(d-2)/2 minus m(m-1)/2 per singular point. Independently, walking x around
each branch value permutes the d roots in y. Riemann-Hurwitz turns the cycle
structure of those permutations into an Euler characteristic, and the orbits
count the irreducible components.

Run with:  python3 demos/genus_by_monodromy.py
"""

from lnelab.cli.parser import parse_curve_input
from lnelab.invariants import compute_dsgm, dsgm_equivalent, monodromy_genus
from lnelab.plane import CurveInput, lne_verdict


def curve(text):
    return CurveInput.from_poly(parse_curve_input(text).expanded)


def dsgm(c):
    v = lne_verdict(c)
    return compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)


for text in ("x^3 + y^3 - 1", "x^3 + y^3 - x*y", "x^4 + y^4 - 1", "x*y*(x + y - 1)"):
    c = curve(text)
    m = monodromy_genus(c)
    line = f"{text:18s} sheets {m.sheet_count}, branch values {len(m.branch_x_values)}, " \
           f"components {m.num_components}, genera {list(m.genus_per_component)}"
    if m.num_components == 1:
        line += f", DSGM {dsgm(c)}"
    print(line)

a, b = dsgm(curve("x^3 + y^3 - 1")), dsgm(curve("x^3 + y^3 - x*y"))
print(f"\nFermat cubic {a} and folium {b} are bi-Lipschitz equivalent: {dsgm_equivalent(a, b)}")
