"""Points at infinity from the leading binary form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lnelab.exactmath import dense
from lnelab.exactmath.algebraic import irreducible_factors, isolate_roots
from lnelab.exactmath.algorithms import is_squarefree
from lnelab.exactmath.poly import Poly
from lnelab.plane.curve import CurveInput, leading_form


@dataclass(frozen=True)
class InfinityPoint:
    """A direction [a:b] with f_d(a, b) = 0.

    ``exact`` holds the rational representative when the direction is
    rational; otherwise ``defining_poly`` (in s, for directions [s:1]) and
    the numeric ``direction`` identify it.
    """

    direction: tuple[complex, complex]
    multiplicity: int
    exact: tuple[Fraction, Fraction] | None
    defining_poly: str

    def label(self) -> str:
        if self.exact is not None:
            a, b = self.exact
            return f"[{_q(a)}:{_q(b)}]"
        a, _ = self.direction
        return f"[{a.real:.6g}{a.imag:+.6g}i:1] (root of {self.defining_poly})"

    def describe(self) -> dict:
        return {
            "direction": self.label(),
            "multiplicity": self.multiplicity,
            "approx": [[round(z.real, 12), round(z.imag, 12)] for z in self.direction],
        }


def _q(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class InfinityReport:
    degree: int
    points_at_infinity: tuple[InfinityPoint, ...]
    count_distinct: int
    condition_ii_holds: bool

    def witnesses(self) -> list[InfinityPoint]:
        return [p for p in self.points_at_infinity if p.multiplicity >= 2]

    def describe(self) -> dict:
        return {
            "degree": self.degree,
            "count_distinct": self.count_distinct,
            "condition_ii_holds": self.condition_ii_holds,
            "points": [p.describe() for p in self.points_at_infinity],
        }


def infinity_analysis(c: CurveInput) -> InfinityReport:
    """Distinct points at infinity with their multiplicities in the leading form."""
    lf = leading_form(c.f)
    d = lf.degree
    # lf(x, y) = y^e * q(x, y) with q(1, 0) != 0; q(s, 1) has degree d - e
    e = min(exps[1] for exps in lf.terms)
    q = [Fraction(0)] * (d - e + 1)
    for (i, j), cf in lf.terms.items():
        q[i] = cf
    points: list[InfinityPoint] = []
    if e:
        points.append(InfinityPoint((1 + 0j, 0j), e, (Fraction(1), Fraction(0)), "y"))
    for mult, part in enumerate(dense.squarefree_decomposition(q), start=1):
        if len(part) <= 1:
            continue
        for fac in irreducible_factors(part):
            name = str(Poly.univariate(fac, "t").primitive()).replace("t", "s")
            if len(fac) == 2:
                r = -fac[0] / fac[1]
                points.append(InfinityPoint((complex(float(r)), 1 + 0j), mult, (r, Fraction(1)), name))
            else:
                for box in isolate_roots(fac):
                    points.append(InfinityPoint((box.midpoint, 1 + 0j), mult, None, name))
    points.sort(key=lambda p: (-p.multiplicity, p.direction[1].real == 0 and 0 or 1,
                               p.direction[0].real, p.direction[0].imag))
    total = sum(p.multiplicity for p in points)
    if total != d:
        raise AssertionError(f"multiplicities sum to {total}, expected {d}")
    ok = is_squarefree(lf) if d > 1 else True
    return InfinityReport(d, tuple(points), len(points), ok)
