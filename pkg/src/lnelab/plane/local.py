"""Singular locus and local structure at singular points."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from lnelab.errors import NonIsolatedSolutionsError, PreconditionError, InconsistencyError
from lnelab.exactmath.algebraic import AlgebraicPointContext, algebraic_point_context
from lnelab.exactmath.algorithms import binary_form_distinct_roots, binary_form_squarefree
from lnelab.exactmath.numberfield import NFElement
from lnelab.exactmath.poly import Poly
from lnelab.plane.curve import CurveInput


@dataclass(frozen=True)
class SingularPointRecord:
    """Local data at a singular point.

    ``tangent_cone[k]`` is the coefficient of x^(m-k) y^k of the lowest
    homogeneous part of f translated to the point, as an element of the
    point's number field. ``branch_count`` is exact when ``ordinary``;
    otherwise it counts distinct tangent lines and is only a lower bound.
    """

    point: AlgebraicPointContext
    multiplicity: int
    tangent_cone: tuple[NFElement, ...]
    ordinary: bool
    branch_count: int

    @property
    def branch_count_is_lower_bound(self) -> bool:
        return not self.ordinary

    def cone_terms(self) -> list[tuple[int, int, Poly]]:
        """Nonzero cone coefficients as (power of x, power of y, Poly in t)."""
        m = self.multiplicity
        return [(m - k, k, Poly.univariate(c.coeffs, "t"))
                for k, c in enumerate(self.tangent_cone) if c]

    def cone_str(self) -> str:
        parts = []
        for px, py, c in self.cone_terms():
            mono = "*".join(s for s in (
                "" if px == 0 else ("x" if px == 1 else f"x^{px}"),
                "" if py == 0 else ("y" if py == 1 else f"y^{py}")) if s)
            if c.is_constant():
                coef = str(c)
                parts.append(f"{coef}*{mono}" if coef not in ("1", "-1") else ("-" if coef == "-1" else "") + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def numeric_cone(self) -> list[complex]:
        a = self.point.alpha
        return [c.numeric(a) for c in self.tangent_cone]

    def describe(self) -> dict:
        out = {
            "point": self.point.describe(),
            "multiplicity": self.multiplicity,
            "tangent_cone": self.cone_str(),
            "ordinary": self.ordinary,
            "branch_count": self.branch_count,
        }
        if not self.ordinary:
            out["branch_count_note"] = "lower bound (distinct tangent lines)"
        return out


def singular_points(c: CurveInput, shear_seed: int = 0) -> list[AlgebraicPointContext]:
    """Affine solutions of f = f_x = f_y = 0, ordered by x-box midpoint."""
    f = c.f
    try:
        return algebraic_point_context([f, f.derivative("x"), f.derivative("y")], shear_seed)
    except NonIsolatedSolutionsError as exc:
        raise InconsistencyError(f"squarefree curve with non-isolated singular locus: {exc}") from exc


def translated_homogeneous_parts(f: Poly, a: NFElement, b: NFElement):
    """Yield (k, [coefficients of x^(k-l) y^l for l = 0..k]) of f(x+a, y+b)."""
    d = f.degree
    K = a.field
    apow = [K.one()]
    bpow = [K.one()]
    for _ in range(d):
        apow.append(apow[-1] * a)
        bpow.append(bpow[-1] * b)
    terms = list(f.terms.items())
    for k in range(d + 1):
        form = []
        for l in range(k + 1):
            px, py = k - l, l
            acc = K.zero()
            for (i, j), cf in terms:
                if i >= px and j >= py:
                    acc = acc + apow[i - px] * bpow[j - py] * (cf * comb(i, px) * comb(j, py))
            form.append(acc)
        yield k, form


def local_structure(c: CurveInput, p: AlgebraicPointContext) -> SingularPointRecord:
    """Multiplicity and tangent cone of the curve at ``p``; ordinary iff the cone is squarefree."""
    a, b = p.coordinates
    for k, form in translated_homogeneous_parts(c.f, a, b):
        if any(form):
            m = k
            break
    else:
        raise InconsistencyError("translated polynomial vanished identically")
    if m == 0:
        raise PreconditionError("point does not lie on the curve")
    if m == 1:
        raise PreconditionError("point is a smooth point of the curve")
    cone = tuple(form)
    ordinary = binary_form_squarefree(list(cone))
    branches = m if ordinary else binary_form_distinct_roots(list(cone))
    return SingularPointRecord(p, m, cone, ordinary, branches)
