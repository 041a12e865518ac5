"""The DSGM invariant of an irreducible LNE plane curve and its comparison."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from lnelab.errors import InconsistencyError, PreconditionError
from lnelab.plane.curve import CurveInput
from lnelab.plane.infinity import InfinityReport
from lnelab.plane.local import SingularPointRecord
from lnelab.plane.verdict import LneVerdict


@dataclass(frozen=True)
class DsgmInvariant:
    """(degree; number of singular points; genus; multiset of branch counts).

    ``points`` carries approximate coordinates for display only and takes no
    part in equality or comparison.
    """

    degree: int
    num_singular: int
    genus: int
    singular_data: tuple[int, ...]
    points: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "singular_data", tuple(sorted(self.singular_data)))
        if self.genus < 0:
            raise InconsistencyError(f"negative genus {self.genus}")
        if len(self.singular_data) != self.num_singular:
            raise ValueError("singular_data must have one entry per singular point")

    def __str__(self) -> str:
        data = "{" + ", ".join(map(str, self.singular_data)) + "}" if self.singular_data else "{}"
        return f"({self.degree}; {self.num_singular}; {self.genus}; {data})"

    def describe(self) -> dict:
        return {
            "degree": self.degree,
            "num_singular": self.num_singular,
            "genus": self.genus,
            "singular_data": list(self.singular_data),
            "points": [list(p) for p in self.points],
            "tuple": str(self),
        }


def formula_genus(degree: int, branch_counts) -> int:
    """Genus of an irreducible plane curve whose singular points are all ordinary."""
    return (degree - 1) * (degree - 2) // 2 - sum(m * (m - 1) // 2 for m in branch_counts)


def compute_dsgm(c: CurveInput, v: LneVerdict, records: list[SingularPointRecord],
                 inf: InfinityReport, irreducible: bool) -> DsgmInvariant:
    if not v.is_lne:
        raise PreconditionError("the DSGM invariant is defined for LNE curves only")
    if not irreducible:
        raise PreconditionError("the DSGM invariant is defined for irreducible curves only")
    if inf.degree != c.degree:
        raise InconsistencyError("infinity report belongs to a different curve")
    counts = [r.branch_count for r in records]
    g = formula_genus(c.degree, counts)
    if g < 0:
        raise InconsistencyError(f"formula genus {g} < 0: the curve is not irreducible")
    pts = tuple(tuple(round(v, 9) for z in r.point.numeric() for v in (z.real, z.imag)) for r in records)
    return DsgmInvariant(c.degree, len(records), g, tuple(counts), pts)


def dsgm_equivalent(a: DsgmInvariant, b: DsgmInvariant) -> bool:
    return (a.degree == b.degree and a.num_singular == b.num_singular and a.genus == b.genus
            and Counter(a.singular_data) == Counter(b.singular_data))
