"""The LNE decision for affine plane curves, with failure certificates.

A squarefree plane curve is LNE exactly when its leading form is squarefree
(deg f distinct points at infinity) and each singular point is ordinary.
Connectivity needs no separate test: two components would meet somewhere in
the projective plane, and not at infinity since a shared direction would
repeat a root of the leading form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from lnelab.plane.curve import CurveInput
from lnelab.plane.infinity import InfinityPoint, InfinityReport, infinity_analysis
from lnelab.plane.local import SingularPointRecord, local_structure, singular_points

CONNECTIVITY_NOTE = "implied (plane Bezout)"


@dataclass(frozen=True)
class AllConditionsHold:
    kind = "AllConditionsHold"

    def describe(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class NonOrdinarySingularPoint:
    record: SingularPointRecord
    kind = "NonOrdinarySingularPoint"

    def describe(self) -> dict:
        return {"kind": self.kind, "witness": self.record.describe()}


@dataclass(frozen=True)
class InfinityFailure:
    report: InfinityReport
    witness: InfinityPoint
    kind = "InfinityFailure"

    def describe(self) -> dict:
        return {"kind": self.kind, "witness": self.witness.describe()}


Certificate = AllConditionsHold | NonOrdinarySingularPoint | InfinityFailure


@dataclass(frozen=True)
class LneVerdict:
    is_lne: bool
    certificate: Certificate
    reduced_input: bool
    curve: CurveInput = field(repr=False)
    infinity: InfinityReport | None = None
    singular: tuple[SingularPointRecord, ...] = ()
    failures: tuple = ()

    def __post_init__(self):
        if self.is_lne != isinstance(self.certificate, AllConditionsHold):
            raise AssertionError("verdict and certificate disagree")

    def describe(self) -> dict:
        out = {
            "is_lne": self.is_lne,
            "certificate": self.certificate.describe(),
            "reduced_input": self.reduced_input,
            "curve": str(self.curve.f),
            "degree": self.curve.degree,
            "connectivity": CONNECTIVITY_NOTE,
            "singular_points": [r.describe() for r in self.singular],
            "failures": [f.describe() for f in self.failures],
        }
        if self.infinity is not None:
            out["infinity"] = self.infinity.describe()
        return out


def singular_records(c: CurveInput, shear_seed: int = 0) -> list[SingularPointRecord]:
    """Local data at every singular point, ordered by the numeric x-coordinate."""
    records = [local_structure(c, p) for p in singular_points(c, shear_seed)]
    records.sort(key=lambda r: _xkey(r.point.numeric()))
    return records


def _xkey(coords):
    x, y = coords
    return (round(x.real, 9), round(x.imag, 9), round(y.real, 9), round(y.imag, 9))


def lne_verdict(c: CurveInput, shear_seed: int = 0) -> LneVerdict:
    """Decide LNE; the certificate is the first failure in report order.

    Report order puts non-ordinary singular points (by x-coordinate) before
    infinity failures, and ``failures`` lists every violated condition.
    """
    inf = infinity_analysis(c)
    if c.degree == 1:
        return LneVerdict(True, AllConditionsHold(), c.was_reduced, c, inf, ())
    records = tuple(singular_records(c, shear_seed))
    failures: list = [NonOrdinarySingularPoint(r) for r in records if not r.ordinary]
    failures += [InfinityFailure(inf, w) for w in inf.witnesses()]
    if failures:
        return LneVerdict(False, failures[0], c.was_reduced, c, inf, records, tuple(failures))
    return LneVerdict(True, AllConditionsHold(), c.was_reduced, c, inf, records)
