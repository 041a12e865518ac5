"""Decision procedure for LNE affine plane curves."""

from lnelab.plane.curve import CurveInput, leading_form
from lnelab.plane.infinity import InfinityPoint, InfinityReport, infinity_analysis
from lnelab.plane.local import SingularPointRecord, local_structure, singular_points
from lnelab.plane.trace import general_position_trace
from lnelab.plane.verdict import (
    AllConditionsHold, InfinityFailure, LneVerdict, NonOrdinarySingularPoint, lne_verdict,
    singular_records,
)

__all__ = [
    "AllConditionsHold", "CurveInput", "InfinityFailure", "InfinityPoint", "InfinityReport",
    "LneVerdict", "NonOrdinarySingularPoint", "SingularPointRecord", "general_position_trace",
    "infinity_analysis", "leading_form", "lne_verdict", "local_structure", "singular_points",
    "singular_records",
]
