"""Numerical inner/outer distance probe of plane curves."""

from lnelab.probe.estimate import PairPolicy, ProbeReport, empirical_lne_constant, scaling_exponent
from lnelab.probe.sampling import SampleCloud, build_graph, sample_curve
from lnelab.probe.witness import WitnessHint, hint_from_verdict, witness_pair, witness_series

__all__ = [
    "PairPolicy", "ProbeReport", "SampleCloud", "WitnessHint", "build_graph",
    "empirical_lne_constant", "hint_from_verdict", "sample_curve", "scaling_exponent",
    "witness_pair", "witness_series",
]
