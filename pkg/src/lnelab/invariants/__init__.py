"""Complete Lipschitz invariant of LNE plane curves and genus by monodromy."""

from lnelab.invariants.dsgm import DsgmInvariant, compute_dsgm, dsgm_equivalent, formula_genus
from lnelab.invariants.monodromy import MonodromyResult, monodromy_genus

__all__ = [
    "DsgmInvariant", "MonodromyResult", "compute_dsgm", "dsgm_equivalent", "formula_genus",
    "monodromy_genus",
]
