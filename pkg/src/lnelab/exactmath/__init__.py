"""Exact rational polynomials, gcds, resultants and algebraic points."""

from lnelab.exactmath.algebraic import AlgebraicPointContext, Box, algebraic_point_context, isolate_roots
from lnelab.exactmath.algorithms import (
    divexact, is_squarefree, poly_gcd, resultant_eliminate, squarefree_part,
)
from lnelab.exactmath.numberfield import NFElement, NumberField
from lnelab.exactmath.poly import Poly

__all__ = [
    "AlgebraicPointContext", "Box", "NFElement", "NumberField", "Poly",
    "algebraic_point_context", "divexact", "is_squarefree", "isolate_roots",
    "poly_gcd", "resultant_eliminate", "squarefree_part",
]
