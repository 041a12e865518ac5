"""Validated affine plane curve input."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from lnelab.errors import DegenerateInputError
from lnelab.exactmath.algorithms import squarefree_part
from lnelab.exactmath.poly import Poly

log = logging.getLogger(__name__)

PLANE = ("x", "y")


@dataclass(frozen=True)
class CurveInput:
    """The affine curve V(f) in C^2 with f squarefree and nonconstant.

    Build with :meth:`from_poly`, which replaces a non-squarefree input by its
    squarefree part (same zero set) and records that in ``was_reduced``.
    """

    f: Poly
    was_reduced: bool = False

    def __post_init__(self):
        if self.f.variables != PLANE:
            raise DegenerateInputError(f"curve must be a polynomial in (x, y), got {self.f.variables}")
        if self.f.is_constant():
            raise DegenerateInputError("a curve needs a nonconstant polynomial")

    @classmethod
    def from_poly(cls, f: Poly) -> "CurveInput":
        f = f.with_variables(PLANE)
        if not f or f.is_constant():
            raise DegenerateInputError("a curve needs a nonconstant polynomial")
        sq = squarefree_part(f)
        if sq.degree < f.degree:
            log.warning("input %s reduced to its squarefree part %s", f, sq)
            return cls(sq, True)
        return cls(f, False)

    @property
    def degree(self) -> int:
        return self.f.degree

    def __str__(self) -> str:
        return str(self.f)


def leading_form(f: Poly) -> Poly:
    """Top-degree homogeneous part of ``f``."""
    if f.is_constant():
        raise DegenerateInputError("leading form of a constant")
    return f.homogeneous_part(f.degree)
