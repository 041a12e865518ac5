"""General position of a projective curve and a line, and the affine trace."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from lnelab.errors import ComponentAtInfinityError, DegenerateInputError, UsageError
from lnelab.exactmath.algorithms import binary_form_squarefree, divide
from lnelab.exactmath.poly import Poly
from lnelab.plane.curve import CurveInput

PROJECTIVE = ("x", "y", "z")


def _linear_coeffs(H: Poly) -> tuple[Fraction, Fraction, Fraction]:
    if not H or H.degree != 1 or not H.is_homogeneous():
        raise UsageError(f"line must be a nonzero linear form in (x, y, z), got {H}")
    return tuple(H.terms.get(e, Fraction(0)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def _kernel_basis(h):
    i = next(k for k in range(3) if h[k])
    basis = []
    for j in range(3):
        if j == i:
            continue
        v = [Fraction(0)] * 3
        v[j] = Fraction(1)
        v[i] = -h[j] / h[i]
        basis.append(v)
    return basis


def restricted_form(F: Poly, H: Poly) -> list[Fraction]:
    """F(s*P + t*Q) for a basis P, Q of the line H = 0, as a binary form."""
    P, Q = _kernel_basis(_linear_coeffs(H))
    s = Poly.var("x", ("x", "y"))
    t = Poly.var("y", ("x", "y"))
    g = F.substitute({v: s * P[k] + t * Q[k] for k, v in enumerate(PROJECTIVE)}, ("x", "y"))
    m = F.degree
    form = [Fraction(0)] * (m + 1)
    for (i, j), c in g.terms.items():
        form[j] = c
    return form


def _inverse3(M):
    n = 3
    A = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [a / p for a in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [row[n:] for row in A]


def _det3(M):
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def coordinate_changes(H: Poly):
    """Rational invertible 3x3 matrices whose last row is H.

    The first two rows run over pairs of standard basis vectors, then over
    small integer combinations, so every index yields a valid change.
    """
    h = list(_linear_coeffs(H))
    units = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    for a, b in combinations(range(3), 2):
        M = [units[a], units[b], h]
        if _det3(M):
            yield M
    k = 1
    while True:
        for a, b in combinations(range(3), 2):
            r1 = [u + k * w for u, w in zip(units[a], units[b])]
            r2 = [u - k * w for u, w in zip(units[b], units[3 - a - b])]
            M = [r1, r2, h]
            if _det3(M):
                yield M
        k += 1


def general_position_trace(F: Poly, H: Poly, choice: int = 0) -> tuple[bool, CurveInput | None]:
    """Decide whether H meets V(F) only at smooth points, transversally.

    That happens exactly when F restricted to the line H = 0 is a squarefree
    binary form of degree deg F. When it does, the curve is moved so that H
    becomes z (using the ``choice``-th admissible coordinate change) and
    dehomogenized at z = 1.
    """
    F = F.with_variables(PROJECTIVE)
    H = H.with_variables(PROJECTIVE)
    if not F or F.is_constant() or not F.is_homogeneous():
        raise DegenerateInputError("projective curve must be a nonconstant homogeneous polynomial")
    _, r = divide(F, H)
    if not r:
        raise ComponentAtInfinityError(f"the line {H} is a component of {F}")
    gp = binary_form_squarefree(restricted_form(F, H))
    if not gp:
        return False, None
    changes = coordinate_changes(H)
    for _ in range(choice):
        next(changes)
    Minv = _inverse3(next(changes))
    new = [Poly.var(v, PROJECTIVE) for v in PROJECTIVE]
    image = {v: sum((new[j] * Minv[k][j] for j in range(3)), Poly({}, PROJECTIVE))
             for k, v in enumerate(PROJECTIVE)}
    moved = F.substitute(image)
    affine = moved.substitute({"z": 1}).with_variables(("x", "y"))
    return True, CurveInput.from_poly(affine)
