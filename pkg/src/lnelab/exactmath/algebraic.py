"""Exact representation of the isolated solutions of a polynomial system.

Each solution is carried by an :class:`AlgebraicPointContext`: an irreducible
rational polynomial m(t), a complex box with rational corners that contains
exactly one root alpha of m, and the point's coordinates written as
polynomials in alpha. Since m is irreducible, an expression vanishes at the
point iff its reduction modulo m is the zero polynomial.

Boxes are certified with Smith's inclusion theorem: if z_1..z_n approximate
the roots of a degree-n polynomial p with leading coefficient a, the disks
|z - z_i| <= n |p(z_i) / (a prod_{j != i} (z_i - z_j))| contain all roots,
and every connected component made of k disks holds exactly k roots. All
quantities in the test are evaluated in exact rational arithmetic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import mpmath
import sympy

from lnelab.errors import NonIsolatedSolutionsError, RetryExhaustedError, UsageError
from lnelab.exactmath import dense
from lnelab.exactmath.algorithms import poly_gcd, resultant_eliminate
from lnelab.exactmath.numberfield import NFElement, NumberField
from lnelab.exactmath.poly import Poly

DEFAULT_BOX_BITS = 20
SHEAR_BUDGET = 32


# -- complex rectangles ------------------------------------------------------

@dataclass(frozen=True)
class Box:
    """Closed complex rectangle [re_lo, re_hi] x [im_lo, im_hi] with rational corners."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction

    @classmethod
    def point(cls, value) -> "Box":
        if isinstance(value, Box):
            return value
        if isinstance(value, complex):
            re, im = Fraction(value.real), Fraction(value.imag)
        else:
            re, im = Fraction(value), Fraction(0)
        return cls(re, re, im, im)

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def midpoint(self) -> complex:
        return complex(float((self.re_lo + self.re_hi) / 2), float((self.im_lo + self.im_hi) / 2))

    def contains(self, z: complex | Fraction) -> bool:
        b = Box.point(z)
        return (self.re_lo <= b.re_lo and b.re_hi <= self.re_hi
                and self.im_lo <= b.im_lo and b.im_hi <= self.im_hi)

    def contains_zero(self) -> bool:
        return self.re_lo <= 0 <= self.re_hi and self.im_lo <= 0 <= self.im_hi

    def __add__(self, other):
        o = Box.point(other)
        return Box(self.re_lo + o.re_lo, self.re_hi + o.re_hi,
                   self.im_lo + o.im_lo, self.im_hi + o.im_hi)

    __radd__ = __add__

    def __neg__(self):
        return Box(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo)

    def __sub__(self, other):
        return self + (-Box.point(other))

    def __mul__(self, other):
        o = Box.point(other)
        rr = _imul(self.re_lo, self.re_hi, o.re_lo, o.re_hi)
        ii = _imul(self.im_lo, self.im_hi, o.im_lo, o.im_hi)
        ri = _imul(self.re_lo, self.re_hi, o.im_lo, o.im_hi)
        ir = _imul(self.im_lo, self.im_hi, o.re_lo, o.re_hi)
        return Box(rr[0] - ii[1], rr[1] - ii[0], ri[0] + ir[0], ri[1] + ir[1])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Box.point(Fraction(1))
        for _ in range(n):
            out = out * self
        return out


def _imul(a, b, c, d):
    prods = (a * c, a * d, b * c, b * d)
    return min(prods), max(prods)


# -- root isolation -------------------------------------------------------------

def _to_fraction(x: mpmath.mpf, bits: int) -> Fraction:
    return Fraction(int(mpmath.nint(x * (1 << bits))), 1 << bits)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cabs2(a):
    return a[0] * a[0] + a[1] * a[1]


def _sqrt_upper(q: Fraction) -> Fraction:
    if q <= 0:
        return Fraction(0)
    guess = Fraction(math.sqrt(float(q))) * (1 + Fraction(1, 1 << 40))
    guess = guess.limit_denominator(1 << 200) if guess.denominator > (1 << 200) else guess
    while guess * guess < q:
        guess *= 1 + Fraction(1, 1 << 20)
    return guess


def isolate_roots(coeffs: Sequence[Fraction], width_bits: int = DEFAULT_BOX_BITS) -> list[Box]:
    """Certified isolating boxes for every complex root of a squarefree polynomial.

    ``coeffs`` are rational, lowest degree first. Boxes are pairwise disjoint,
    each holds exactly one root and has width below ``2**-width_bits``.
    Returned in order of (real, imaginary) midpoint.
    """
    p = dense.trim([Fraction(c) for c in coeffs])
    n = len(p) - 1
    if n < 1:
        return []
    if n == 1:
        r = -p[0] / p[1]
        return [Box(r, r, Fraction(0), Fraction(0))]
    dps = 30
    while dps <= 2000:
        boxes = _try_isolate(p, n, dps, width_bits)
        if boxes is not None:
            return sorted(boxes, key=lambda b: (b.re_lo + b.re_hi, b.im_lo + b.im_hi))
        dps *= 2
    raise ArithmeticError("root isolation failed to certify boxes; is the input squarefree?")


def _try_isolate(p, n, dps, width_bits):
    with mpmath.workdps(dps):
        try:
            approx = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(p)],
                                      maxsteps=50 + 10 * n, extraprec=2 * dps)
        except mpmath.libmp.NoConvergence:
            return None
        bits = int(dps * 3.33) + 8
        z = [(_to_fraction(mpmath.re(r), bits), _to_fraction(mpmath.im(r), bits)) for r in approx]
    if len(set(z)) < n:
        return None
    lc = p[-1]
    radii2 = []
    for i in range(n):
        val = (Fraction(0), Fraction(0))
        for c in reversed(p):
            val = _cmul(val, z[i])
            val = (val[0] + c, val[1])
        den = (lc, Fraction(0))
        for j in range(n):
            if j != i:
                den = _cmul(den, (z[i][0] - z[j][0], z[i][1] - z[j][1]))
        d2 = _cabs2(den)
        if d2 == 0:
            return None
        radii2.append(n * n * _cabs2(val) / d2)
    for i in range(n):
        for j in range(i + 1, n):
            dist2 = _cabs2((z[i][0] - z[j][0], z[i][1] - z[j][1]))
            rhs = dist2 - 4 * radii2[i] - 4 * radii2[j]
            if rhs <= 0 or 64 * radii2[i] * radii2[j] >= rhs * rhs:
                return None
    limit = Fraction(1, 1 << width_bits)
    boxes = []
    for (re, im), r2 in zip(z, radii2):
        rho = _sqrt_upper(r2)
        if 2 * rho >= limit:
            return None
        boxes.append(Box(re - rho, re + rho, im - rho, im + rho))
    return boxes


# -- shear stream ------------------------------------------------------------------

def shear_candidates(seed: int = 0, budget: int = SHEAR_BUDGET) -> list[Fraction]:
    """Deterministic shear parameters: 0, 1, -1, 2, -2, ... permuted by ``seed``."""
    ks = [0]
    k = 1
    while len(ks) < budget:
        ks.extend((k, -k))
        k += 1
    ks = ks[:budget]
    if seed:
        head, tail = ks[:1], ks[1:]
        random.Random(seed).shuffle(tail)
        ks = head + tail
    return [Fraction(k) for k in ks]


# -- contexts ------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraicPointContext:
    """One isolated point with coordinates in Q(alpha).

    ``coordinate_exprs[i]`` is a polynomial in ``t`` whose value at alpha is
    the i-th coordinate (named ``coordinate_names[i]``).
    """

    minpoly: Poly
    isolating_box: Box
    coordinate_exprs: tuple[Poly, ...]
    coordinate_names: tuple[str, ...] = ("x", "y")
    _box_cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @cached_property
    def field(self) -> NumberField:
        return NumberField(self.minpoly.univariate_coeffs())

    @cached_property
    def coordinates(self) -> tuple[NFElement, ...]:
        return tuple(self.field(e.univariate_coeffs()) for e in self.coordinate_exprs)

    @property
    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    @property
    def alpha(self) -> complex:
        return self.box(53).midpoint

    def numeric(self) -> tuple[complex, ...]:
        a = self.box(53).midpoint
        return tuple(c.numeric(a) for c in self.coordinates)

    def evaluate(self, expr: Poly) -> NFElement:
        """Exact value of ``expr`` (a Poly in the coordinate names) at this point."""
        values = {}
        for v in expr.variables:
            if v not in self.coordinate_names:
                if expr.involves(v):
                    raise UsageError(f"variable {v!r} is not a coordinate of this point")
                values[v] = self.field.zero()
            else:
                values[v] = self.coordinates[self.coordinate_names.index(v)]
        val = expr.evaluate(values)
        return self.field(val) if not isinstance(val, NFElement) else val

    def is_zero(self, expr: Poly) -> bool:
        return not self.evaluate(expr)

    def box(self, bits: int) -> Box:
        """Isolating box of alpha refined to width below 2**-bits."""
        if bits <= DEFAULT_BOX_BITS and self.isolating_box.width < Fraction(1, 1 << bits):
            return self.isolating_box
        if bits not in self._box_cache:
            boxes = isolate_roots(self.minpoly.univariate_coeffs(), bits)
            target = self.isolating_box
            hits = [b for b in boxes if _overlap(b, target)]
            if len(hits) != 1:
                raise ArithmeticError("refined boxes do not match the isolating box")
            self._box_cache[bits] = hits[0]
        return self._box_cache[bits]

    def interval_evaluate(self, expr: Poly, bits: int = DEFAULT_BOX_BITS) -> Box:
        """Rigorous enclosure of ``expr`` at the point from a box of width 2**-bits."""
        a = self.box(bits)
        coords = [_eval_box(e.univariate_coeffs(), a) for e in self.coordinate_exprs]
        values = {}
        for v in expr.variables:
            values[v] = coords[self.coordinate_names.index(v)] if v in self.coordinate_names \
                else Box.point(Fraction(0))
        total = Box.point(Fraction(0))
        for e, c in expr.terms.items():
            term = Box.point(c)
            for v, k in zip(expr.variables, e):
                if k:
                    term = term * values[v] ** k
            total = total + term
        return total

    def describe(self) -> dict:
        return {
            "minpoly": str(self.minpoly),
            "coordinates": {n: str(e) for n, e in zip(self.coordinate_names, self.coordinate_exprs)},
            "approx": [[round(z.real, 12), round(z.imag, 12)] for z in self.numeric()],
        }


def _overlap(a: Box, b: Box) -> bool:
    return not (a.re_hi < b.re_lo or b.re_hi < a.re_lo or a.im_hi < b.im_lo or b.im_hi < a.im_lo)


def _eval_box(coeffs, box: Box) -> Box:
    acc = Box.point(Fraction(0))
    for c in reversed(coeffs):
        acc = acc * box + c
    return acc


def irreducible_factors(coeffs: Sequence[Fraction]) -> list[list[Fraction]]:
    """Distinct irreducible factors over Q of a univariate polynomial (monic, dense)."""
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for fac, _mult in factors:
        if fac.degree() < 1:
            continue
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append(dense.monic(cs))
    out.sort(key=lambda f: (len(f), [(-c.numerator, c.denominator) for c in f]))
    return out


def algebraic_point_context(system: Sequence[Poly], shear_seed: int = 0,
                            budget: int = SHEAR_BUDGET) -> list[AlgebraicPointContext]:
    """Exact contexts for every complex solution of a zero-dimensional system in (x, y).

    The first two polynomials form the system proper; extra polynomials are
    accepted and intersected as well (singular loci use three).
    """
    polys = [p.with_variables(("x", "y")) for p in system]
    if len(polys) < 2:
        raise UsageError("a system needs at least two polynomials")
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise NonIsolatedSolutionsError("all equations vanish identically")
    g = nonzero[0]
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
    if not g.is_constant():
        raise NonIsolatedSolutionsError(f"equations share the curve {g} = 0")
    if any(p.is_constant() for p in nonzero):
        return []

    x = Poly.var("x")
    y = Poly.var("y")
    attempts = 0
    for lam in shear_candidates(shear_seed, budget):
        attempts += 1
        sheared = [p.substitute({"x": x + y * lam}) for p in nonzero]
        elim = _eliminate(sheared)
        if elim is None:
            raise NonIsolatedSolutionsError("elimination resultant vanishes identically")
        result = _solve_over_factors(sheared, elim, lam)
        if result is not None:
            result.sort(key=lambda c: (c.isolating_box.re_lo + c.isolating_box.re_hi,
                                       c.isolating_box.im_lo + c.isolating_box.im_hi,
                                       str(c.minpoly)))
            return result
    raise RetryExhaustedError("no shear separates the solutions", attempts)


def _eliminate(polys: list[Poly]) -> list[Fraction] | None:
    """A nonzero univariate polynomial in x vanishing at every solution's x."""
    elim = None
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            r = resultant_eliminate(polys[i], polys[j], "y")
            if r:
                elim = r if elim is None else poly_gcd(elim, r)
    if elim is None:
        rng = random.Random(len(polys))
        for _ in range(8):
            a = sum((p * rng.randint(1, 9) for p in polys), Poly({}, polys[0].variables))
            b = sum((p * rng.randint(-9, 9) for p in polys), Poly({}, polys[0].variables))
            r = resultant_eliminate(a, b, "y") if a and b else None
            if r:
                elim = r
                break
    if elim is None:
        return None
    return dense.trim(elim.univariate_coeffs())


def _solve_over_factors(sheared: list[Poly], elim: list[Fraction], lam: Fraction):
    contexts = []
    if len(elim) <= 1:
        return contexts
    for fac in irreducible_factors(elim):
        K = NumberField(fac)
        specialized = []
        for p in sheared:
            coeffs = [K(_x_coeffs(c)) for c in p.coeffs_in("y")]
            coeffs = dense.trim(coeffs)
            if coeffs:
                specialized.append(coeffs)
        if not specialized:
            raise NonIsolatedSolutionsError("a vertical line lies in every equation")
        g = specialized[0]
        for s in specialized[1:]:
            g = dense.gcd(g, s)
        g = dense.squarefree_part(g) if len(g) > 1 else g
        if len(g) <= 1:
            continue
        if len(g) > 2:
            return None
        yv = -g[0] / g[1]
        xv = K.generator + yv * lam
        minpoly = Poly.univariate(fac, "t").primitive()
        exprs = (Poly.univariate(xv.coeffs, "t"), Poly.univariate(yv.coeffs, "t"))
        for box in isolate_roots(fac):
            contexts.append(AlgebraicPointContext(minpoly, box, exprs))
    return contexts


def _x_coeffs(c: Poly) -> list[Fraction]:
    return c.univariate_coeffs() if c else []


def iter_rational_points(contexts: Sequence[AlgebraicPointContext]) -> Iterator[tuple[Fraction, ...]]:
    for ctx in contexts:
        if ctx.is_rational:
            yield tuple(c.rational_value() for c in ctx.coordinates)
