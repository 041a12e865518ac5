"""Genus and component count from the monodromy of the projection to x.

After a shear making f monic in y of degree d, the fiber over a generic x is
d points. Loops around each root of the y-discriminant permute them. With
the permutation at infinity, Riemann-Hurwitz gives the Euler characteristic
of the normalization, and orbits of the monodromy group give the components.

Loops share a real basepoint x0 on a large circle about a generic center c.
Each loop follows the circle counterclockwise to the angle of its branch
value, runs along the ray toward c, circles the branch value
counterclockwise, and returns the same way. Applied in decreasing order of
angle these loops compose to the big circle, which is tracked separately
as a check. Permutations are stored in that application order, so the
sequential product ending with the permutation at infinity is the identity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lnelab.errors import ConsistencyError, TrackingError
from lnelab.exactmath import dense
from lnelab.exactmath.algebraic import isolate_roots
from lnelab.exactmath.algorithms import resultant_eliminate
from lnelab.exactmath.poly import Poly
from lnelab.plane.curve import CurveInput

DEFAULT_TOLERANCE = 1e-10
SEPARATION = 3.0
MIN_STEP = 2.0 ** -30


@dataclass(frozen=True)
class MonodromyResult:
    sheet_count: int
    shear: int
    branch_x_values: tuple[complex, ...]
    local_permutations: tuple[tuple[int, ...], ...]
    infinity_permutation: tuple[int, ...]
    num_components: int
    euler_char: int
    genus_per_component: tuple[int, ...]
    max_residual: float

    @property
    def genus(self) -> int:
        """Genus of the curve when it is irreducible."""
        if self.num_components != 1:
            raise ValueError("genus of a reducible curve is per component")
        return self.genus_per_component[0]

    def product_is_identity(self) -> bool:
        perm = tuple(range(self.sheet_count))
        for p in self.local_permutations + (self.infinity_permutation,):
            perm = tuple(p[i] for i in perm)
        return perm == tuple(range(self.sheet_count))

    def describe(self) -> dict:
        return {
            "sheet_count": self.sheet_count,
            "shear": self.shear,
            "branch_x_values": [[round(b.real, 10), round(b.imag, 10)] for b in self.branch_x_values],
            "local_permutations": [list(p) for p in self.local_permutations],
            "infinity_permutation": list(self.infinity_permutation),
            "num_components": self.num_components,
            "euler_char": self.euler_char,
            "genus_per_component": list(self.genus_per_component),
            "max_residual": float(f"{self.max_residual:.3e}"),
        }


def cycle_count(perm, support=None) -> int:
    support = range(len(perm)) if support is None else support
    seen = set()
    cycles = 0
    for s in support:
        if s in seen:
            continue
        cycles += 1
        while s not in seen:
            seen.add(s)
            s = perm[s]
    return cycles


def orbits(perms, n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in perms:
        for i, j in enumerate(p):
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def monic_shear(f: Poly) -> tuple[int, Poly]:
    """Smallest integer shear x -> x + lam*y giving a constant y^d coefficient."""
    d = f.degree
    top = f.homogeneous_part(d)
    lam = 0
    for k in range(0, 4 * d + 2):
        lam = (k + 1) // 2 * (1 if k % 2 else -1)
        val = sum(c * Fraction(lam) ** i for (i, j), c in top.terms.items())
        if val:
            break
    x = Poly.var("x")
    y = Poly.var("y")
    return lam, f.substitute({"x": x + y * lam})


class _Fiber:
    """Numeric fiber solver for g(x, y) = sum_k a_k(x) y^k with constant a_d."""

    def __init__(self, g: Poly):
        cols = g.coeffs_in("y")
        self.d = len(cols) - 1
        self.a = [[complex(c) for c in col.univariate_coeffs()] if col else [0j] for col in cols]
        self.da = [[k * c for k, c in enumerate(col)][1:] or [0j] for col in self.a]

    @staticmethod
    def _horner(coeffs, x):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def coeffs_at(self, x):
        return [self._horner(col, x) for col in self.a]

    def roots(self, x, tol):
        cs = self.coeffs_at(x)
        r = np.roots(cs[::-1]) if self.d > 1 else np.array([-cs[0] / cs[1]])
        return np.array([self._newton(cs, y, tol) for y in r])

    def _newton(self, cs, y, tol):
        for _ in range(30):
            v = self._horner(cs, y)
            dv = sum(k * cs[k] * y ** (k - 1) for k in range(1, len(cs)))
            if dv == 0:
                break
            step = v / dv
            y -= step
            if abs(step) <= tol * (1 + abs(y)):
                break
        return y

    def residual(self, x, ys):
        cs = self.coeffs_at(x)
        out = 0.0
        for y in ys:
            scale = sum(abs(c) * abs(y) ** k for k, c in enumerate(cs)) or 1.0
            out = max(out, abs(self._horner(cs, y)) / scale)
        return out

    def slope(self, x, ys):
        cs = self.coeffs_at(x)
        dcs = [self._horner(col, x) for col in self.da]
        gy = [sum(k * cs[k] * y ** (k - 1) for k in range(1, len(cs))) for y in ys]
        gx = [self._horner(dcs, y) for y in ys]
        return np.array([-a / b if b else 0j for a, b in zip(gx, gy)])


def _match(pred, new):
    """Indices of ``new`` matching ``pred`` when every match is unambiguous."""
    d = len(pred)
    dist = np.abs(pred[:, None] - new[None, :])
    order = np.argsort(dist, axis=1)
    idx = order[:, 0]
    if d > 1:
        d1 = dist[np.arange(d), idx]
        d2 = dist[np.arange(d), order[:, 1]]
        if np.any(d2 < SEPARATION * d1):
            return None
    if len(set(idx.tolist())) != d:
        return None
    return idx


class _Tracker:
    def __init__(self, fiber: _Fiber, tol: float):
        self.fiber = fiber
        self.tol = tol
        self.max_residual = 0.0

    def track(self, path, ys):
        """Continue the roots ``ys`` along ``path(tau)``, tau in [0, 1]."""
        tau = 0.0
        h = 1.0 / 32
        x = path(0.0)
        while tau < 1.0:
            step = min(h, 1.0 - tau)
            x_new = path(tau + step)
            pred = ys + self.fiber.slope(x, ys) * (x_new - x)
            new = self.fiber.roots(x_new, self.tol)
            idx = _match(pred, new)
            if idx is None:
                h = step / 2
                if h < MIN_STEP:
                    raise TrackingError("fiber roots could not be separated", x_new)
                continue
            ys = new[idx]
            self.max_residual = max(self.max_residual, self.fiber.residual(x_new, ys))
            x = x_new
            tau += step
            h = min(2 * step, 1.0 / 32)
        return ys


def _segment(a, b):
    return lambda t: a + (b - a) * t


def _arc(center, radius, th0, th1):
    return lambda t: center + radius * cmath.exp(1j * (th0 + (th1 - th0) * t))


def _seg_dist(p, a, b):
    ab = b - a
    t = max(0.0, min(1.0, ((p - a) * ab.conjugate()).real / (abs(ab) ** 2 or 1.0)))
    return abs(p - (a + t * ab))


def _choose_center(branch, scale):
    """Generic center: rays from it to the branch values stay clear of the others."""
    best = None
    for k in range(1, 40):
        c = complex(0.37 * k * scale / 40 * math.cos(2.3 * k), 0.29 * k * scale / 40 * math.sin(1.7 * k) + 0.013 * scale)
        clear = math.inf
        for i, b in enumerate(branch):
            u = (b - c) / abs(b - c) if b != c else 1
            outer = c + 4 * scale * u
            for j, o in enumerate(branch):
                if j != i:
                    clear = min(clear, _seg_dist(o, b, outer))
            clear = min(clear, abs(b - c))
        if best is None or clear > best[0]:
            best = (clear, c)
    return best[1], best[0]


def _branch_values(g: Poly) -> list[complex]:
    disc = resultant_eliminate(g, g.derivative("y"), "y")
    coeffs = dense.squarefree_part(disc.univariate_coeffs()) if not disc.is_constant() else [Fraction(1)]
    if dense.degree(coeffs) <= 0:
        return []
    return [b.midpoint for b in isolate_roots(coeffs)]


def monodromy_genus(c: CurveInput, precision: float = DEFAULT_TOLERANCE) -> MonodromyResult:
    lam, g = monic_shear(c.f)
    fiber = _Fiber(g)
    d = fiber.d
    branch = _branch_values(g)
    ident = tuple(range(d))
    if d == 1 or not branch:
        if not branch:
            n = d
            return MonodromyResult(d, lam, (), (), ident, n, 2 * d, (0,) * n, 0.0)
    scale = 1.0 + max(abs(b) for b in branch)
    center, clearance = _choose_center(branch, scale)
    x0 = 1.0 + max(abs(b) for b in branch) + 2 * abs(center) + 1.0
    radius = abs(x0 - center)
    th0 = cmath.phase(x0 - center)
    tracker = _Tracker(fiber, precision)
    base = np.sort_complex(fiber.roots(x0, precision))

    def perm_of(end):
        idx = _match(end, base)
        if idx is None:
            raise TrackingError("loop did not return to a separated base fiber", x0)
        return tuple(int(i) for i in idx)

    loops = []
    for b in branch:
        u = (b - center) / abs(b - center)
        others = min((abs(b - o) for o in branch if o != b), default=scale)
        rho = min(0.4 * others, 0.5 * clearance)
        th = cmath.phase(u)
        dth = (th - th0) % (2 * math.pi)
        loops.append((dth, b, u, rho))
    loops.sort(key=lambda t: t[0])

    perms = []
    for dth, b, u, rho in loops:
        th = th0 + dth
        outer = center + radius * cmath.exp(1j * th)
        inner = b + rho * u
        phi = cmath.phase(u)
        ys = base
        ys = tracker.track(_arc(center, radius, th0, th), ys)
        ys = tracker.track(_segment(outer, inner), ys)
        ys = tracker.track(_arc(b, rho, phi, phi + 2 * math.pi), ys)
        ys = tracker.track(_segment(inner, outer), ys)
        ys = tracker.track(_arc(center, radius, th, th0), ys)
        perms.append(perm_of(ys))

    ys = tracker.track(_arc(center, radius, th0, th0 + 2 * math.pi), base)
    big = perm_of(ys)
    perms.reverse()
    composed = ident
    for p in perms:
        composed = tuple(p[i] for i in composed)
    if composed != big:
        raise ConsistencyError(f"loop permutations compose to {composed}, big circle gives {big}")
    inf_perm = tuple(sorted(range(d), key=lambda i: big[i]))  # inverse of big

    all_perms = perms + [inf_perm]
    chi = 2 * d - sum(d - cycle_count(p) for p in all_perms)
    comps = orbits(all_perms, d)
    genera = []
    for orb in comps:
        n = len(orb)
        chi_o = 2 * n - sum(n - cycle_count(p, orb) for p in all_perms)
        if chi_o % 2 or chi_o > 2:
            raise ConsistencyError(f"component Euler characteristic {chi_o} is not 2 - 2g")
        genera.append((2 - chi_o) // 2)
    if sum(2 - 2 * gi for gi in genera) != chi:
        raise ConsistencyError("component Euler characteristics do not add up")
    order = [b for _, b, _, _ in reversed(loops)]
    return MonodromyResult(d, lam, tuple(order), tuple(perms), inf_perm, len(comps), chi,
                           tuple(genera), tracker.max_residual)
