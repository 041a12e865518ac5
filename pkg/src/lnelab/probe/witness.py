"""Witness-driven pair series: how d_inn/d_out behaves near a certificate.

Near a point p the pairs sit at distance ``scale`` along a tangent
direction t of the curve, in the unitary frame (t, n) at p:

* a repeated tangent direction (non-ordinary point) gives the two points
  of the fiber {p + scale*t + sigma*n} closest to the tangent line;
* two distinct tangent directions give one point on each branch;
* a smooth point gives the points at +scale and -scale along t.

At a point at infinity in direction t, a simple direction (transverse
branch) gives the points with along-coordinate +R and -R. A direction of
multiplicity >= 2 is measured by its transverse size: U is the largest
along-coordinate of a curve point with transverse coordinate R, and the
pair is the two points of the fiber at U closest to the axis. For the
parabola this is (R, R^2), (-R, R^2), with ratio growing like R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse.csgraph import dijkstra

from lnelab.errors import PreconditionError, ResolutionError
from lnelab.plane.curve import CurveInput
from lnelab.plane.infinity import InfinityPoint
from lnelab.plane.local import SingularPointRecord
from lnelab.plane.verdict import InfinityFailure, LneVerdict, NonOrdinarySingularPoint
from lnelab.probe.estimate import ProbeReport, scaling_exponent
from lnelab.probe.sampling import build_graph, log_polar_base, probe_shear, sample_curve

LOCAL_SCALES = tuple(np.geomspace(1e-3, 1e-1, 9))
INFINITY_SCALES = (10.0, 20.0, 40.0, 80.0, 160.0)
N_ANGLE = 96


@dataclass(frozen=True)
class WitnessHint:
    """Where to probe: ``kind`` is "local" (with ``point``) or "infinity".

    ``directions`` are unit tangent vectors in C^2 with multiplicities; the
    first entry is the one probed.
    """

    kind: str
    directions: tuple[tuple[tuple[complex, complex], int], ...]
    point: tuple[complex, complex] = (0j, 0j)

    def describe(self) -> dict:
        t, m = self.directions[0]
        return {
            "kind": self.kind,
            "point": [[round(z.real, 12), round(z.imag, 12)] for z in self.point],
            "direction": [[round(z.real, 12), round(z.imag, 12)] for z in t],
            "multiplicity": m,
        }


def _unit(a: complex, b: complex) -> tuple[complex, complex]:
    n = math.hypot(abs(a), abs(b))
    return (a / n, b / n)


def _normal(t):
    return (-t[1].conjugate(), t[0].conjugate())


def _cluster(values: Sequence[complex], tol: float = 1e-6):
    groups: list[list[complex]] = []
    for v in values:
        for g in groups:
            if abs(g[0] - v) <= tol * (1 + abs(v)):
                g.append(v)
                break
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


def cone_directions(cone: Sequence[complex]) -> list[tuple[tuple[complex, complex], int]]:
    """Unit tangent vectors (a, b) with h(a, b) = 0 for h = sum cone[k] x^(m-k) y^k."""
    m = len(cone) - 1
    k0 = next(k for k, c in enumerate(cone) if abs(c) > 0)
    out = []
    if k0:
        out.append(((1 + 0j, 0j), k0))
    poly = [cone[k] for k in range(k0, m + 1)]  # highest power of a first: a^(m-k0) ... a^0
    if len(poly) > 1:
        for a, mult in _cluster(np.roots(poly)):
            out.append((_unit(complex(a), 1 + 0j), mult))
    out.sort(key=lambda dm: -dm[1])
    return out


def hint_from_record(record: SingularPointRecord) -> WitnessHint:
    return WitnessHint("local", tuple(cone_directions(record.numeric_cone())), record.point.numeric())


def hint_from_point(c: CurveInput, point, records: Sequence[SingularPointRecord] = ()) -> WitnessHint:
    """Hint at a user-given curve point: its singular record if it has one, else its tangent."""
    px, py = (complex(z) for z in point)
    for r in records:
        qx, qy = r.point.numeric()
        if abs(qx - px) + abs(qy - py) < 1e-6:
            return hint_from_record(r)
    fx = complex(c.f.derivative("x").evaluate({"x": px, "y": py}))
    fy = complex(c.f.derivative("y").evaluate({"x": px, "y": py}))
    if abs(fx) + abs(fy) == 0:
        raise PreconditionError("point is singular but matches no singular record")
    return WitnessHint("local", ((_unit(fy, -fx), 1),), (px, py))


def hint_from_infinity(p: InfinityPoint) -> WitnessHint:
    return WitnessHint("infinity", ((_unit(*p.direction), p.multiplicity),))


def hint_from_verdict(v: LneVerdict) -> WitnessHint:
    cert = v.certificate
    if isinstance(cert, NonOrdinarySingularPoint):
        return hint_from_record(cert.record)
    if isinstance(cert, InfinityFailure):
        return hint_from_infinity(cert.witness)
    if v.infinity is not None and v.infinity.points_at_infinity:
        return hint_from_infinity(v.infinity.points_at_infinity[0])
    raise PreconditionError("no witness available")


def line_polynomial(c: CurveInput, P, V) -> np.ndarray:
    """Coefficients (highest first) of s -> f(P + s*V)."""
    px, py = P
    vx, vy = V
    total = np.zeros(1, dtype=complex)
    for (i, j), cf in c.f.terms.items():
        term = np.array([complex(cf)])
        for _ in range(i):
            term = np.polymul(term, [vx, px])
        for _ in range(j):
            term = np.polymul(term, [vy, py])
        total = np.polyadd(total, term)
    return np.trim_zeros(total, "f") if np.any(total) else total


def _roots_along(c, P, V):
    poly = line_polynomial(c, P, V)
    return np.roots(poly) if len(poly) > 1 else np.array([], dtype=complex)


def _at(P, t, s, n, sigma):
    return (P[0] + s * t[0] + sigma * n[0], P[1] + s * t[1] + sigma * n[1])


def witness_pair(c: CurveInput, hint: WitnessHint, scale: float):
    t, mult = hint.directions[0]
    n = _normal(t)
    p = hint.point
    if hint.kind == "local":
        if mult >= 2:
            sig = sorted(_roots_along(c, _at(p, t, scale, n, 0), n), key=abs)[:2]
            if len(sig) < 2:
                raise PreconditionError("fewer than two fiber points near the tangent")
            return _at(p, t, scale, n, sig[0]), _at(p, t, scale, n, sig[1])
        if len(hint.directions) >= 2:
            out = []
            for tk, _ in hint.directions[:2]:
                nk = _normal(tk)
                sig = min(_roots_along(c, _at(p, tk, scale, nk, 0), nk), key=abs)
                out.append(_at(p, tk, scale, nk, sig))
            return tuple(out)
        out = []
        for s in (scale, -scale):
            sig = min(_roots_along(c, _at(p, t, s, n, 0), n), key=abs)
            out.append(_at(p, t, s, n, sig))
        return tuple(out)
    origin = (0j, 0j)
    if mult >= 2:
        u = max(_roots_along(c, _at(origin, t, 0, n, scale), t), key=abs)
        sig = sorted(_roots_along(c, _at(origin, t, u, n, 0), n), key=abs)[:2]
        return _at(origin, t, u, n, sig[0]), _at(origin, t, u, n, sig[1])
    out = []
    for s in (scale, -scale):
        sig = min(_roots_along(c, _at(origin, t, s, n, 0), n), key=abs)
        out.append(_at(origin, t, s, n, sig))
    return tuple(out)


def witness_series(c: CurveInput, hint: WitnessHint, scales: Sequence[float] | None = None,
                   n_angle: int = N_ANGLE) -> ProbeReport:
    """Ratios d_inn/d_out of the witness pairs across ``scales``, with the fitted exponent.

    Inner distances come from a log-polar base grid (n_angle points per
    ring, ring ratio 1 + 2*pi/n_angle) around the witness, so every scale is
    resolved with the same relative accuracy.
    """
    if scales is None:
        scales = LOCAL_SCALES if hint.kind == "local" else INFINITY_SCALES
    scales = [float(s) for s in scales]
    lam = probe_shear(c.f)
    pairs = [witness_pair(c, hint, s) for s in scales]
    center = hint.point[0] - lam * hint.point[1] if hint.kind == "local" else 0j
    bases = [p[0] - lam * p[1] for pr in pairs for p in pr]
    offsets = [abs(b - center) for b in bases]
    r_min = 0.02 * max(min(o for o in offsets if o > 0), 1e-12)
    r_max = 3 * max(offsets)
    reach = max(math.hypot(abs(p[0]), abs(p[1])) for pr in pairs for p in pr)
    reach = max(reach, math.hypot(abs(hint.point[0]), abs(hint.point[1])))
    base = log_polar_base(center, r_min, r_max, n_angle)
    cloud = sample_curve(c, 10 * reach + 1, float(base[1][1:].min()), base=base, extra_base=bases)
    cloud.generation.update({"grid": "log-polar", "n_angle": n_angle, "r_min": r_min, "r_max": r_max})
    graph = build_graph(cloud)
    ends = []
    for a, b in pairs:
        i, j = cloud.nearest_node(a), cloud.nearest_node(b)
        for node, q in ((i, a), (j, b)):
            gap = math.hypot(*(abs(u - v) for u, v in zip(cloud.points[node], q)))
            if gap > 1e-6 * (1 + math.hypot(abs(q[0]), abs(q[1]))):
                raise ResolutionError(f"witness point {q} not resolved by the sample graph")
        ends.append((i, j))
    src = sorted({i for i, _ in ends})
    dist = dijkstra(graph, directed=False, indices=src)
    series = []
    for s, (i, j) in zip(scales, ends):
        inner = dist[src.index(i), j]
        if not np.isfinite(inner):
            raise ResolutionError(f"witness pair at scale {s} lies in different graph components")
        a, b = cloud.points[i], cloud.points[j]
        outer = math.hypot(abs(a[0] - b[0]), abs(a[1] - b[1]))
        series.append((s, float(inner / outer)))
    fit = scaling_exponent(series) if len(series) >= 4 else None
    return ProbeReport(max(r for _, r in series), len(series), tuple(series), fit,
                       generation=dict(cloud.generation))
