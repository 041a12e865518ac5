"""Sampling a plane curve over a grid of base points and linking the samples.

The curve is sampled as a cover of a base coordinate w: after a shear
x = w + lam*y making the leading y-coefficient constant, each base point w
carries the roots y of f(w + lam*y, y). Samples over neighboring base points
are linked sheet by sheet (root matching with a first-order predictor), so
graph paths stay on the curve instead of jumping between sheets that happen
to pass close to each other in C^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import sparse
from scipy.spatial import cKDTree

from lnelab.errors import DomainError, SamplingError
from lnelab.exactmath.poly import Poly
from lnelab.plane.curve import CurveInput

DEFAULT_RESIDUAL = 1e-8
LINK_FACTOR = 2.5
SEPARATION = 3.0


@dataclass
class SampleCloud:
    """Samples of X ∩ B_R with the sheet structure needed to link them.

    ``points`` holds one row (x, y) per node. ``base``/``roots`` hold every
    base point and its full fiber; ``node_of[b, k]`` is the node of root k
    over base b, or -1 when that root lies outside the ball.
    """

    points: np.ndarray
    base: np.ndarray
    roots: np.ndarray
    slopes: np.ndarray
    pitch: np.ndarray
    node_of: np.ndarray
    shear: complex
    generation: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def real_points(self) -> np.ndarray:
        """Points as rows (re x, im x, re y, im y)."""
        p = self.points
        return np.column_stack([p[:, 0].real, p[:, 0].imag, p[:, 1].real, p[:, 1].imag])

    def nearest_node(self, point) -> int:
        d = np.abs(self.points - np.asarray(point, dtype=complex)[None, :])
        return int(np.argmin(np.hypot(d[:, 0], d[:, 1])))


def probe_shear(f: Poly) -> int:
    """Smallest integer lam in 0, 1, -1, ... making the y-leading coefficient of f(w + lam*y, y) constant."""
    x = Poly.var("x")
    y = Poly.var("y")
    for k in range(0, 4 * f.degree + 4):
        lam = (k + 1) // 2 * (1 if k % 2 else -1)
        g = f.substitute({"x": x + y * lam}) if lam else f
        cols = g.coeffs_in("y")
        if len(cols) > 1 and cols[-1].is_constant():
            return lam
    raise AssertionError("no shear makes the curve monic in y")


class FiberSolver:
    """Vectorized fibers of g(w, y) = f(w + lam*y, y) over arrays of base points."""

    def __init__(self, f: Poly, lam: int | None = None):
        self.f = f
        self.lam = probe_shear(f) if lam is None else lam
        x = Poly.var("x")
        y = Poly.var("y")
        g = f.substitute({"x": x + y * self.lam}) if self.lam else f
        cols = g.coeffs_in("y")
        self.d = len(cols) - 1
        # numpy polyval wants highest degree first
        self.a = [np.array([complex(c) for c in reversed(col.univariate_coeffs())] or [0j]) for col in cols]
        self.da = [np.polyder(a) if len(a) > 1 else np.array([0j]) for a in self.a]
        self.terms = [(e, complex(c)) for e, c in f.terms.items()]

    def coefficients(self, w: np.ndarray) -> np.ndarray:
        return np.stack([np.polyval(a, w) for a in self.a], axis=-1)

    def roots(self, w, newton_steps: int = 6) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        A = self.coefficients(w)
        d = self.d
        if d == 1:
            Y = (-A[:, 0] / A[:, 1])[:, None]
        else:
            comp = np.zeros((len(w), d, d), dtype=complex)
            comp[:, 1:, :-1] = np.eye(d - 1)
            comp[:, :, -1] = -A[:, :d] / A[:, d:d + 1]
            Y = np.linalg.eigvals(comp)
        for _ in range(newton_steps):
            val, der = self._eval(A, Y)
            ok = der != 0
            step = np.where(ok, val / np.where(ok, der, 1), 0)
            Y = Y - step
        return np.sort_complex(Y) if d > 1 else Y

    def _eval(self, A, Y):
        val = np.zeros_like(Y)
        der = np.zeros_like(Y)
        for k in range(self.d, -1, -1):
            der = der * Y + val
            val = val * Y + A[:, k, None]
        return val, der

    def slopes(self, w, Y) -> np.ndarray:
        """dy/dw along each sheet."""
        w = np.asarray(w, dtype=complex)
        A = self.coefficients(w)
        dA = np.stack([np.polyval(a, w) for a in self.da], axis=-1)
        _, gy = self._eval(A, Y)
        gw, _ = self._eval(dA, Y)
        with np.errstate(divide="ignore", invalid="ignore"):
            s = -gw / gy
        return np.where(np.isfinite(s), s, 0)

    def relative_residual(self, X, Y) -> np.ndarray:
        val = np.zeros_like(X)
        mag = np.zeros(X.shape)
        for (i, j), c in self.terms:
            t = c * X ** i * Y ** j
            val = val + t
            mag = mag + np.abs(t)
        return np.abs(val) / np.where(mag > 0, mag, 1.0)


def cartesian_base(radius: float, pitch: float, center: complex = 0j) -> np.ndarray:
    n = int(math.floor(radius / pitch))
    k = np.arange(-n, n + 1) * pitch
    re, im = np.meshgrid(k, k, indexing="ij")
    w = (re + 1j * im).ravel()
    return center + w[np.abs(w) <= radius + 1e-12]


def log_polar_base(center: complex, r_min: float, r_max: float, n_angle: int = 96):
    """Rings r_min * q^i, q = 1 + 2*pi/n_angle, n_angle points each, plus the center."""
    q = 1 + 2 * math.pi / n_angle
    n_rings = int(math.ceil(math.log(r_max / r_min) / math.log(q))) + 1
    radii = r_min * q ** np.arange(n_rings)
    theta = 2 * math.pi * np.arange(n_angle) / n_angle
    w = (radii[:, None] * np.exp(1j * theta[None, :])).ravel()
    pitch = np.repeat(radii * 2 * math.pi / n_angle, n_angle)
    return np.concatenate([[center], center + w]), np.concatenate([[r_min], pitch])


def sample_curve(source, R: float, pitch: float, *, tol: float = DEFAULT_RESIDUAL,
                 special_points: Sequence[complex] = (), densify: bool = True,
                 base: tuple[np.ndarray, np.ndarray] | None = None,
                 extra_base: Sequence[complex] = ()) -> SampleCloud:
    """Sample V(f) ∩ B_R over a centered square grid of pitch ``pitch``.

    ``source`` is a :class:`CurveInput` or a callable t -> (x(t), y(t)) on
    complex arrays; a parametrization is evaluated over the same kind of
    grid in the parameter disc of radius R. ``special_points`` (singular
    points, as (x, y)) get a grid 4x finer within 10 pitches, and their base
    coordinates become base points. ``base`` overrides the grid with explicit
    (points, local pitch) arrays.
    """
    if not R > 0 or not pitch > 0:
        raise DomainError(f"radius and pitch must be positive, got R={R}, h={pitch}")
    if isinstance(source, CurveInput):
        solver = FiberSolver(source.f)
        lam = solver.lam
        special_w = [complex(px - lam * py) for px, py in special_points]
    elif callable(source):
        solver = None
        lam = 0
        special_w = []
    else:
        raise TypeError("source must be a CurveInput or a parametrization callable")

    if base is None:
        W = cartesian_base((1 + abs(lam)) * R, pitch)
        P = np.full(len(W), float(pitch))
        if densify and special_w:
            fine = [cartesian_base(10 * pitch, pitch / 4, c) for c in special_w]
            W = np.concatenate([W] + fine)
            P = np.concatenate([P] + [np.full(len(f), pitch / 4) for f in fine])
    else:
        W, P = (np.asarray(a) for a in base)
    extra = list(special_w) + [complex(e) for e in extra_base]
    if extra:
        W = np.concatenate([W, extra])
        near = np.array([P[np.argmin(np.abs(W[:len(P)] - e))] for e in extra])
        P = np.concatenate([P, near])

    if solver is not None:
        Y = solver.roots(W)
        S = solver.slopes(W, Y)
        X = W[:, None] + lam * Y
        res = solver.relative_residual(X, Y)
    else:
        xs, ys = source(W)
        X = np.asarray(xs, dtype=complex)[:, None]
        Y = np.asarray(ys, dtype=complex)[:, None]
        S = np.zeros_like(Y)
        res = np.zeros(X.shape)

    inball = np.hypot(np.abs(X), np.abs(Y)) <= R
    good = inball & (res < tol)
    dropped = int(np.count_nonzero(inball & ~good))

    node_of = np.full(Y.shape, -1, dtype=np.int64)
    d = Y.shape[1]
    rep = np.tile(np.arange(d), (len(W), 1))
    for k in range(1, d):
        for j in range(k):
            close = (np.abs(Y[:, k] - Y[:, j]) < P / 4) & (rep[:, k] == k)
            rep[close, k] = rep[close, j]
    own = good & (rep == np.arange(d)[None, :])
    ids = np.cumsum(own.ravel()) - 1
    node_of[own] = ids.reshape(own.shape)[own]
    for k in range(d):
        follow = good[:, k] & ~own[:, k]
        node_of[follow, k] = node_of[follow, rep[follow, k]]
    pts = np.column_stack([X[own], Y[own]])
    if len(pts) == 0:
        raise SamplingError(f"no curve points in the ball of radius {R} at pitch {pitch}")
    return SampleCloud(
        points=pts, base=W, roots=Y, slopes=S, pitch=P, node_of=node_of, shear=lam,
        generation={"radius": R, "pitch": pitch, "residual_tol": tol, "shear": lam,
                    "base_points": int(len(W)), "dropped_residual": dropped},
    )


def _neighbor_pairs(W: np.ndarray, P: np.ndarray, factor: float):
    xy = np.column_stack([W.real, W.imag])
    tree = cKDTree(xy)
    if np.allclose(P, P[0]):
        pairs = tree.query_pairs(r=factor * P[0], output_type="ndarray")
        return pairs[:, 0], pairs[:, 1]
    lists = tree.query_ball_point(xy, r=factor * P, return_sorted=False)
    I = np.repeat(np.arange(len(W)), [len(l) for l in lists])
    J = np.fromiter((j for l in lists for j in l), dtype=np.int64, count=len(I))
    keep = I < J
    I2, J2 = I[~keep & (I != J)], J[~keep & (I != J)]
    I, J = np.concatenate([I[keep], J2]), np.concatenate([J[keep], I2])
    pairs = np.unique(np.column_stack([I, J]), axis=0)
    return pairs[:, 0], pairs[:, 1]


def build_graph(cloud: SampleCloud, link_factor: float = LINK_FACTOR) -> sparse.csr_matrix:
    """Sheet-matched proximity graph weighted by Euclidean distance in C^2.

    Base points within ``link_factor`` local pitches are neighbors. Each root
    over one is predicted at the other and linked to its nearest root there;
    when the second-nearest is within 3x the nearest (sheets too close to
    tell apart) it is linked to every root within 3x the nearest distance.
    """
    W, Y, S, nodes = cloud.base, cloud.roots, cloud.slopes, cloud.node_of
    I, J = _neighbor_pairs(W, cloud.pitch, link_factor)
    rows, cols = [], []
    for a, b in ((I, J), (J, I)):
        pred = Y[a] + S[a] * (W[b] - W[a])[:, None]
        dist = np.abs(pred[:, :, None] - Y[b][:, None, :])
        if dist.shape[2] > 1:
            srt = np.sort(dist, axis=2)
            d1, d2 = srt[:, :, 0], srt[:, :, 1]
        else:
            d1 = dist[:, :, 0]
            d2 = np.full_like(d1, np.inf)
        clear = d2 >= SEPARATION * d1
        allowed = np.where(clear[:, :, None], dist == d1[:, :, None], dist <= SEPARATION * d1[:, :, None])
        e, k, m = np.nonzero(allowed)
        u = nodes[a[e], k]
        v = nodes[b[e], m]
        ok = (u >= 0) & (v >= 0) & (u != v)
        rows.append(u[ok])
        cols.append(v[ok])
    u = np.concatenate(rows)
    v = np.concatenate(cols)
    n = len(cloud.points)
    key = np.unique(np.column_stack([np.minimum(u, v), np.maximum(u, v)]), axis=0)
    diff = cloud.points[key[:, 0]] - cloud.points[key[:, 1]]
    wk = np.sqrt(np.abs(diff[:, 0]) ** 2 + np.abs(diff[:, 1]) ** 2)
    # csgraph drops stored zeros, so coincident samples keep a tiny positive weight
    wk = np.maximum(wk, 1e-300)
    return sparse.coo_matrix((wk, (key[:, 0], key[:, 1])), shape=(n, n)).tocsr()


def parametrization(components: Sequence[Callable]) -> Callable:
    def param(t):
        return tuple(comp(t) for comp in components)
    return param
