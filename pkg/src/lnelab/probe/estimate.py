"""Empirical LNE constant from graph inner distances, and log-log fits."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.sparse.csgraph import dijkstra

from lnelab.errors import DomainError, ResolutionError
from lnelab.probe.sampling import LINK_FACTOR, SampleCloud, build_graph

DEFAULT_PAIRS = 2000
DEFAULT_SOURCES = 40
DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class PairPolicy:
    """M uniform random pairs (fixed seed) plus explicit point pairs from a witness hint."""

    m: int = DEFAULT_PAIRS
    seed: int = DEFAULT_SEED
    sources: int = DEFAULT_SOURCES
    extra: tuple = ()


@dataclass(frozen=True)
class ProbeReport:
    empirical_L: float
    pair_count: int
    witness_series: tuple[tuple[float, float], ...] = ()
    fitted_exponent: float | None = None
    graph_slack: float = 0.0
    worst_pair: tuple = ()
    generation: dict = field(default_factory=dict)

    def describe(self) -> dict:
        return {
            "empirical_L": round(self.empirical_L, 9),
            "pair_count": self.pair_count,
            "witness_series": [[s, round(r, 9)] for s, r in self.witness_series],
            "fitted_exponent": None if self.fitted_exponent is None else round(self.fitted_exponent, 6),
            "graph_slack": self.graph_slack,
            "generation": self.generation,
        }


def _dist4(p, q) -> float:
    return math.sqrt(abs(p[0] - q[0]) ** 2 + abs(p[1] - q[1]) ** 2)


def empirical_lne_constant(cloud: SampleCloud, link_radius: float | None = None,
                           pairs: PairPolicy = PairPolicy(), expect_connected: bool = True) -> ProbeReport:
    """Max of graph inner distance over outer distance across the selected pairs.

    ``link_radius`` is in units of the grid pitch (default 2.5 pitches) and
    must be at least 2 pitches.
    """
    factor = LINK_FACTOR if link_radius is None else link_radius / cloud.generation["pitch"]
    if factor < 2:
        raise DomainError("link radius must be at least twice the pitch")
    graph = build_graph(cloud, factor)
    n = len(cloud)
    rng = np.random.default_rng(pairs.seed)
    s = min(pairs.sources, n)
    sources = rng.choice(n, size=s, replace=False) if s else np.array([], dtype=int)
    per = max(1, pairs.m // max(s, 1))
    targets = rng.integers(0, n, size=(s, per))
    extra = [(cloud.nearest_node(a), cloud.nearest_node(b)) for a, b in pairs.extra]
    all_src = np.unique(np.concatenate([sources, [a for a, _ in extra]]).astype(int))
    dist = dijkstra(graph, directed=False, indices=all_src)
    row = {int(v): i for i, v in enumerate(all_src)}
    selected = [(int(a), int(b)) for a, tb in zip(sources, targets) for b in tb if a != b] + extra
    best = (1.0, None)
    count = 0
    pts = cloud.points
    for a, b in selected:
        inner = dist[row[a], b]
        outer = _dist4(pts[a], pts[b])
        if outer == 0:
            continue
        if not np.isfinite(inner):
            if expect_connected:
                raise ResolutionError(
                    f"sample graph disconnected (pitch {cloud.generation['pitch']}); try a smaller pitch")
            continue
        count += 1
        ratio = inner / outer
        if ratio > best[0]:
            best = (ratio, (a, b))
    worst = ()
    if best[1] is not None:
        worst = tuple(tuple(complex(z) for z in pts[i]) for i in best[1])
    return ProbeReport(best[0], count, graph_slack=factor * cloud.generation["pitch"],
                       worst_pair=worst, generation=dict(cloud.generation))


def pair_ratio(cloud: SampleCloud, graph, a, b) -> float:
    i, j = cloud.nearest_node(a), cloud.nearest_node(b)
    d = dijkstra(graph, directed=False, indices=[i])[0, j]
    return d / _dist4(cloud.points[i], cloud.points[j])


def scaling_exponent(series: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(ratio) against log(scale)."""
    if len(series) < 4:
        raise DomainError("need at least 4 (scale, ratio) points")
    s = np.array([p[0] for p in series], dtype=float)
    r = np.array([p[1] for p in series], dtype=float)
    if np.any(s <= 0) or np.any(r <= 0):
        raise DomainError("scales and ratios must be positive")
    if math.log10(s.max() / s.min()) < 1 - 1e-9:
        raise DomainError("scales must span at least one decade")
    slope, _ = np.polyfit(np.log(s), np.log(r), 1)
    return float(slope)
