"""Small-world diagnostics: edge count, mean path length, clustering, degree tail.

Self-loops are ignored throughout this module.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .lexicon import LexicalGraph, induced_subgraph


class MetricError(ValueError):
    pass


def _adjacency(g: LexicalGraph, loops: bool = False) -> sparse.csr_matrix:
    data = np.ones(len(g.indices), dtype=np.int64)
    a = sparse.csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))
    if not loops:
        a.setdiag(0)
        a.eliminate_zeros()
    return a


def largest_component(g: LexicalGraph) -> LexicalGraph:
    cmap = g.components
    return induced_subgraph(g, cmap.members(cmap.largest))


def mean_shortest_path(g: LexicalGraph, sample: tuple[int, int] | None = None,
                       chunk: int = 256) -> float:
    """Mean hop distance over ordered pairs of distinct vertices.

    Computed on the largest connected component.  With ``sample=(size,
    seed)`` only ``size`` source vertices, drawn without replacement, are
    expanded; the draw is reproducible for a given seed.
    """
    h = largest_component(g)
    n = h.n
    if n < 2:
        raise MetricError("no pairs")
    if sample is None:
        sources = np.arange(n)
    else:
        size, seed = sample
        if size < 1:
            raise MetricError(f"sample size must be >= 1, got {size}")
        rng = np.random.default_rng(seed)
        sources = np.sort(rng.choice(n, size=min(size, n), replace=False))
    a = _adjacency(h).astype(np.float32)
    total = 0
    for lo in range(0, len(sources), chunk):
        total += _distance_sum(a, sources[lo:lo + chunk])
    return total / (len(sources) * (n - 1))


def _distance_sum(a: sparse.csr_matrix, sources: np.ndarray) -> int:
    """Sum of hop distances from each source to every vertex (connected graph).

    Level-synchronous BFS for all sources at once: one sparse product per
    level expands every frontier.
    """
    rows = np.arange(len(sources))
    visited = np.zeros((len(sources), a.shape[0]), dtype=bool)
    visited[rows, sources] = True
    frontier = visited.astype(np.float32)
    total, level = 0, 0
    while True:
        level += 1
        reached = np.asarray(a @ frontier.T).T > 0
        reached &= ~visited
        count = int(reached.sum())
        if not count:
            return total
        total += level * count
        visited |= reached
        frontier = reached.astype(np.float32)


def local_clustering(g: LexicalGraph) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex (triangle count, loop-free degree)."""
    a = _adjacency(g)
    deg = np.asarray(a.sum(axis=1)).ravel()
    tri = np.asarray((a @ a).multiply(a).sum(axis=1)).ravel() // 2
    return tri, deg


def clustering_coefficient(g: LexicalGraph) -> float:
    """Mean local clustering over vertices with at least two neighbours."""
    tri, deg = local_clustering(g)
    mask = deg >= 2
    if not mask.any():
        raise MetricError("C undefined")
    d = deg[mask]
    return float(np.mean(tri[mask] / (d * (d - 1) / 2)))


def degree_histogram(g: LexicalGraph) -> dict[int, int]:
    ks, counts = np.unique(g.degrees - 1, return_counts=True)
    return {int(k): int(c) for k, c in zip(ks, counts) if k >= 1}


def fit_powerlaw(hist: dict[int, int]) -> tuple[float, float]:
    """Least-squares line through (log k, log count); returns (slope, |r|)."""
    pts = sorted((k, c) for k, c in hist.items() if k >= 1 and c > 0)
    if len(pts) < 3:
        raise MetricError("degenerate distribution")
    x = np.log([k for k, _ in pts])
    y = np.log([c for _, c in pts])
    slope, _ = np.polyfit(x, y, 1)
    r = np.corrcoef(x, y)[0, 1]
    return float(slope), float(abs(r))


def degree_powerlaw_fit(g: LexicalGraph) -> tuple[float, float]:
    return fit_powerlaw(degree_histogram(g))


@dataclass(frozen=True)
class SmallWorldReport:
    n: int
    m: int
    largest_n: int
    L: float
    C: float
    alpha: float
    correlation: float
    sampled: bool = False
    sample_size: int | None = None
    seed: int | None = None

    def to_text(self) -> str:
        rows = [
            ("n", self.n),
            ("m", self.m),
            ("largest_n", self.largest_n),
            ("L", f"{self.L:.6f}"),
            ("C", f"{self.C:.6f}"),
            ("alpha", f"{self.alpha:.6f}"),
            ("correlation", f"{self.correlation:.6f}"),
            ("sampled", str(self.sampled).lower()),
            ("sample_size", "" if self.sample_size is None else self.sample_size),
            ("seed", "" if self.seed is None else self.seed),
        ]
        return "".join(f"{k}\t{v}\n" for k, v in rows)


def small_world_report(g: LexicalGraph, sample: tuple[int, int] | None = None
                       ) -> SmallWorldReport:
    """n and m over the whole graph; L, C and the degree fit on its largest component."""
    h = largest_component(g)
    L = mean_shortest_path(h, sample)
    C = clustering_coefficient(h)
    try:
        alpha, corr = degree_powerlaw_fit(h)
    except MetricError:
        alpha, corr = float("nan"), float("nan")
    return SmallWorldReport(
        n=g.n, m=g.m, largest_n=h.n, L=L, C=C, alpha=alpha, correlation=corr,
        sampled=sample is not None,
        sample_size=None if sample is None else sample[0],
        seed=None if sample is None else sample[1],
    )
