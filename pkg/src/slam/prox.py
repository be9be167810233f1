"""Random-walk proximity on a reflexive synonym graph.

A particle starts on ``r`` and, at each step, moves to one of the
neighbours of its current vertex (self included) with equal probability.
``walk`` gives the distribution after ``steps`` moves; ``diam`` ranks the
vertices of ``r``'s component by that probability.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lexicon import LexicalGraph, Lexeme, restrict_to_component

DEFAULT_STEPS = 3

# Probabilities closer than this are treated as tied and ordered by label.
TIE_TOLERANCE = 1e-13

ORACLE_BUDGET = 1000


class OracleBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class WalkDistribution:
    """Walk probabilities over the component of ``start``.

    ``prob[i]`` is the probability of sitting on ``graph.labels[i]``;
    ``graph`` is the start vertex's component, not the full input graph.
    """

    start: str
    steps: int
    graph: LexicalGraph
    prob: np.ndarray

    def __getitem__(self, label: str) -> float:
        if label not in self.graph:
            return 0.0
        return float(self.prob[self.graph.index(label)])

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.graph.labels, self.prob.tolist()))


@dataclass(frozen=True)
class RankedEntry:
    label: str
    rank: int
    probability: float


@dataclass(frozen=True)
class RankedNeighborhood:
    start: str
    steps: int
    radius: int
    entries: tuple[RankedEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    def ranks(self) -> dict[str, int]:
        return {e.label: e.rank for e in self.entries}


def _check_steps(steps: int) -> None:
    if not isinstance(steps, (int, np.integer)) or isinstance(steps, bool):
        raise TypeError(f"steps must be an integer, got {steps!r}")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")


def walk(g: LexicalGraph, r: Lexeme | str, steps: int = DEFAULT_STEPS) -> WalkDistribution:
    """Distribution of a ``steps``-step walk from ``r``.

    ``steps == 0`` returns the indicator of ``r``.
    """
    _check_steps(steps)
    sub = restrict_to_component(g, r)
    start = sub.index(r)
    p = np.zeros(sub.n)
    p[start] = 1.0
    if steps:
        rows = np.repeat(np.arange(sub.n), sub.degrees)
        inv_deg = 1.0 / sub.degrees
        for _ in range(steps):
            p = np.bincount(sub.indices, weights=(p * inv_deg)[rows], minlength=sub.n)
    return WalkDistribution(sub.labels[start], int(steps), sub, p)


def rank_order(prob: np.ndarray, k: int | None = None,
               tol: float = TIE_TOLERANCE) -> np.ndarray:
    """Vertex ids by descending probability, near-ties broken by ascending id.

    Only the first ``k`` ids are returned when ``k`` is given.  Ids are
    assumed to follow label order, which makes the id tie-break a label
    tie-break.
    """
    n = len(prob)
    if k is None or k >= n:
        cand = np.arange(n)
    else:
        # everything that could tie with the k-th best must be kept
        kth = np.partition(prob, n - k)[n - k]
        cand = np.flatnonzero(prob >= kth - tol)
    order = cand[np.lexsort((cand, -prob[cand]))]
    # merge runs of near-equal probabilities and sort each run by id
    vals = prob[order]
    breaks = np.flatnonzero(vals[:-1] - vals[1:] > tol) + 1
    runs = np.split(order, breaks)
    out = np.concatenate([np.sort(run) for run in runs]) if runs else order
    return out if k is None else out[:k]


def diam(g: LexicalGraph, r: Lexeme | str, steps: int = DEFAULT_STEPS,
         radius: int = 40) -> RankedNeighborhood:
    """The ``radius`` best-ranked vertices of a ``steps``-step walk from ``r``.

    ``r`` itself competes like any other vertex.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    dist = walk(g, r, steps)
    top = rank_order(dist.prob, radius)
    entries = tuple(
        RankedEntry(dist.graph.labels[i], rank, float(dist.prob[i]))
        for rank, i in enumerate(top, 1)
    )
    return RankedNeighborhood(dist.start, dist.steps, radius, entries)


def proxemic_rank(g: LexicalGraph, r: Lexeme | str, s: Lexeme | str,
                  steps: int = DEFAULT_STEPS) -> int | None:
    """1-based rank of ``s`` in the walk from ``r``; None outside r's component."""
    dist = walk(g, r, steps)
    label = s.label if isinstance(s, Lexeme) else s
    if label not in dist.graph:
        return None
    target = dist.graph.index(label)
    order = rank_order(dist.prob)
    return int(np.flatnonzero(order == target)[0]) + 1


def walk_oracle(g: LexicalGraph, r: Lexeme | str, steps: int,
                budget: int = ORACLE_BUDGET) -> dict[str, Fraction]:
    """Exact rational walk distribution by explicit matrix products.

    Slow on purpose: builds the dense transition matrix of r's component in
    Fractions and multiplies the start indicator by it ``steps`` times.
    """
    _check_steps(steps)
    sub = restrict_to_component(g, r)
    n = sub.n
    if n > budget:
        raise OracleBudgetError(f"component of {r} has {n} vertices (budget {budget})")
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in sub.neighbors(i):
            adj[i][int(j)] = 1
    trans = []
    for i in range(n):
        d = sum(adj[i])
        trans.append([Fraction(a, d) for a in adj[i]])
    row = [Fraction(0)] * n
    row[sub.index(r)] = Fraction(1)
    for _ in range(steps):
        row = [sum((row[i] * trans[i][j] for i in range(n)), Fraction(0))
               for j in range(n)]
    return dict(zip(sub.labels, row))
