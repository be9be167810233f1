"""Metaphor resolution by crossing a walk neighbourhood with corpus triples.

For a query ``<X*, Y, Z>`` the solutions are the governors ``u`` of
``<u, Y, Z>`` that pass the corpus filters and also rank among the
``radius`` closest vertices to ``X`` in the synonym graph.  They are
listed by decreasing triple count.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .lexicon import LexicalGraph, Lexeme
from .prox import DEFAULT_STEPS, diam
from .triples import DEFAULT_MAX_FREQ, DEFAULT_MIN_COUNT, TripleStore

DEFAULT_RADIUS = 40


class QueryError(ValueError):
    pass


class UnsupportedFocusError(QueryError):
    pass


class Diagnostic(str, enum.Enum):
    OK = "ok"
    FOCUS_NOT_IN_GRAPH = "focus_not_in_graph"
    NO_SYNTAGMATIC_CANDIDATES = "no_syntagmatic_candidates"
    EMPTY_INTERSECTION = "empty_intersection"


@dataclass(frozen=True)
class MetaphorQuery:
    focus: str
    relation: str
    dependent: str
    steps: int = DEFAULT_STEPS
    radius: int = DEFAULT_RADIUS
    min_count: int = DEFAULT_MIN_COUNT
    max_freq: int = DEFAULT_MAX_FREQ

    def __post_init__(self):
        for label in (self.focus, self.dependent):
            try:
                Lexeme(label)
            except ValueError as exc:
                raise QueryError(str(exc)) from None
        if not self.relation:
            raise QueryError("empty relation")
        for name in ("steps", "radius", "min_count", "max_freq"):
            if getattr(self, name) < 1:
                raise QueryError(f"{name} must be >= 1")

    @classmethod
    def parse(cls, text: str, **params) -> "MetaphorQuery":
        """Parse ``"<focus>*|<relation>|<dependent>"``."""
        parts = text.strip().split("|")
        if len(parts) != 3:
            raise QueryError(f"expected '<X>*|<Y>|<Z>', got {text!r}")
        x, y, z = (p.strip() for p in parts)
        if z.endswith("*"):
            raise UnsupportedFocusError(
                f"unsupported focus position: only the governor may be starred ({text!r})")
        if not x.endswith("*"):
            raise QueryError(f"the governor must carry the '*' focus mark: {text!r}")
        x = x[:-1]
        if "*" in x or "*" in z:
            raise QueryError(f"misplaced '*' in {text!r}")
        return cls(x, y, z, **params)

    def __str__(self) -> str:
        return f"{self.focus}*|{self.relation}|{self.dependent}"


@dataclass(frozen=True)
class Solution:
    label: str
    triple_count: int
    proxemic_rank: int


@dataclass(frozen=True)
class SolutionList:
    query: MetaphorQuery
    solutions: tuple[Solution, ...] = ()
    diagnostic: Diagnostic = Diagnostic.OK

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    @property
    def labels(self) -> list[str]:
        return [s.label for s in self.solutions]


def top_n(sl: SolutionList, n: int) -> SolutionList:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return replace(sl, solutions=sl.solutions[:n])


def resolve(graph: LexicalGraph, store: TripleStore, q: MetaphorQuery) -> SolutionList:
    if q.focus not in graph:
        return SolutionList(q, (), Diagnostic.FOCUS_NOT_IN_GRAPH)
    cands = store.candidates(q.focus, q.relation, q.dependent, q.min_count, q.max_freq)
    if not cands.members:
        return SolutionList(q, (), Diagnostic.NO_SYNTAGMATIC_CANDIDATES)
    ranks = diam(graph, q.focus, q.steps, q.radius).ranks()
    sols = [Solution(label, c, ranks[label])
            for label, c in cands.members.items() if label in ranks]
    if not sols:
        return SolutionList(q, (), Diagnostic.EMPTY_INTERSECTION)
    sols.sort(key=lambda s: (-s.triple_count, s.proxemic_rank, s.label))
    return SolutionList(q, tuple(sols), Diagnostic.OK)
