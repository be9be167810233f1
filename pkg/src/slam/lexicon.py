"""Synonym graph over category-qualified lexemes.

Labels look like ``"V.peler"`` or ``"N.pomme"``: a lexical category, a dot,
then the lemma.  Graphs are undirected and reflexive; every vertex carries a
self-loop, which counts once towards its degree but is left out of the
reported edge count ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph


class GraphError(ValueError):
    """Raised for malformed graph input."""


class ParseError(GraphError):
    """A line of an input file could not be parsed."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class UnknownLexemeError(KeyError):
    """The requested lexeme is not a vertex of the graph."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(label)

    def __str__(self) -> str:
        return f"unknown lexeme: {self.label}"


@dataclass(frozen=True, order=True)
class Lexeme:
    label: str

    def __post_init__(self):
        cat, sep, lemma = self.label.partition(".")
        if not sep or not cat or not lemma:
            raise ValueError(f"malformed lexeme label {self.label!r}")

    @property
    def category(self) -> str:
        return self.label.partition(".")[0]

    @property
    def lemma(self) -> str:
        return self.label.partition(".")[2]

    def __str__(self) -> str:
        return self.label


def _as_label(x: Lexeme | str) -> str:
    return x.label if isinstance(x, Lexeme) else x


@dataclass(frozen=True, eq=False)
class LexicalGraph:
    """Immutable reflexive undirected graph.

    ``labels`` are sorted; vertex ``i`` is ``labels[i]``.  The adjacency is
    stored CSR-style: the neighbours of ``i`` are
    ``indices[indptr[i]:indptr[i + 1]]``, sorted, and include ``i`` itself.
    """

    labels: tuple[str, ...]
    indptr: np.ndarray
    indices: np.ndarray
    _index: dict[str, int] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]],
                   vertices: Iterable[str] = ()) -> "LexicalGraph":
        """Build the symmetric, reflexive closure of ``edges``.

        Extra isolated ``vertices`` may be given; they end up with only
        their self-loop.
        """
        pairs: set[tuple[str, str]] = set()
        names: set[str] = set()
        for v in vertices:
            Lexeme(v)
            names.add(v)
        for a, b in edges:
            names.add(a)
            names.add(b)
            if a != b:
                pairs.add((a, b) if a < b else (b, a))
        for v in names:
            Lexeme(v)
        if not names:
            raise GraphError("empty graph")
        labels = tuple(sorted(names))
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        if pairs:
            e = np.array([(index[a], index[b]) for a, b in pairs], dtype=np.int64)
            src = np.concatenate([e[:, 0], e[:, 1], np.arange(n)])
            dst = np.concatenate([e[:, 1], e[:, 0], np.arange(n)])
        else:
            src = dst = np.arange(n, dtype=np.int64)
        return cls._from_arrays(labels, src, dst, index)

    @classmethod
    def _from_arrays(cls, labels, src, dst, index=None) -> "LexicalGraph":
        n = len(labels)
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        counts = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        if index is None:
            index = {lab: i for i, lab in enumerate(labels)}
        return cls(tuple(labels), indptr, dst.astype(np.int64), index)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def m(self) -> int:
        """Number of undirected synonym pairs, loops excluded."""
        return (len(self.indices) - self.n) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degrees including the self-loop."""
        return np.diff(self.indptr)

    def __len__(self) -> int:
        return self.n

    def __contains__(self, x: Lexeme | str) -> bool:
        return _as_label(x) in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def index(self, x: Lexeme | str) -> int:
        label = _as_label(x)
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLexemeError(label) from None

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def degree(self, i: int) -> int:
        return int(self.indptr[i + 1] - self.indptr[i])

    def edges(self) -> Iterator[tuple[str, str]]:
        """Each undirected non-loop edge once, as ``(lower, higher)`` labels."""
        for i in range(self.n):
            for j in self.neighbors(i):
                if j > i:
                    yield self.labels[i], self.labels[j]

    @cached_property
    def components(self) -> "ComponentMap":
        return components(self)


@dataclass(frozen=True)
class ComponentMap:
    """Connected components; a component's id is its smallest vertex id."""

    component: np.ndarray
    sizes: dict[int, int]

    @property
    def largest(self) -> int:
        # ties go to the smallest id
        return min(self.sizes, key=lambda c: (-self.sizes[c], c))

    def members(self, cid: int) -> np.ndarray:
        return np.flatnonzero(self.component == cid)

    def __len__(self) -> int:
        return len(self.sizes)


def open_lines(source) -> Iterator[str]:
    """Yield lines from a path or from an iterable of strings."""
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, encoding="utf-8") as fh:
            yield from fh
    else:
        yield from source


def parse_edge_lines(lines: Iterable[str]) -> Iterator[tuple[str, str]]:
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab-separated labels, got {len(fields)}",
                             lineno)
        for f in fields:
            try:
                Lexeme(f)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        yield fields[0], fields[1]


def load_graph(source) -> LexicalGraph:
    """Load an edge list (path or iterable of lines) into a LexicalGraph."""
    return LexicalGraph.from_edges(parse_edge_lines(open_lines(source)))


def components(g: LexicalGraph) -> ComponentMap:
    a = sparse.csr_matrix((np.ones(len(g.indices), dtype=np.int8), g.indices, g.indptr),
                          shape=(g.n, g.n))
    _, raw = csgraph.connected_components(a, directed=False)
    # relabel each component by its smallest vertex id
    _, first, inverse, counts = np.unique(raw, return_index=True, return_inverse=True,
                                          return_counts=True)
    comp = first[inverse].astype(np.int64)
    sizes = {int(c): int(k) for c, k in zip(first, counts)}
    return ComponentMap(comp, sizes)


def induced_subgraph(g: LexicalGraph, keep: Sequence[int] | np.ndarray) -> LexicalGraph:
    """Subgraph induced by the sorted vertex ids in ``keep``."""
    keep = np.asarray(keep, dtype=np.int64)
    if len(keep) == g.n:
        return g
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[keep] = np.arange(len(keep))
    rows = np.repeat(np.arange(g.n), g.degrees)
    mask = (remap[rows] >= 0) & (remap[g.indices] >= 0)
    labels = tuple(g.labels[i] for i in keep)
    return LexicalGraph._from_arrays(labels, remap[rows[mask]], remap[g.indices[mask]])


def restrict_to_component(g: LexicalGraph, r: Lexeme | str) -> LexicalGraph:
    """The connected component of ``r``, with ids re-densified in label order."""
    i = g.index(r)
    cmap = g.components
    cid = int(cmap.component[i])
    if cmap.sizes[cid] == g.n:
        return g
    return induced_subgraph(g, cmap.members(cid))
