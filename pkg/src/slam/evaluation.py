"""Top-n precision / recall of resolved metaphors against gold verb sets.

A query is a hit at ``n`` when one of its first ``n`` solutions is among
the conventional lexemes of its film.  Precision divides the hits by the
number of queries that got any solution; recall divides by all queries.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .lexicon import LexicalGraph, Lexeme, ParseError, open_lines
from .resolver import MetaphorQuery, QueryError, SolutionList, resolve
from .triples import TripleStore


class GoldError(ValueError):
    pass


@dataclass(frozen=True)
class GoldQuery:
    query: MetaphorQuery
    film: str
    tags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class GoldData:
    films: dict[str, frozenset[str]]
    queries: tuple[GoldQuery, ...]


def load_gold(source, **params) -> GoldData:
    """Read a gold file of FILM and QUERY records.

    ``params`` (steps, radius, min_count, max_freq) are applied to every
    parsed query.
    """
    films: dict[str, set[str]] = {}
    raw_queries: list[tuple[int, str, str, frozenset[str]]] = []
    for lineno, raw in enumerate(open_lines(source), 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "FILM":
            if len(fields) != 3:
                raise ParseError("FILM record needs 3 fields", lineno)
            labels = [x.strip() for x in fields[2].split(",") if x.strip()]
            if not labels:
                raise ParseError("FILM record without gold lexemes", lineno)
            for label in labels:
                try:
                    Lexeme(label)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from None
            films.setdefault(fields[1], set()).update(labels)
        elif kind == "QUERY":
            if len(fields) not in (3, 4):
                raise ParseError("QUERY record needs 3 or 4 fields", lineno)
            tags = frozenset(t.strip() for t in fields[3].split(",") if t.strip()) \
                if len(fields) == 4 else frozenset()
            raw_queries.append((lineno, fields[1], fields[2], tags))
        else:
            raise ParseError(f"unknown record kind {kind!r}", lineno)

    queries = []
    for lineno, film, text, tags in raw_queries:
        if film not in films:
            raise ParseError(f"query references unknown film {film!r}", lineno)
        try:
            q = MetaphorQuery.parse(text, **params)
        except QueryError as exc:
            raise ParseError(str(exc), lineno) from None
        queries.append(GoldQuery(q, film, tags))
    return GoldData({f: frozenset(v) for f, v in films.items()}, tuple(queries))


@dataclass(frozen=True)
class EvalRow:
    n: int
    precision: float
    recall: float
    f_measure: float


@dataclass(frozen=True)
class QueryDetail:
    query: MetaphorQuery
    film: str
    result: SolutionList
    hits: tuple[bool, ...]  # hits[n - 1]


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[EvalRow, ...]
    total_queries: int
    queries_with_solution: int
    hits: tuple[int, ...]
    details: tuple[QueryDetail, ...]

    @property
    def degenerate_precision(self) -> bool:
        return self.queries_with_solution == 0

    def row(self, n: int) -> EvalRow:
        return self.rows[n - 1]

    def to_text(self) -> str:
        out = ["n\tprecision\trecall\tf_measure"]
        for r in self.rows:
            out.append(f"{r.n}\t{r.precision:.3f}\t{r.recall:.3f}\t{r.f_measure:.3f}")
        out.append("")
        out.append(f"total_queries\t{self.total_queries}")
        out.append(f"queries_with_solution\t{self.queries_with_solution}")
        out.append("hits\t" + ",".join(map(str, self.hits)))
        out.append(f"degenerate_precision\t{str(self.degenerate_precision).lower()}")
        out.append("")
        out.append("query\tfilm\tdiagnostic\tsolutions\thits")
        for d in self.details:
            out.append("\t".join([
                str(d.query), d.film, d.result.diagnostic.value,
                ",".join(d.result.labels),
                "".join("1" if h else "0" for h in d.hits),
            ]))
        return "\n".join(out) + "\n"


def f_measure(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def score(results: Iterable[tuple[GoldQuery, SolutionList]],
          films: dict[str, frozenset[str]], n_max: int) -> EvalReport:
    """Aggregate already-resolved queries into a report."""
    details = []
    for gq, sl in results:
        gold = films[gq.film]
        hits = []
        found = False
        for label in sl.labels[:n_max]:
            found = found or label in gold
            hits.append(found)
        hits += [found] * (n_max - len(hits))
        details.append(QueryDetail(sl.query, gq.film, sl, tuple(hits)))
    total = len(details)
    answered = sum(1 for d in details if d.result.solutions)
    hit_counts = tuple(sum(d.hits[n] for d in details) for n in range(n_max))
    rows = []
    for n in range(1, n_max + 1):
        h = hit_counts[n - 1]
        p = h / answered if answered else 0.0
        r = h / total if total else 0.0
        rows.append(EvalRow(n, p, r, f_measure(p, r)))
    return EvalReport(tuple(rows), total, answered, hit_counts, tuple(details))


def evaluate(graph: LexicalGraph, store: TripleStore, gold: GoldData, n_max: int = 3,
             filter_tags: Iterable[str] = (), **params) -> EvalReport:
    """Resolve every gold query not carrying one of ``filter_tags`` and score it.

    Excluded queries leave both denominators.  ``params`` override the
    resolution parameters stored on the queries.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if not gold.queries:
        raise GoldError("empty gold data")
    excluded = frozenset(filter_tags)
    results = []
    for gq in gold.queries:
        if gq.tags & excluded:
            continue
        q = replace(gq.query, **params) if params else gq.query
        results.append((gq, resolve(graph, store, q)))
    return score(results, gold.films, n_max)
