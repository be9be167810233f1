"""Dependency-triple counts and lemma frequencies from a corpus.

Triples are ``<governor, relation, dependent>`` with an occurrence count.
The store is indexed by ``(relation, dependent)`` so that the governors
attested with a given dependent can be listed directly.
"""
from __future__ import annotations

import io
import logging
import struct
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator

from .lexicon import Lexeme, ParseError, open_lines

log = logging.getLogger(__name__)

DEFAULT_MIN_COUNT = 3
DEFAULT_MAX_FREQ = 15000

SNAPSHOT_MAGIC = b"SLAMTRPL"
SNAPSHOT_VERSION = 1


class SnapshotError(ValueError):
    pass


def _records(source, width: int) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(open_lines(source), 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != width:
            raise ParseError(f"expected {width} tab-separated fields, got {len(fields)}",
                             lineno)
        yield lineno, fields


def _count(text: str, lineno: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"count is not an integer: {text!r}", lineno) from None
    if value <= 0:
        raise ParseError(f"count must be positive, got {value}", lineno)
    return value


def _lexeme(text: str, lineno: int) -> str:
    try:
        return Lexeme(text).label
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def read_triples(source) -> dict[tuple[str, str, str], int]:
    """Parse a triples TSV, summing the counts of repeated keys."""
    counts: dict[tuple[str, str, str], int] = defaultdict(int)
    for lineno, (gov, rel, dep, cnt) in _records(source, 4):
        if not rel:
            raise ParseError("empty relation", lineno)
        counts[_lexeme(gov, lineno), rel, _lexeme(dep, lineno)] += _count(cnt, lineno)
    return dict(counts)


def read_lemma_freq(source) -> dict[str, int]:
    freq: dict[str, int] = defaultdict(int)
    for lineno, (label, cnt) in _records(source, 2):
        freq[_lexeme(label, lineno)] += _count(cnt, lineno)
    return dict(freq)


@dataclass(frozen=True)
class CandidateSet:
    focus: str
    relation: str
    dependent: str
    min_count: int
    max_freq: int
    members: dict[str, int]

    def __contains__(self, label: str) -> bool:
        return label in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True, eq=False)
class TripleStore:
    corpus_id: str
    index: dict[tuple[str, str], tuple[tuple[str, int], ...]]
    lemma_freq: dict[str, int]
    # lexemes missing from the frequency file; their frequency is the sum
    # of their counts as governor
    flagged: frozenset[str] = field(default_factory=frozenset)

    @property
    def n_triples(self) -> int:
        return sum(len(v) for v in self.index.values())

    def lexemes(self) -> set[str]:
        out = set()
        for (_, dep), govs in self.index.items():
            out.add(dep)
            out.update(g for g, _ in govs)
        return out

    def frequency(self, label: str) -> int:
        return self.lemma_freq.get(label, 0)

    def count(self, governor: str, relation: str, dependent: str) -> int:
        for gov, c in self.index.get((relation, dependent), ()):
            if gov == governor:
                return c
        return 0

    def governors(self, relation: str, dependent: str) -> tuple[tuple[str, int], ...]:
        return self.index.get((relation, dependent), ())

    def candidates(self, focus: Lexeme | str, relation: str, dependent: Lexeme | str,
                   min_count: int = DEFAULT_MIN_COUNT,
                   max_freq: int = DEFAULT_MAX_FREQ) -> CandidateSet:
        """Governors attested with ``(relation, dependent)`` at least
        ``min_count`` times, of the focus's category, with corpus frequency
        at most ``max_freq``.  The focus itself is not excluded.
        """
        if min_count < 1 or max_freq < 1:
            raise ValueError("min_count and max_freq must be >= 1")
        focus = focus if isinstance(focus, Lexeme) else Lexeme(focus)
        dependent = dependent.label if isinstance(dependent, Lexeme) else dependent
        cat = focus.category
        members = {
            gov: c for gov, c in self.governors(relation, dependent)
            if c >= min_count
            and gov.partition(".")[0] == cat
            and self.frequency(gov) <= max_freq
        }
        return CandidateSet(focus.label, relation, dependent, min_count, max_freq, members)

    # -- snapshot ------------------------------------------------------

    def to_bytes(self) -> bytes:
        buf = io.BytesIO()
        buf.write(SNAPSHOT_MAGIC)
        buf.write(struct.pack("<I", SNAPSHOT_VERSION))
        _write_str(buf, self.corpus_id)
        freq = sorted(self.lemma_freq.items())
        buf.write(struct.pack("<Q", len(freq)))
        for label, c in freq:
            _write_str(buf, label)
            buf.write(struct.pack("<QB", c, label in self.flagged))
        keys = sorted(self.index)
        buf.write(struct.pack("<Q", len(keys)))
        for rel, dep in keys:
            _write_str(buf, rel)
            _write_str(buf, dep)
            govs = self.index[rel, dep]
            buf.write(struct.pack("<Q", len(govs)))
            for gov, c in govs:
                _write_str(buf, gov)
                buf.write(struct.pack("<Q", c))
        return buf.getvalue()

    def save(self, path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def from_bytes(cls, data: bytes) -> "TripleStore":
        buf = io.BytesIO(data)
        if buf.read(len(SNAPSHOT_MAGIC)) != SNAPSHOT_MAGIC:
            raise SnapshotError("not a triple-store snapshot")
        (version,) = _read(buf, "<I")
        if version != SNAPSHOT_VERSION:
            raise SnapshotError(f"unsupported snapshot version {version}")
        corpus_id = _read_str(buf)
        freq, flagged = {}, set()
        for _ in range(_read(buf, "<Q")[0]):
            label = _read_str(buf)
            c, flag = _read(buf, "<QB")
            freq[label] = c
            if flag:
                flagged.add(label)
        index = {}
        for _ in range(_read(buf, "<Q")[0]):
            rel, dep = _read_str(buf), _read_str(buf)
            govs = []
            for _ in range(_read(buf, "<Q")[0]):
                gov = _read_str(buf)
                govs.append((gov, _read(buf, "<Q")[0]))
            index[rel, dep] = tuple(govs)
        if buf.read(1):
            raise SnapshotError("trailing bytes in snapshot")
        return cls(corpus_id, index, freq, frozenset(flagged))

    @classmethod
    def load(cls, path) -> "TripleStore":
        return cls.from_bytes(Path(path).read_bytes())


def _write_str(buf: BinaryIO, s: str) -> None:
    b = s.encode("utf-8")
    buf.write(struct.pack("<I", len(b)))
    buf.write(b)


def _read(buf: BinaryIO, fmt: str) -> tuple:
    size = struct.calcsize(fmt)
    chunk = buf.read(size)
    if len(chunk) != size:
        raise SnapshotError("truncated snapshot")
    return struct.unpack(fmt, chunk)


def _read_str(buf: BinaryIO) -> str:
    (size,) = _read(buf, "<I")
    b = buf.read(size)
    if len(b) != size:
        raise SnapshotError("truncated snapshot")
    return b.decode("utf-8")


def store_from_counts(counts: dict[tuple[str, str, str], int],
                      lemma_freq: dict[str, int] | None = None,
                      corpus_id: str = "") -> TripleStore:
    lemma_freq = dict(lemma_freq or {})
    grouped: dict[tuple[str, str], list[tuple[str, int]]] = defaultdict(list)
    gov_sum: dict[str, int] = defaultdict(int)
    seen: set[str] = set()
    for (gov, rel, dep), c in counts.items():
        grouped[rel, dep].append((gov, c))
        gov_sum[gov] += c
        seen.update((gov, dep))
    flagged = frozenset(x for x in seen if x not in lemma_freq)
    for x in flagged:
        lemma_freq[x] = gov_sum.get(x, 0)
    if flagged:
        log.warning("%d lexemes missing from lemma frequencies; using governor counts",
                    len(flagged))
    index = {key: tuple(sorted(govs)) for key, govs in sorted(grouped.items())}
    return TripleStore(corpus_id, index, lemma_freq, flagged)


def build_store(triples_source, lemma_freq_source=None, corpus_id: str = "",
                snapshot: str | Path | None = None) -> TripleStore:
    """Ingest triples and lemma frequencies; optionally write a snapshot."""
    counts = read_triples(triples_source)
    freq = read_lemma_freq(lemma_freq_source) if lemma_freq_source is not None else {}
    store = store_from_counts(counts, freq, corpus_id)
    if snapshot is not None:
        store.save(snapshot)
    return store


def iter_triples(store: TripleStore) -> Iterable[tuple[str, str, str, int]]:
    for (rel, dep), govs in store.index.items():
        for gov, c in govs:
            yield gov, rel, dep, c
