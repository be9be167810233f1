"""Command-line front end.

Exit codes: 0 on success, 1 for usage or parse errors, 2 when an input
file or a requested lexeme is missing.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .evaluation import GoldError, evaluate, load_gold
from .lexicon import ParseError, UnknownLexemeError, load_graph
from .prox import DEFAULT_STEPS, diam
from .resolver import (DEFAULT_RADIUS, MetaphorQuery, QueryError,
                       UnsupportedFocusError, resolve)
from .smallworld import MetricError, small_world_report
from .triples import (DEFAULT_MAX_FREQ, DEFAULT_MIN_COUNT, SnapshotError,
                      TripleStore, build_store)

EXIT_USAGE = 1
EXIT_MISSING = 2

log = logging.getLogger("slam")


class UsageError(Exception):
    pass


class MissingResource(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


@dataclass
class RunConfig:
    graph: Path | None = None
    triples: Path | None = None
    lemma_freq: Path | None = None
    snapshot: Path | None = None
    gold: Path | None = None
    steps: int = DEFAULT_STEPS
    radius: int = DEFAULT_RADIUS
    min_count: int = DEFAULT_MIN_COUNT
    max_freq: int = DEFAULT_MAX_FREQ
    n_max: int = 3
    exclude_tags: tuple[str, ...] = ()
    sample_size: int | None = None
    seed: int = 0
    out: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        tags = tuple(t for t in (args.exclude_tags or "").split(",") if t)
        cfg = cls(
            graph=args.graph, triples=args.triples, lemma_freq=args.lemma_freq,
            snapshot=args.snapshot, gold=args.gold,
            steps=args.steps, radius=args.radius, min_count=args.alpha,
            max_freq=args.beta, n_max=args.n_max, exclude_tags=tags,
            sample_size=args.sample_size, seed=args.seed, out=args.out,
        )
        return cfg

    def query_params(self) -> dict:
        return dict(steps=self.steps, radius=self.radius,
                    min_count=self.min_count, max_freq=self.max_freq)


def _require(path: Path | None, flag: str) -> Path:
    if path is None:
        raise UsageError(f"{flag} is required")
    if not path.exists():
        raise MissingResource(f"{flag}: no such file: {path}")
    return path


def _load_store(cfg: RunConfig) -> TripleStore:
    if cfg.snapshot is not None and cfg.triples is None:
        return TripleStore.load(_require(cfg.snapshot, "--snapshot"))
    triples = _require(cfg.triples, "--triples (or --snapshot)")
    freq = _require(cfg.lemma_freq, "--lemma-freq") if cfg.lemma_freq else None
    return build_store(triples, freq, corpus_id=triples.stem)


def cmd_graph_stats(cfg: RunConfig, out) -> None:
    g = load_graph(_require(cfg.graph, "--graph"))
    sample = None if cfg.sample_size is None else (cfg.sample_size, cfg.seed)
    out.write(small_world_report(g, sample).to_text())


def cmd_prox(cfg: RunConfig, lexeme: str, out) -> None:
    g = load_graph(_require(cfg.graph, "--graph"))
    for e in diam(g, lexeme, cfg.steps, cfg.radius):
        out.write(f"{e.rank}\t{e.label}\t{e.probability:.12g}\n")


def cmd_triples_build(cfg: RunConfig, corpus_id: str | None, out) -> None:
    triples = _require(cfg.triples, "--triples")
    freq = _require(cfg.lemma_freq, "--lemma-freq") if cfg.lemma_freq else None
    if cfg.snapshot is None:
        raise UsageError("--snapshot is required")
    store = build_store(triples, freq, corpus_id=corpus_id or triples.stem,
                        snapshot=cfg.snapshot)
    if store.n_triples == 0:
        log.warning("no triples in %s; wrote an empty store", triples)
    out.write(f"triples\t{store.n_triples}\n")
    out.write(f"lexemes\t{len(store.lexemes())}\n")


def cmd_resolve(cfg: RunConfig, text: str, out) -> None:
    q = MetaphorQuery.parse(text, **cfg.query_params())
    g = load_graph(_require(cfg.graph, "--graph"))
    result = resolve(g, _load_store(cfg), q)
    for i, s in enumerate(result.solutions, 1):
        out.write(f"{i}\t{s.label}\t{s.triple_count}\t{s.proxemic_rank}\n")
    if not result.solutions:
        print(f"no solution for {q}: {result.diagnostic.value}", file=sys.stderr)


def cmd_eval(cfg: RunConfig, out) -> None:
    gold = load_gold(_require(cfg.gold, "--gold"), **cfg.query_params())
    g = load_graph(_require(cfg.graph, "--graph"))
    report = evaluate(g, _load_store(cfg), gold, cfg.n_max, cfg.exclude_tags)
    if report.degenerate_precision:
        log.warning("no query received a solution; precision reported as 0")
    out.write(report.to_text())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", type=Path, help="synonym edge list (TSV)")
    common.add_argument("--triples", type=Path, help="dependency triples (TSV)")
    common.add_argument("--lemma-freq", type=Path, help="lemma frequencies (TSV)")
    common.add_argument("--snapshot", type=Path, help="triple-store snapshot")
    common.add_argument("--gold", type=Path, help="gold file for eval")
    common.add_argument("--lambda", dest="steps", type=_positive, default=DEFAULT_STEPS,
                        help="walk length (default %(default)s)")
    common.add_argument("--gamma", dest="radius", type=_positive, default=DEFAULT_RADIUS,
                        help="neighbourhood size (default %(default)s)")
    common.add_argument("--alpha", type=_positive, default=DEFAULT_MIN_COUNT,
                        help="minimum triple count (default %(default)s)")
    common.add_argument("--beta", type=_positive, default=DEFAULT_MAX_FREQ,
                        help="maximum lemma frequency (default %(default)s)")
    common.add_argument("--n-max", type=_positive, default=3)
    common.add_argument("--exclude-tags", default="",
                        help="comma-separated query tags to drop from eval")
    common.add_argument("--sample-size", type=_positive, default=None,
                        help="estimate L from this many sources")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, help="write output here instead of stdout")

    p = _Parser(prog="slam", description="Lexical solutions for analogical metaphors.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("graph-stats", parents=[common], help="small-world report of a graph")
    sp = sub.add_parser("prox", parents=[common], help="ranked walk neighbourhood")
    sp.add_argument("lexeme")
    sp = sub.add_parser("triples-build", parents=[common], help="ingest triples to a snapshot")
    sp.add_argument("--corpus-id", default=None)
    sp = sub.add_parser("resolve", parents=[common], help="resolve one metaphor")
    sp.add_argument("query", help="e.g. 'V.déshabiller*|obj|N.pomme'")
    sub.add_parser("eval", parents=[common], help="precision/recall against gold")
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        with contextlib.ExitStack() as stack:
            if cfg.out is not None:
                out = stack.enter_context(open(cfg.out, "w", encoding="utf-8"))
            else:
                out = sys.stdout
            if args.command == "graph-stats":
                cmd_graph_stats(cfg, out)
            elif args.command == "prox":
                cmd_prox(cfg, args.lexeme, out)
            elif args.command == "triples-build":
                cmd_triples_build(cfg, args.corpus_id, out)
            elif args.command == "resolve":
                cmd_resolve(cfg, args.query, out)
            elif args.command == "eval":
                cmd_eval(cfg, out)
    except UnsupportedFocusError as exc:
        print(f"slam: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, QueryError, ParseError, MetricError, GoldError) as exc:
        print(f"slam: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownLexemeError as exc:
        print(f"slam: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except (MissingResource, SnapshotError, FileNotFoundError) as exc:
        print(f"slam: {exc}", file=sys.stderr)
        return EXIT_MISSING
    return 0


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="slam: %(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
