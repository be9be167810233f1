"""Resolve analogical metaphors by crossing a synonym-graph random walk with
corpus dependency triples."""

from .evaluation import EvalReport, GoldData, evaluate, load_gold
from .lexicon import (ComponentMap, LexicalGraph, Lexeme, ParseError,
                      UnknownLexemeError, components, load_graph,
                      restrict_to_component)
from .prox import RankedNeighborhood, WalkDistribution, diam, walk, walk_oracle
from .resolver import (Diagnostic, MetaphorQuery, SolutionList, resolve, top_n)
from .smallworld import (SmallWorldReport, clustering_coefficient,
                         degree_powerlaw_fit, mean_shortest_path,
                         small_world_report)
from .triples import CandidateSet, TripleStore, build_store

__all__ = [
    "CandidateSet", "ComponentMap", "Diagnostic", "EvalReport", "GoldData",
    "LexicalGraph", "Lexeme", "MetaphorQuery", "ParseError", "RankedNeighborhood",
    "SmallWorldReport", "SolutionList", "TripleStore", "UnknownLexemeError",
    "WalkDistribution", "build_store", "clustering_coefficient", "components",
    "degree_powerlaw_fit", "diam", "evaluate", "load_gold", "load_graph",
    "mean_shortest_path", "resolve", "restrict_to_component", "small_world_report",
    "top_n", "walk", "walk_oracle",
]
