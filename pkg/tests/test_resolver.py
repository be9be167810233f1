import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIXTURE_EDGES, FIXTURE_FREQ, FIXTURE_TRIPLES
from oracles import brute_force_resolve, random_instance
from slam.lexicon import load_graph
from slam.prox import diam
from slam.resolver import (Diagnostic, MetaphorQuery, QueryError, Solution,
                           SolutionList, UnsupportedFocusError, resolve, top_n)
from slam.triples import build_store


@pytest.fixture
def resources():
    graph = load_graph(FIXTURE_EDGES.splitlines())
    store = build_store(FIXTURE_TRIPLES.splitlines(), FIXTURE_FREQ.splitlines())
    return graph, store


def test_fixture_resolution(resources):
    graph, store = resources
    q = MetaphorQuery("V.a", "obj", "N.z", steps=3, radius=2, min_count=3, max_freq=15000)
    assert diam(graph, "V.a", 3, 2).labels == ["V.b", "V.a"]
    result = resolve(graph, store, q)
    assert result.diagnostic is Diagnostic.OK
    assert result.solutions == (Solution("V.b", 5, 1),)


def test_wider_radius_admits_c(resources):
    graph, store = resources
    q = MetaphorQuery("V.a", "obj", "N.z", radius=3)
    # equal counts: proxemic rank decides (b is 1st, c is 3rd)
    assert resolve(graph, store, q).solutions == (Solution("V.b", 5, 1),
                                                   Solution("V.c", 5, 3))


def test_diagnostics(resources):
    graph, store = resources
    assert resolve(graph, store, MetaphorQuery("V.zz", "obj", "N.z")).diagnostic \
        is Diagnostic.FOCUS_NOT_IN_GRAPH
    assert resolve(graph, store, MetaphorQuery("V.a", "obj", "N.légo")).diagnostic \
        is Diagnostic.NO_SYNTAGMATIC_CANDIDATES
    # V.q is a candidate for N.w but not in the component of V.a
    r = resolve(graph, store, MetaphorQuery("V.a", "obj", "N.w"))
    assert r.diagnostic is Diagnostic.EMPTY_INTERSECTION
    assert r.solutions == ()


def test_focus_can_be_its_own_solution():
    graph = load_graph(["V.déshabiller\tV.dévêtir"])
    store = build_store(["V.déshabiller\tobj\tN.orange\t4"], ["V.déshabiller\t10"])
    r = resolve(graph, store, MetaphorQuery("V.déshabiller", "obj", "N.orange"))
    assert r.labels == ["V.déshabiller"]


def test_troponym_example_shape():
    # tronc is attested far more often but sits outside the neighbourhood
    edges = [("N.bras", "N.branche"), ("N.branche", "N.rameau"), ("N.rameau", "N.tige"),
             ("N.tige", "N.tronc"), ("N.bras", "N.force"), ("N.force", "N.puissance")]
    graph = load_graph([f"{a}\t{b}" for a, b in edges])
    store = build_store(
        ["N.tronc\tde\tN.arbre\t206", "N.branche\tde\tN.arbre\t117",
         "N.force\tde\tN.arbre\t4", "N.puissance\tde\tN.arbre\t3"],
        ["N.tronc\t900", "N.branche\t900", "N.force\t900", "N.puissance\t900"])
    q = MetaphorQuery("N.bras", "de", "N.arbre", radius=4)
    r = resolve(graph, store, q)
    assert r.labels == ["N.branche", "N.force", "N.puissance"]
    assert "N.tronc" not in diam(graph, "N.bras", 3, 4).labels
    assert top_n(r, 1).labels == ["N.branche"]


def test_parse_query():
    q = MetaphorQuery.parse("V.déshabiller*|obj|N.pomme", radius=90)
    assert (q.focus, q.relation, q.dependent, q.radius) == ("V.déshabiller", "obj",
                                                           "N.pomme", 90)
    assert str(q) == "V.déshabiller*|obj|N.pomme"
    with pytest.raises(UnsupportedFocusError):
        MetaphorQuery.parse("V.x|obj|N.z*")
    for bad in ["V.x|obj|N.z", "V.x*|obj", "V.x**|obj|N.z", "V.x*|obj|N.z*",
                "x*|obj|N.z", "V.x*||N.z"]:
        with pytest.raises(QueryError):
            MetaphorQuery.parse(bad)
    with pytest.raises(QueryError):
        MetaphorQuery("V.x", "obj", "N.z", radius=0)


def test_top_n(resources):
    graph, store = resources
    r = resolve(graph, store, MetaphorQuery("V.a", "obj", "N.z", radius=3))
    assert top_n(r, 1).labels == ["V.b"]
    assert top_n(r, 5) == r
    empty = SolutionList(r.query, (), Diagnostic.EMPTY_INTERSECTION)
    assert top_n(empty, 2) == empty
    with pytest.raises(ValueError):
        top_n(r, 0)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_matches_brute_force(seed):
    G, graph, store, q = random_instance(random.Random(seed))
    got = resolve(graph, store, q)
    assert [(s.label, s.triple_count, s.proxemic_rank) for s in got] == \
        brute_force_resolve(G, store, q)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 40), st.integers(0, 20))
def test_radius_monotone(seed, radius, extra):
    _, graph, store, q = random_instance(random.Random(seed))
    small = resolve(graph, store, replace(q, radius=radius))
    big = resolve(graph, store, replace(q, radius=radius + extra))
    assert set(small.labels) <= set(big.labels)
    kept = [x for x in big.labels if x in set(small.labels)]
    assert kept == small.labels


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solution_invariants(seed):
    _, graph, store, q = random_instance(random.Random(seed))
    r = resolve(graph, store, q)
    counts = [s.triple_count for s in r]
    assert counts == sorted(counts, reverse=True)
    cands = store.candidates(q.focus, q.relation, q.dependent, q.min_count, q.max_freq)
    if q.focus in graph:
        ranks = diam(graph, q.focus, q.steps, q.radius).ranks()
    for s in r:
        assert s.label in cands and s.label in ranks
        assert s.proxemic_rank == ranks[s.label] <= q.radius
        assert s.label.split(".")[0] == q.focus.split(".")[0]
    assert resolve(graph, store, q) == r
