import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import strategies as st

from slam.lexicon import LexicalGraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def vlabel(i: int, cat: str = "V") -> str:
    return f"{cat}.v{i:03d}"


def graph_from_nx(G: nx.Graph, cat: str = "V") -> LexicalGraph:
    return LexicalGraph.from_edges(
        ((vlabel(u, cat), vlabel(v, cat)) for u, v in G.edges()),
        vertices=(vlabel(u, cat) for u in G.nodes()),
    )


def random_connected_nx(rng: random.Random, n: int, p: float) -> nx.Graph:
    """Random tree plus extra edges, so always connected."""
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for v in range(1, n):
        G.add_edge(v, rng.randrange(v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                G.add_edge(u, v)
    return G


@st.composite
def connected_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          max_size=2 * n))
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from((v, p) for v, p in zip(range(1, n), parents))
    G.add_edges_from((u, v) for u, v in extra if u != v)
    return G


@st.composite
def any_graphs(draw, max_n=12):
    """Possibly disconnected graphs."""
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          max_size=2 * n))
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from((u, v) for u, v in edges if u != v)
    return G


def exact_walk(G: nx.Graph, r, steps: int) -> dict:
    """Exact walk distribution by pushing Fractions along reflexive adjacency."""
    nbrs = {u: sorted(set(G[u]) | {u}) for u in G}
    p = {r: Fraction(1)}
    for _ in range(steps):
        nxt: dict = {}
        for u, mass in p.items():
            share = mass / len(nbrs[u])
            for v in nbrs[u]:
                nxt[v] = nxt.get(v, Fraction(0)) + share
        p = nxt
    comp = nx.node_connected_component(G, r)
    return {u: p.get(u, Fraction(0)) for u in comp}


def write(path, text: str):
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture
def path_graph() -> LexicalGraph:
    return LexicalGraph.from_edges([("V.a", "V.b"), ("V.b", "V.c")])


# graph + store used by the resolver, eval and CLI fixtures
FIXTURE_EDGES = "V.a\tV.b\nV.b\tV.c\nV.p\tV.q\n"
FIXTURE_TRIPLES = (
    "V.b\tobj\tN.z\t5\n"
    "V.c\tobj\tN.z\t5\n"
    "V.d\tobj\tN.z\t9\n"
    "V.q\tobj\tN.w\t4\n"
)
FIXTURE_FREQ = "".join(f"{x}\t100\n" for x in
                       ["V.a", "V.b", "V.c", "V.d", "V.p", "V.q", "N.z", "N.w"])
FIXTURE_GOLD = (
    "FILM\tF1\tV.b\n"
    "FILM\tF2\tV.x\n"
    "QUERY\tF1\tV.a*|obj|N.z\n"
    "QUERY\tF2\tV.p*|obj|N.w\n"
    "QUERY\tF1\tV.a*|obj|N.nothing\n"
    "QUERY\tF1\tV.zz*|obj|N.z\ttroponymic\n"
)


@pytest.fixture
def fixture_files(tmp_path):
    return {
        "graph": write(tmp_path / "graph.tsv", FIXTURE_EDGES),
        "triples": write(tmp_path / "triples.tsv", FIXTURE_TRIPLES),
        "freq": write(tmp_path / "freq.tsv", FIXTURE_FREQ),
        "gold": write(tmp_path / "gold.tsv", FIXTURE_GOLD),
    }
