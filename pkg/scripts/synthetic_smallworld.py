"""Generate a Watts-Strogatz graph, print its small-world report and time walks.

    python scripts/synthetic_smallworld.py --n 10000 --k 10 --p 0.1 --out ws.tsv
"""
import argparse
import time

import networkx as nx

from slam.lexicon import LexicalGraph
from slam.prox import diam, walk
from slam.smallworld import small_world_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--p", type=float, default=0.1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--steps", type=int, default=3)
    ap.add_argument("--sample-size", type=int, default=500)
    ap.add_argument("--out", help="also write the edge list here")
    args = ap.parse_args()

    G = nx.connected_watts_strogatz_graph(args.n, args.k, args.p, seed=args.seed)
    edges = [(f"V.w{u:06d}", f"V.w{v:06d}") for u, v in G.edges()]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.writelines(f"{a}\t{b}\n" for a, b in edges)
    g = LexicalGraph.from_edges(edges)

    print(small_world_report(g, sample=(args.sample_size, args.seed)).to_text(), end="")
    start = g.labels[0]
    t0 = time.perf_counter()
    d = walk(g, start, args.steps)
    print(f"walk_seconds\t{time.perf_counter() - t0:.4f}")
    print(f"mass_error\t{abs(d.prob.sum() - 1):.3e}")
    for e in diam(g, start, args.steps, 10):
        print(f"{e.rank}\t{e.label}\t{e.probability:.12g}")


if __name__ == "__main__":
    main()
