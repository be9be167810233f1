"""Re-run the reference numbers when the original resources are available.

    python scripts/reproduce_results.py --graph dicosyn_verbe.tsv \
        --triples frantext20_triples.tsv --lemma-freq frantext20_freq.tsv \
        --gold flexsem_fr.tsv [--noun-graph dicosyn_nom.tsv]

Every section is optional; sections whose inputs are missing are skipped.
"""
import argparse

from slam.evaluation import evaluate, load_gold
from slam.lexicon import load_graph
from slam.prox import diam
from slam.resolver import MetaphorQuery, resolve
from slam.smallworld import small_world_report
from slam.triples import build_store

EXAMPLES = [
    ("V.déshabiller*|obj|N.orange", 90, "graph"),
    ("V.miauler*|suj|N.porte", 40, "graph"),
    ("N.bras*|de|N.arbre", 40, "noun_graph"),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--graph")
    ap.add_argument("--noun-graph")
    ap.add_argument("--triples")
    ap.add_argument("--lemma-freq")
    ap.add_argument("--gold")
    ap.add_argument("--sample-size", type=int, help="estimate L from a sample of sources")
    args = ap.parse_args()

    graphs = {}
    if args.graph:
        graphs["graph"] = g = load_graph(args.graph)
        sample = (args.sample_size, 0) if args.sample_size else None
        print("# graph statistics")
        print(small_world_report(g, sample).to_text(), end="")
        if "V.écorcer" in g:
            print("# neighbourhood of V.écorcer, 3 steps")
            for e in diam(g, "V.écorcer", 3, 100):
                print(f"{e.rank}\t{e.label}\t{e.probability:.12g}")
    if args.noun_graph:
        graphs["noun_graph"] = load_graph(args.noun_graph)

    if not (args.triples and graphs):
        return
    store = build_store(args.triples, args.lemma_freq)
    print("# resolution examples")
    for text, radius, which in EXAMPLES:
        if which not in graphs:
            continue
        result = resolve(graphs[which], store, MetaphorQuery.parse(text, radius=radius))
        sols = ", ".join(f"{s.label} (count {s.triple_count}, rank {s.proxemic_rank})"
                         for s in result) or result.diagnostic.value
        print(f"{text} gamma={radius}: {sols}")

    if args.gold and "graph" in graphs:
        gold = load_gold(args.gold, radius=40)
        for title, tags in (("all queries", ()), ("without troponymic", ("troponymic",))):
            print(f"# evaluation, {title}")
            report = evaluate(graphs["graph"], store, gold, 3, tags)
            print("\n".join(report.to_text().splitlines()[:4]))


if __name__ == "__main__":
    main()
