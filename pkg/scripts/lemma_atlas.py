"""Spreading and claim checks on every unlabelled graph of the networkx atlas, for every removed set H.

    python3 scripts/lemma_atlas.py --max-n 7
"""

import argparse
import sys
import time
from collections import Counter

import networkx as nx

from circumference.graph_core import Graph
from circumference.verification import lemma_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--level", choices=("lemmas", "claims", "all"), default="all")
    args = ap.parse_args()

    t0 = time.time()
    counts: Counter = Counter()
    failures = []
    graphs = 0
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > args.max_n:
            break
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        graphs += 1
        for r in lemma_checks(g, args.level, extra_removed=range(1, 1 << g.n)):
            counts[(r.name, r.status)] += 1
            if r.failed:
                failures.append((nx.to_graph6_bytes(h, header=False).decode().strip(), r.to_dict()))
    for (name, status), k in sorted(counts.items()):
        print(f"{name:22s} {status:15s} {k}")
    print(f"{graphs} graphs, {len(failures)} failures, {time.time() - t0:.1f}s")
    for g6, rec in failures[:10]:
        print(g6, rec)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
