"""Write every connected 8-vertex graph (up to isomorphism) as graph6 lines.

Every connected graph has a vertex whose removal leaves it connected, so
extending each connected 7-vertex atlas graph by one vertex in every
possible way reaches all of them.  Duplicates are removed with a
Weisfeiler-Lehman hash bucket followed by exact isomorphism tests.

    python3 scripts/gen_small_graphs.py tests/data/connected8.g6
"""

import itertools
import sys
from collections import defaultdict

import networkx as nx

EXPECTED = 11117


def main(out_path: str) -> None:
    bases = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7 and nx.is_connected(h)]
    buckets: dict[str, list[nx.Graph]] = defaultdict(list)
    found: list[nx.Graph] = []
    for base in bases:
        for k in range(1, 8):
            for nbrs in itertools.combinations(range(7), k):
                h = base.copy()
                h.add_edges_from((7, v) for v in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                if any(nx.is_isomorphic(h, other) for other in buckets[key]):
                    continue
                buckets[key].append(h)
                found.append(h)
    if len(found) != EXPECTED:
        raise SystemExit(f"expected {EXPECTED} graphs, got {len(found)}")
    found.sort(key=lambda h: (h.number_of_edges(), sorted(h.edges)))
    with open(out_path, "wb") as fh:
        for h in found:
            fh.write(nx.to_graph6_bytes(h, header=False))
    print(f"wrote {len(found)} graphs to {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected8.g6")
