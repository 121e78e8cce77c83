"""Writes tests/data/n10_mindeg5.g6: 10-vertex graphs with minimum degree >= 5
and connectivity >= 2, for f-table runs beyond the built-in enumeration.

Deterministic: fixed seeds, output sorted and deduplicated up to isomorphism.
"""

import pathlib
import random

import networkx as nx

N = 10
MIN_DEGREE = 5


def candidates(rng):
    yield nx.complete_graph(N)
    yield nx.complete_bipartite_graph(5, 5)
    yield nx.complement(nx.disjoint_union(nx.complete_graph(5), nx.complete_graph(5)))
    for d in (5, 6, 7, 8):
        for seed in range(12):
            yield nx.random_regular_graph(d, N, seed=seed + 100 * d)
    # Complements of sparse graphs (max degree <= 4) have minimum degree >= 5.
    for seed in range(40):
        h = nx.gnm_random_graph(N, rng.randint(5, 18), seed=seed)
        if max((deg for _, deg in h.degree()), default=0) <= 4:
            yield nx.complement(h)
    # K_{5,5} plus a few edges inside one side.
    for extra in range(1, 6):
        g = nx.complete_bipartite_graph(5, 5)
        for i in range(extra):
            g.add_edge(i, (i + 1) % 5)
        yield g


def main():
    rng = random.Random(2024)
    kept = []
    for g in candidates(rng):
        g = nx.convert_node_labels_to_integers(g)
        if min(d for _, d in g.degree()) < MIN_DEGREE or nx.node_connectivity(g) < 2:
            continue
        if any(nx.is_isomorphic(g, h) for h in kept):
            continue
        kept.append(g)
    words = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in kept)
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "n10_mindeg5.g6"
    out.write_text(">>graph6<<\n" + "\n".join(words) + "\n")
    print(f"{len(words)} graphs -> {out}")


if __name__ == "__main__":
    main()
