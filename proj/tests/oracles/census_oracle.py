"""Independent reference for the census: networkx graph atlas (n <= 7) plus
one-vertex extensions of every 7-vertex graph for n = 8, filtered numerically
and deduplicated with networkx isomorphism. Writes the files in tests/data."""

import pathlib
from collections import Counter, defaultdict

import networkx as nx
import numpy as np

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def two_main_pair(A):
    n = len(A)
    d = A.sum(1)
    if d.min() == d.max():
        return None
    s = A @ d
    M = np.vstack([d, np.ones(n)]).T
    sol = np.linalg.lstsq(M, s, rcond=None)[0]
    if np.abs(M @ sol - s).max() > 1e-8:
        return None
    return round(sol[0]), round(sol[1])


def main():
    atlas = [G for G in nx.graph_atlas_g() if G.number_of_nodes() >= 1]
    with open(DATA / "atlas_upto7.g6", "w") as f:
        for G in atlas:
            f.write(nx.to_graph6_bytes(G, header=False).decode())

    counts = Counter()
    for G in atlas:
        n = G.number_of_nodes()
        if n < 2 or not nx.is_connected(G):
            continue
        pair = two_main_pair(nx.to_numpy_array(G, nodelist=range(n)))
        if pair:
            counts[(n, *pair)] += 1

    seen = defaultdict(list)
    for H in (G for G in atlas if G.number_of_nodes() == 7):
        A7 = nx.to_numpy_array(H, nodelist=range(7))
        for S in range(1, 128):
            A = np.zeros((8, 8))
            A[:7, :7] = A7
            for v in range(7):
                if S >> v & 1:
                    A[v, 7] = A[7, v] = 1
            pair = two_main_pair(A)
            if not pair:
                continue
            G = nx.from_numpy_array(A)
            if not nx.is_connected(G):
                continue
            h = nx.weisfeiler_lehman_graph_hash(G)
            if any(nx.is_isomorphic(G, K) for K in seen[h]):
                continue
            seen[h].append(G)
            counts[(8, *pair)] += 1

    with open(DATA / "census_signatures.tsv", "w") as f:
        for (n, a, b), c in sorted(counts.items()):
            f.write(f"{n}\t{a}\t{b}\t{c}\n")


if __name__ == "__main__":
    main()
