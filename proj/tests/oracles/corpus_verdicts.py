#!/usr/bin/env python3
"""Brute-force D-magic verdicts for every graph in data/regular_upto8.g6.

Independent of the C++ library: distances come from networkx, and every permutation of
1..n is tried with numpy. Output lines are "graph6 D verdict k", where D is written
like 0,1 and verdict is magic or not_magic (k is - when not magic).
"""

import itertools
import pathlib
import sys

import networkx as nx
import numpy as np

DISTANCE_SETS = [(1,), (0, 1), (2,), (0, 2)]


def verdict(g, d):
    n = g.number_of_nodes()
    dist = dict(nx.all_pairs_shortest_path_length(g))
    m = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            if y in dist[x] and dist[x][y] in d:
                m[x, y] = 1
    perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    weights = perms @ m.T
    ok = np.all(weights == weights[:, :1], axis=1)
    hits = np.nonzero(ok)[0]
    if len(hits) == 0:
        return None
    return int(weights[hits[0], 0])


def main():
    root = pathlib.Path(__file__).resolve().parents[2]
    lines = []
    for raw in (root / "data" / "regular_upto8.g6").read_text().split():
        g = nx.from_graph6_bytes(raw.encode())
        for d in DISTANCE_SETS:
            k = verdict(g, d)
            name = ",".join(map(str, d))
            lines.append(f"{raw} {name} {'magic' if k is not None else 'not_magic'} {k if k is not None else '-'}")
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
