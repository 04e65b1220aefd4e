#!/usr/bin/env python3
"""Write every regular graph on 1..8 vertices, up to isomorphism, as graph6 lines.

Labeled r-regular graphs are enumerated edge by edge with degree bounds, then
deduplicated with networkx isomorphism tests inside Weisfeiler-Lehman hash buckets.
Degrees above (n-1)/2 come from complements of the lower-degree graphs.
"""

import itertools
import sys

import networkx as nx


def labeled_regular(n, r):
    pairs = list(itertools.combinations(range(n), 2))
    degree = [0] * n
    chosen = []

    def rec(i):
        if i == len(pairs):
            if all(d == r for d in degree):
                yield list(chosen)
            return
        u, v = pairs[i]
        # Every pair (u, w) with w > v is still undecided; u must still be fillable.
        if degree[u] < r and degree[v] < r:
            degree[u] += 1
            degree[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            degree[u] -= 1
            degree[v] -= 1
        if v == n - 1 and degree[u] != r:
            return
        yield from rec(i + 1)

    yield from rec(0)


def unique(graphs):
    buckets = {}
    for g in graphs:
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return [g for bucket in buckets.values() for g in bucket]


def main():
    out = []
    for n in range(1, 9):
        by_degree = {}
        for r in range(0, n):
            if (n * r) % 2:
                continue
            if r > (n - 1) / 2 and (n - 1 - r) in by_degree:
                by_degree[r] = [nx.complement(g) for g in by_degree[n - 1 - r]]
                continue
            graphs = []
            for edges in labeled_regular(n, r):
                g = nx.empty_graph(n)
                g.add_edges_from(edges)
                graphs.append(g)
            by_degree[r] = unique(graphs)
        for r in sorted(by_degree):
            for g in sorted(by_degree[r], key=lambda g: nx.to_graph6_bytes(g, header=False)):
                out.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
