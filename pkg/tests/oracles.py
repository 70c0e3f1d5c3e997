"""Brute-force reference implementations and random-graph builders for tests.

Everything here is deliberately naive (dense matrices, triple loops) and
shares no code with the library's production paths.
"""

from __future__ import annotations

import math

import numpy as np

from cliquenet.graph import Graph


def dense_adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.node_count, g.node_count), dtype=bool)
    for u, v in g.edges():
        a[u, v] = True
        a[v, u] = True
    return a


def floyd_warshall_mean_distance(g: Graph) -> float:
    """Mean ordered-pair geodesic length via the O(N^3) distance matrix."""
    n = g.node_count
    dist = np.full((n, n), math.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v in g.edges():
        dist[u, v] = 1.0
        dist[v, u] = 1.0
    for k in range(n):
        for i in range(n):
            dik = dist[i, k]
            if math.isinf(dik):
                continue
            for j in range(n):
                if dik + dist[k, j] < dist[i, j]:
                    dist[i, j] = dik + dist[k, j]
    off_diag = dist[~np.eye(n, dtype=bool)]
    if np.isinf(off_diag).any():
        raise ValueError("disconnected graph")
    return int(off_diag.sum()) / (n * (n - 1))


def naive_local_clustering(g: Graph) -> list[float]:
    """c_i by a double loop over neighbor pairs on the dense matrix."""
    a = dense_adjacency(g)
    out = []
    for i in range(g.node_count):
        nbrs = np.nonzero(a[i])[0]
        k = len(nbrs)
        if k < 2:
            out.append(0.0)
            continue
        e = 0
        for x in range(k):
            for y in range(x + 1, k):
                if a[nbrs[x], nbrs[y]]:
                    e += 1
        out.append(2 * e / (k * (k - 1)))
    return out


def random_connected_graph(rng: np.random.Generator, min_nodes: int = 2,
                           max_nodes: int = 8) -> Graph:
    """Uniform-ish random connected graph: random tree plus random extra edges."""
    n = int(rng.integers(min_nodes, max_nodes + 1))
    g = Graph(n)
    for v in range(1, n):
        g.add_edge_if_absent(int(rng.integers(v)), v)
    extras = int(rng.integers(0, n * (n - 1) // 2 - (n - 1) + 1))
    for _ in range(extras):
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        if u != v:
            g.add_edge_if_absent(u, v)
    return g


def star_graph(leaves: int) -> Graph:
    g = Graph(leaves + 1)
    for v in range(1, leaves + 1):
        g.add_edge_if_absent(0, v)
    return g


def path_graph(n: int) -> Graph:
    g = Graph(n)
    for v in range(1, n):
        g.add_edge_if_absent(v - 1, v)
    return g


def complete_graph(n: int) -> Graph:
    g = Graph(n)
    g.complete_subgraph(list(range(n)))
    return g
