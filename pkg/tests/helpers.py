"""Shared test utilities: converters, independent oracles, graph catalogs."""

from __future__ import annotations

import random

import networkx as nx

from spanlab import Graph, random_connected_graph


def nx_to_graph(gx) -> Graph:
    """Convert a networkx graph with arbitrary node names to a Graph."""
    nodes = sorted(gx.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in gx.edges()]
    return Graph(len(nodes), edges)


def connected_atlas(max_n: int) -> list[Graph]:
    """Every connected graph with 1 <= n <= max_n, one per isomorphism class."""
    out = []
    for gx in nx.graph_atlas_g():
        if 1 <= gx.number_of_nodes() <= max_n and nx.is_connected(gx):
            out.append(nx_to_graph(gx))
    return out


def all_trees(max_n: int) -> list[Graph]:
    out = [Graph(1), Graph(2, [(0, 1)])]
    for n in range(3, max_n + 1):
        out.extend(nx_to_graph(t) for t in nx.nonisomorphic_trees(n))
    return out


def random_graphs(count: int, min_n: int, max_n: int, seed: int) -> list[Graph]:
    """Seeded batch of random connected graphs with n drawn uniformly."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        out.append(random_connected_graph(n, p=rng.choice((0.3, 0.5, 0.7)),
                                          seed=seed * 100003 + i))
    return out


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Independent all-pairs distances, for checking the BFS-based matrix."""
    big = float("inf")
    d = [[0 if i == j else big for j in range(g.n)] for i in range(g.n)]
    for u in range(g.n):
        for v in g.adj[u]:
            d[u][v] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d
