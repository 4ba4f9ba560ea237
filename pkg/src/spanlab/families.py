"""Deterministic graph families, seeded random generators, and fixtures.

A family spec is a string like ``cycle:5``, ``random:8``, ``random:8:0.4:7``
(n, edge probability, seed), ``random_interval:9:3``, or ``fixture:figure1``.
A seed embedded in the spec wins over the ``seed`` argument.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import Graph, is_connected


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, list(combinations(range(n), 2)))


def star_graph(n: int) -> Graph:
    """Centre 0 with n leaves."""
    if n < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def subdivided_star(n: int) -> Graph:
    """Star with n rays, every ray subdivided once: 2n+1 vertices."""
    if n < 0:
        raise ValueError("ray count must be non-negative")
    edges = []
    for i in range(n):
        mid, leaf = 1 + 2 * i, 2 + 2 * i
        edges.append((0, mid))
        edges.append((mid, leaf))
    return Graph(2 * n + 1, edges)


def random_connected_graph(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    """G(n, p) resampled until connected (deterministic for a seed)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(100000):
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise ValueError(f"no connected sample for n={n}, p={p} in 100000 draws")


def random_interval_graph(n: int, seed: int = 0) -> Graph:
    """Intersection graph of n random closed intervals with distinct integer
    endpoints, resampled until connected."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    for _ in range(100000):
        points = rng.sample(range(8 * n), 2 * n)
        ivs = [tuple(sorted(points[2 * i:2 * i + 2])) for i in range(n)]
        edges = [(a, b) for a, b in combinations(range(n), 2)
                 if ivs[a][0] <= ivs[b][1] and ivs[b][0] <= ivs[a][1]]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise ValueError(f"no connected interval sample for n={n} in 100000 draws")


def _figure1() -> Graph:
    # path p0-p1-p2-p3; L sees the whole path; R sees only p1, p2
    edges = [(0, 1), (1, 2), (2, 3),
             (4, 0), (4, 1), (4, 2), (4, 3),
             (5, 1), (5, 2)]
    return Graph(6, edges, ["p0", "p1", "p2", "p3", "L", "R"])


def _figure2() -> Graph:
    # induced 4-cycle 0-1-2-3-0, hub 4 on all of it, triangle pair 5-6
    # hanging off the hub, tip 7 on the pair
    edges = [(0, 1), (1, 2), (2, 3), (0, 3),
             (0, 4), (1, 4), (2, 4), (3, 4),
             (4, 5), (4, 6), (5, 6),
             (5, 7), (6, 7)]
    return Graph(8, edges)


def _figure3() -> Graph:
    # labels 1..8; 8 is fully joined to the clique cut set {2, 4, 5}
    pairs = [(1, 2), (2, 3), (3, 6), (6, 5), (5, 4), (4, 1),
             (4, 2), (2, 5), (5, 3), (3, 4),
             (4, 7), (7, 2), (7, 3),
             (2, 8), (4, 8), (5, 8)]
    return Graph(8, [(a - 1, b - 1) for a, b in pairs],
                 [str(i) for i in range(1, 9)])


FIXTURES = {
    "figure1": _figure1,
    "figure2": _figure2,
    "figure3": _figure3,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; have {sorted(FIXTURES)}") from None


def generate_family(spec: str, seed: int | None = None) -> Graph:
    """Build the graph named by a family spec string."""
    name, _, rest = spec.strip().partition(":")
    args = rest.split(":") if rest else []
    name = name.strip().lower().replace("-", "_")

    def int_arg(i: int, what: str) -> int:
        if len(args) <= i:
            raise ValueError(f"family {name!r} needs {what}")
        try:
            return int(args[i])
        except ValueError:
            raise ValueError(f"family {name!r}: bad {what} {args[i]!r}") from None

    if name == "fixture":
        if len(args) != 1:
            raise ValueError("fixture spec is fixture:NAME")
        return fixture(args[0])
    if name == "path":
        return path_graph(int_arg(0, "a vertex count"))
    if name == "cycle":
        return cycle_graph(int_arg(0, "a vertex count"))
    if name == "complete":
        return complete_graph(int_arg(0, "a vertex count"))
    if name == "star":
        return star_graph(int_arg(0, "a leaf count"))
    if name == "subdivided_star":
        return subdivided_star(int_arg(0, "a ray count"))
    if name in ("random", "random_connected"):
        n = int_arg(0, "a vertex count")
        p = 0.5
        if len(args) > 1:
            try:
                p = float(args[1])
            except ValueError:
                raise ValueError(f"family {name!r}: bad probability {args[1]!r}") from None
        s = int_arg(2, "a seed") if len(args) > 2 else (seed if seed is not None else 0)
        return random_connected_graph(n, p, s)
    if name in ("interval", "random_interval"):
        n = int_arg(0, "a vertex count")
        s = int_arg(1, "a seed") if len(args) > 1 else (seed if seed is not None else 0)
        return random_interval_graph(n, s)
    raise ValueError(f"unknown family {name!r}")
