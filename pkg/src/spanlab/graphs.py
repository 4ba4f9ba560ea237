"""Graph core: immutable labelled graphs, text formats, and classical metrics.

Vertices are always addressed by index 0..n-1 in a fixed order; the string
labels only matter at the I/O boundary (walk listings, CLI output).  All
operations treat Graph values as immutable, so results may share tuples with
their inputs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphParseError

INFINITY = math.inf

_GRAPH6_HEADER = ">>graph6<<"


class Graph:
    """Undirected simple graph with ordered vertices and distinct labels."""

    __slots__ = ("n", "labels", "adj", "_label_index", "_dist")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.labels = labels
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._label_index = {lab: i for i, lab in enumerate(labels)}
        self._dist: tuple[tuple[float, ...], ...] | None = None

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once as (u, v) with u < v, in index order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[str(label)]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Metrics:
    """All-pairs hop distances and the derived classical invariants.

    Unreachable pairs carry the infinity sentinel; ``girth`` is infinite for
    acyclic graphs.
    """

    dist: tuple[tuple[float, ...], ...]
    ecc: tuple[float, ...]
    radius: float
    diameter: float
    girth: float


def _bfs_row(adj: Sequence[Sequence[int]], src: int, skip: tuple[int, int] | None = None) -> list[float]:
    """Hop distances from src; ``skip`` suppresses one undirected edge."""
    row: list[float] = [INFINITY] * len(adj)
    row[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = row[u]
        for v in adj[u]:
            if skip is not None and {u, v} == {skip[0], skip[1]}:
                continue
            if row[v] == INFINITY:
                row[v] = du + 1
                queue.append(v)
    return row


def distance_matrix(g: Graph) -> tuple[tuple[float, ...], ...]:
    """All-pairs hop distances, cached on the graph object."""
    if g._dist is None:
        g._dist = tuple(tuple(_bfs_row(g.adj, s)) for s in range(g.n))
    return g._dist


def metrics(g: Graph) -> Metrics:
    dist = distance_matrix(g)
    ecc = tuple(max(row) if row else 0 for row in dist)
    radius = min(ecc) if ecc else 0
    diameter = max(ecc) if ecc else 0
    # shortest cycle through each edge: 1 + shortest path between its ends
    # that avoids the edge itself
    girth: float = INFINITY
    for u, v in g.edges():
        detour = _bfs_row(g.adj, u, skip=(u, v))[v]
        if detour + 1 < girth:
            girth = detour + 1
    return Metrics(dist=dist, ecc=ecc, radius=radius, diameter=diameter, girth=girth)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted index tuples, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# --- text formats -----------------------------------------------------------


def parse_graph(text: str, fmt: str) -> Graph:
    """Decode ``text`` in the named format ("graph6" or "edgelist")."""
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 input", line=1)
    if any(ch in "\r\n" for ch in s):
        raise GraphParseError("graph6 input must be a single line", line=2)
    data = []
    for i, ch in enumerate(s):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphParseError(f"invalid graph6 character {ch!r}", line=1, offset=i)
        data.append(val)
    if data[0] <= 62:
        n, idx = data[0], 1
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    elif len(data) >= 8:
        n = 0
        for v in data[2:8]:
            n = (n << 6) | v
        idx = 8
    else:
        raise GraphParseError("truncated graph6 size field", line=1, offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - idx != need:
        raise GraphParseError(
            f"graph6 body for n={n} needs {need} characters, got {len(data) - idx}",
            line=1,
            offset=idx,
        )
    bits = 0
    for v in data[idx:]:
        bits = (bits << 6) | v
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise GraphParseError("non-zero padding bits in graph6 body", line=1, offset=len(s) - 1)
    bits >>= pad
    edges = []
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((i, j))
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> (6 * k)) & 63 for k in range(5, -1, -1)]
    bits = 0
    nbits = n * (n - 1) // 2
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if g.has_edge(i, j):
                bits |= 1 << pos
    need = (nbits + 5) // 6
    bits <<= need * 6 - nbits
    body = [(bits >> (6 * k)) & 63 for k in range(need - 1, -1, -1)]
    return "".join(chr(v + 63) for v in head + body)


def parse_edgelist(text: str) -> Graph:
    """One edge per line as two whitespace-separated vertex indices."""
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two vertex indices, got {len(parts)} tokens", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("vertex indices must be non-negative", line=lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u} rejected", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key} rejected", line=lineno)
        seen.add(key)
        edges.append((u, v))
        top = max(top, u, v)
    return Graph(top + 1, edges)


# --- constructions ----------------------------------------------------------


def fresh_labels(taken: Iterable[str], wanted: Sequence[str]) -> list[str]:
    """Labels for vertices entering an existing graph.

    Keeps each wanted label when free, otherwise substitutes the smallest
    unused decimal string, so unions stay deterministic.
    """
    used = set(taken)
    out = []
    counter = 0
    for lab in wanted:
        if lab not in used:
            out.append(lab)
            used.add(lab)
            continue
        while str(counter) in used:
            counter += 1
        out.append(str(counter))
        used.add(str(counter))
    return out


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two sides."""
    labels = list(g.labels) + fresh_labels(g.labels, h.labels)
    edges = list(g.edges())
    off = g.n
    edges.extend((u + off, v + off) for u, v in h.edges())
    edges.extend((u, v + off) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges, labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given indices, keeping g's order and labels."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    back = {v: i for i, v in enumerate(vs)}
    edges = [(back[u], back[v]) for u, v in g.edges() if u in back and v in back]
    return Graph(len(vs), edges, [g.labels[v] for v in vs])
