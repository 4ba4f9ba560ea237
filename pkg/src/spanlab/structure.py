"""Structure toolkit: chordality, asteroidal triples, interval certificates,
end-cliques, minimal cut sets, lobes, and clique-coupled augmentation.

Everything here is exact and desk-scale: lexicographic BFS plus a direct
perfect-elimination check for chordality, brute force over independent
triples for asteroidal triples, and a pruned backtracking search over
maximal-clique orderings for interval representations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import CapacityError
from .graphs import Graph, components, fresh_labels, induced_subgraph, is_connected


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    adj = [set(a) for a in g.adj]
    out: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda w: len(p & adj[w]))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        expand(set(), set(range(g.n)), set())
    return sorted(out)


def _lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS order; ties broken by least index."""
    label: list[list[int]] = [[] for _ in range(g.n)]
    placed = [False] * g.n
    order = []
    for step in range(g.n):
        best = -1
        for v in range(g.n):
            if not placed[v] and (best < 0 or label[v] > label[best]):
                best = v
        placed[best] = True
        order.append(best)
        for w in g.adj[best]:
            if not placed[w]:
                # appended values decrease with time, keeping lists comparable
                label[w].append(g.n - step)
    return order


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    elimination_order: tuple[int, ...] | None
    chordless_cycle: tuple[int, ...] | None


def _find_chordless_cycle(g: Graph) -> tuple[int, ...]:
    """Some chordless cycle of length >= 4 in a non-chordal graph.

    If v has non-adjacent neighbours u, w, a shortest u-w path avoiding the
    rest of N[v] closes a chordless cycle through v; such a triple exists
    whenever any chordless cycle does.
    """
    for v in range(g.n):
        nv = g.adj[v]
        for u, w in combinations(nv, 2):
            if g.has_edge(u, w):
                continue
            allowed = set(range(g.n)) - {v} - (set(nv) - {u, w})
            parent = {u: -1}
            queue = deque([u])
            while queue:
                x = queue.popleft()
                if x == w:
                    break
                for y in g.adj[x]:
                    if y in allowed and y not in parent:
                        parent[y] = x
                        queue.append(y)
            if w not in parent:
                continue
            path = [w]
            while path[-1] != u:
                path.append(parent[path[-1]])
            return tuple([v] + path[::-1])
    raise AssertionError("no chordless cycle found in a non-chordal graph")


def is_chordal(g: Graph) -> ChordalityResult:
    """Chordality with a certificate either way.

    A graph is chordal iff the reverse of a lexicographic BFS order is a
    perfect elimination ordering; on failure a chordless cycle is extracted.
    """
    order = _lex_bfs_order(g)[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return ChordalityResult(False, None, _find_chordless_cycle(g))
    return ChordalityResult(True, tuple(order), None)


def find_asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    """Least independent triple whose pairs connect outside the closed
    neighbourhood of the third vertex, or None."""
    comp_id = []
    for z in range(g.n):
        banned = set(g.adj[z]) | {z}
        cid = [-1] * g.n
        mark = 0
        for s in range(g.n):
            if s in banned or cid[s] >= 0:
                continue
            cid[s] = mark
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in g.adj[x]:
                    if y not in banned and cid[y] < 0:
                        cid[y] = mark
                        queue.append(y)
            mark += 1
        comp_id.append(cid)
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        if (comp_id[c][a] == comp_id[c][b] >= 0
                and comp_id[b][a] == comp_id[b][c] >= 0
                and comp_id[a][b] == comp_id[a][c] >= 0):
            return (a, b, c)
    return None


def _consecutive_clique_ordering(cliques: list[tuple[int, ...]], n: int,
                                 first: int | None = None) -> list[int] | None:
    """Order clique indices so each vertex's cliques sit consecutively.

    Backtracking with the one pruning rule that matters: a clique may be
    placed only if every currently open vertex belongs to it.
    """
    member = [set(c) for c in cliques]
    total = [0] * n
    for c in member:
        for v in c:
            total[v] += 1
    placed = [0] * n
    open_set: set[int] = set()
    seq: list[int] = []
    used = [False] * len(cliques)

    def put(ci: int) -> None:
        used[ci] = True
        seq.append(ci)
        for v in member[ci]:
            placed[v] += 1
            if placed[v] == total[v]:
                open_set.discard(v)
            else:
                open_set.add(v)

    def take(ci: int) -> None:
        used[ci] = False
        seq.pop()
        for v in member[ci]:
            if placed[v] == total[v]:
                open_set.add(v)
            placed[v] -= 1
            if placed[v] == 0:
                open_set.discard(v)

    def rec() -> bool:
        if len(seq) == len(cliques):
            return True
        for ci in range(len(cliques)):
            if used[ci] or not open_set <= member[ci]:
                continue
            put(ci)
            if rec():
                return True
            take(ci)
        return False

    if first is not None:
        put(first)
    if rec():
        return list(seq)
    return None


@dataclass(frozen=True)
class IntervalCertificate:
    """Recognition flag plus a checkable witness.

    Positive: closed intervals with distinct integer endpoints, one per
    vertex, intersecting iff the vertices are adjacent.  Negative: either a
    chordless cycle of length >= 4 or an asteroidal triple.
    """

    is_interval: bool
    intervals: tuple[tuple[int, int], ...] | None
    chordless_cycle: tuple[int, ...] | None
    asteroidal_triple: tuple[int, int, int] | None


def is_interval(g: Graph) -> bool:
    """Interval recognition without building a representation (no cap)."""
    return is_chordal(g).chordal and find_asteroidal_triple(g) is None


def interval_certificate(g: Graph, cap: int = 12) -> IntervalCertificate:
    chord = is_chordal(g)
    if not chord.chordal:
        return IntervalCertificate(False, None, chord.chordless_cycle, None)
    at = find_asteroidal_triple(g)
    if at is not None:
        return IntervalCertificate(False, None, None, at)
    if g.n > cap:
        raise CapacityError(
            f"graph is interval (is_interval=True) but a representation is "
            f"only built for n <= {cap}, got n={g.n}"
        )
    cliques = maximal_cliques(g)
    ordering = _consecutive_clique_ordering(cliques, g.n)
    if ordering is None:
        raise AssertionError("chordal AT-free graph must admit a consecutive clique ordering")
    pos = {ci: i for i, ci in enumerate(ordering)}
    first = [len(cliques)] * g.n
    last = [-1] * g.n
    for ci, c in enumerate(cliques):
        for v in c:
            first[v] = min(first[v], pos[ci])
            last[v] = max(last[v], pos[ci])
    # distinct integer endpoints: block of width 2n+2 per clique position,
    # left ends in the low half, right ends in the high half
    block = 2 * g.n + 2
    left_rank: dict[int, int] = {}
    right_rank: dict[int, int] = {}
    intervals = []
    for v in range(g.n):
        lr = left_rank.get(first[v], 0)
        left_rank[first[v]] = lr + 1
        rr = right_rank.get(last[v], 0)
        right_rank[last[v]] = rr + 1
        intervals.append((first[v] * block + 1 + lr,
                          last[v] * block + g.n + 1 + rr))
    return IntervalCertificate(True, tuple(intervals), None, None)


def end_cliques(g: Graph, cap: int = 12) -> list[tuple[int, ...]]:
    """Maximal cliques that can head a consecutive clique ordering and own a
    simplicial vertex lying in no other maximal clique.

    Placeable first and placeable last coincide (reverse the ordering), so
    only one direction is searched.
    """
    if not is_interval(g):
        raise ValueError("end-cliques are defined for interval graphs only")
    if g.n > cap:
        raise CapacityError(f"end-clique search is capped at n <= {cap}, got n={g.n}")
    cliques = maximal_cliques(g)
    found = []
    for ci, c in enumerate(cliques):
        if not any(set(g.adj[v]) | {v} == set(c) for v in c):
            continue
        if _consecutive_clique_ordering(cliques, g.n, first=ci) is not None:
            found.append(c)
    return found


@dataclass(frozen=True)
class CutSet:
    vertices: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    is_clique: bool


@dataclass(frozen=True)
class CutSetCatalog:
    graph: Graph
    sets: tuple[CutSet, ...]
    size_cap: int


def _clique_in(g: Graph, vs: tuple[int, ...]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def minimal_cut_sets(g: Graph, cap: int = 4) -> CutSetCatalog:
    """All minimal cut sets of size <= cap, by exhaustive enumeration.

    Minimality is the definition itself: no proper subset disconnects.  The
    one-smaller shortcut would be wrong, since removing extra vertices can
    reconnect a graph.
    """
    if not is_connected(g):
        raise ValueError("cut sets are catalogued for connected graphs only")

    cut_cache: dict[tuple[int, ...], bool] = {}

    def disconnects(vs: tuple[int, ...]) -> bool:
        if vs not in cut_cache:
            rest = [v for v in range(g.n) if v not in set(vs)]
            cut_cache[vs] = len(components(induced_subgraph(g, rest))) > 1 if rest else False
        return cut_cache[vs]

    found = []
    for size in range(1, min(cap, g.n - 2) + 1):
        for vs in combinations(range(g.n), size):
            if not disconnects(vs):
                continue
            if any(disconnects(sub)
                   for r in range(1, size)
                   for sub in combinations(vs, r)):
                continue
            rest = [v for v in range(g.n) if v not in set(vs)]
            sub = induced_subgraph(g, rest)
            comps = tuple(tuple(rest[i] for i in comp) for comp in components(sub))
            found.append(CutSet(vertices=vs, components=comps, is_clique=_clique_in(g, vs)))
    return CutSetCatalog(graph=g, sets=tuple(found), size_cap=min(cap, g.n - 2))


def s_lobes(g: Graph, s: list[int] | tuple[int, ...]) -> list[Graph]:
    """Induced subgraphs on S together with one component of g - S each.

    When S is not a cut set there is exactly one lobe: the graph itself.
    """
    s_set = set(s)
    for v in s_set:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    rest = [v for v in range(g.n) if v not in s_set]
    comps = components(induced_subgraph(g, rest)) if rest else []
    if len(comps) <= 1:
        return [g]
    return [induced_subgraph(g, sorted(s_set | {rest[i] for i in comp})) for comp in comps]


def augment(g: Graph, s: list[int] | tuple[int, ...], h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between S and V(h)."""
    if h.n == 0:
        raise ValueError("augmentation needs a non-empty graph")
    s_set = sorted(set(s))
    for v in s_set:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    labels = list(g.labels) + fresh_labels(g.labels, h.labels)
    off = g.n
    edges = list(g.edges())
    edges.extend((u + off, v + off) for u, v in h.edges())
    edges.extend((u, w + off) for u in s_set for w in range(h.n))
    return Graph(g.n + h.n, edges, labels)
