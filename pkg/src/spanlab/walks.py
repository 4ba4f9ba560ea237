"""Shortest covering walks in thresholded products, plus walk-pair validation.

A cover state packs (pair code, visited set of player A, visited set of
player B) into one integer: ``code << 2n | maskA << n | maskB``.  Forward
BFS over these states from every vertex of every good component gives the
minimum number of moves; a backward pass over the reachable states then
yields goal distances, from which the lexicographically least optimal walk
is rebuilt greedily (smallest pair code first at every choice).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Graph, distance_matrix, is_connected
from .products import ProductGraph, Rule, as_rule, build_product, safety_subgraph
from .spans import good_components, vertex_span


@dataclass(frozen=True)
class WalkPair:
    """Two equal-length walks given by vertex labels, one per player."""

    alice: tuple[str, ...]
    bob: tuple[str, ...]
    rule: Rule
    safety: int
    moves: int

    def as_dict(self) -> dict:
        return {
            "alice": list(self.alice),
            "bob": list(self.bob),
            "rule": self.rule.value,
            "safety": self.safety,
            "moves": self.moves,
        }


@dataclass(frozen=True)
class WalkValidation:
    """Outcome of checking a walk pair against a graph and a threshold."""

    legal: bool
    illegal_steps: tuple[int, ...]
    alice_surjective: bool
    bob_surjective: bool
    missing_alice: tuple[str, ...]
    missing_bob: tuple[str, ...]
    safety: int
    meets_threshold: bool
    valid: bool


@dataclass(frozen=True)
class MinWalkResult:
    span: int
    moves: int
    pair: WalkPair
    product_walk: tuple[int, ...]


def shortest_covering_walk(p: ProductGraph) -> tuple[int, tuple[int, ...]] | None:
    """Minimum moves and the lexicographically least optimal product walk.

    Returns None when the product has no good component, i.e. no single
    walk can cover all base vertices in both projections.
    """
    comps = good_components(p)
    if not comps:
        return None
    n = p.base.n
    shift = 2 * n
    mask_all = (1 << shift) - 1
    adj = p.adj

    dist_f: dict[int, int] = {}
    seeds = []
    for comp in comps:
        for code in comp:
            u, v = divmod(code, n)
            s = (code << shift) | (1 << (n + u)) | (1 << v)
            if s not in dist_f:
                dist_f[s] = 0
                seeds.append(s)

    # forward BFS, stopping once the first layer containing a goal is complete
    moves = None
    if any((s & mask_all) == mask_all for s in seeds):
        moves = 0
    frontier = seeds
    depth = 0
    while moves is None and frontier:
        depth += 1
        nxt = []
        hit = False
        for s in frontier:
            code = s >> shift
            rest = s & mask_all
            for b in adj[code]:
                u2, v2 = divmod(b, n)
                t = (b << shift) | rest | (1 << (n + u2)) | (1 << v2)
                if t not in dist_f:
                    dist_f[t] = depth
                    nxt.append(t)
                    if t & mask_all == mask_all:
                        hit = True
        if hit:
            moves = depth
        frontier = nxt
    if moves is None:
        raise AssertionError("a good component always admits a covering walk")

    # backward BFS over forward-reachable states only: goal distance g
    goal_dist: dict[int, int] = {}
    frontier = [s for s, d in dist_f.items() if d == moves and s & mask_all == mask_all]
    for s in frontier:
        goal_dist[s] = 0
    depth = 0
    low_n = (1 << n) - 1
    while frontier:
        depth += 1
        nxt = []
        for s in frontier:
            code = s >> shift
            m_a = (s >> n) & low_n
            m_b = s & low_n
            u, v = divmod(code, n)
            bit_a, bit_b = 1 << u, 1 << v
            for a in adj[code]:
                u2, v2 = divmod(a, n)
                for pa in (m_a, m_a ^ bit_a):
                    if not pa & (1 << u2):
                        continue
                    for pb in (m_b, m_b ^ bit_b):
                        if not pb & (1 << v2):
                            continue
                        t = (a << shift) | (pa << n) | pb
                        if t not in goal_dist and t in dist_f:
                            goal_dist[t] = depth
                            nxt.append(t)
        frontier = nxt

    # greedy lexicographic reconstruction; seeds are ordered by pair code
    state = min(s for s in seeds if goal_dist.get(s) == moves)
    walk = [state >> shift]
    for remaining in range(moves, 0, -1):
        code = state >> shift
        rest = state & mask_all
        for b in adj[code]:
            u2, v2 = divmod(b, n)
            t = (b << shift) | rest | (1 << (n + u2)) | (1 << v2)
            if goal_dist.get(t) == remaining - 1:
                walk.append(b)
                state = t
                break
        else:
            raise AssertionError("goal distance chain broke during reconstruction")
    return moves, tuple(walk)


def walk_pair_from_codes(h: Graph, rule: Rule | str, codes: tuple[int, ...]) -> WalkPair:
    rule = as_rule(rule)
    n = h.n
    dist = distance_matrix(h)
    alice = tuple(h.labels[c // n] for c in codes)
    bob = tuple(h.labels[c % n] for c in codes)
    safety = int(min(dist[c // n][c % n] for c in codes))
    return WalkPair(alice=alice, bob=bob, rule=rule, safety=safety, moves=len(codes) - 1)


def min_steps(h: Graph, rule: Rule | str, cap: int = 10) -> MinWalkResult:
    """Span plus the shortest covering walk pair that attains it."""
    rule = as_rule(rule)
    if not is_connected(h):
        raise ValueError("minimum-step search is defined for connected graphs only")
    if h.n > cap:
        raise CapacityError(
            f"covering-walk search tracks {h.n * h.n} pair positions x 4**{h.n} "
            f"cover masks = {h.n * h.n * 4**h.n} states; n={h.n} exceeds cap {cap}"
        )
    k, _ = vertex_span(h, rule)
    p = safety_subgraph(build_product(h, rule), k)
    found = shortest_covering_walk(p)
    if found is None:
        raise AssertionError("the span threshold always admits a covering walk")
    moves, codes = found
    return MinWalkResult(span=k, moves=moves, pair=walk_pair_from_codes(h, rule, codes),
                         product_walk=codes)


def validate_walk_pair(pair: WalkPair, h: Graph, k: int) -> WalkValidation:
    """Check step legality, coverage, and the safety threshold k.

    Simultaneous stays are legal under traditional rules (walks may repeat a
    vertex) and under active rules (both players pausing keeps them aligned),
    but not under lazy rules, where exactly one player moves per step.
    """
    if len(pair.alice) != len(pair.bob):
        raise ValueError("walks must have equal length")
    if not pair.alice:
        raise ValueError("walks must be non-empty")
    ai = [h.index_of(x) for x in pair.alice]
    bi = [h.index_of(x) for x in pair.bob]
    dist = distance_matrix(h)
    rule = pair.rule
    illegal = []
    for t in range(len(ai) - 1):
        a_stay, b_stay = ai[t] == ai[t + 1], bi[t] == bi[t + 1]
        a_move = h.has_edge(ai[t], ai[t + 1])
        b_move = h.has_edge(bi[t], bi[t + 1])
        if rule is Rule.TRADITIONAL:
            ok = (a_stay or a_move) and (b_stay or b_move)
        elif rule is Rule.ACTIVE:
            ok = (a_move and b_move) or (a_stay and b_stay)
        else:
            ok = (a_move and b_stay) or (a_stay and b_move)
        if not ok:
            illegal.append(t)
    missing_a = tuple(h.labels[v] for v in range(h.n) if v not in set(ai))
    missing_b = tuple(h.labels[v] for v in range(h.n) if v not in set(bi))
    safety = int(min(dist[a][b] for a, b in zip(ai, bi)))
    meets = safety >= k
    return WalkValidation(
        legal=not illegal,
        illegal_steps=tuple(illegal),
        alice_surjective=not missing_a,
        bob_surjective=not missing_b,
        missing_alice=missing_a,
        missing_bob=missing_b,
        safety=safety,
        meets_threshold=meets,
        valid=not illegal and not missing_a and not missing_b and meets,
    )


def reroot_walk_pair(pair: WalkPair, i: int, j: int) -> WalkPair:
    """Optimal-walk re-rooting: start at time i, end at time j.

    The new pair is (prefix reversed up to time i) + (whole walk from time 1)
    + (suffix reversed back to time j).  Every original time step still
    occurs, so legality in either direction, coverage, and safety carry over.
    """
    length = len(pair.alice)
    if not (0 <= i < length and 0 <= j < length):
        raise ValueError(f"times must lie in [0, {length - 1}]")

    def rebuild(seq: tuple[str, ...]) -> tuple[str, ...]:
        prefix = [seq[t] for t in range(i, -1, -1)]
        middle = list(seq[1:])
        suffix = [seq[t] for t in range(length - 2, j - 1, -1)]
        return tuple(prefix + middle + suffix)

    alice = rebuild(pair.alice)
    bob = rebuild(pair.bob)
    return WalkPair(alice=alice, bob=bob, rule=pair.rule, safety=pair.safety,
                    moves=len(alice) - 1)
