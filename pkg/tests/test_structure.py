"""Cliques, chordality, asteroidal triples, interval certificates, cut sets,
lobes, and the augmentation construction."""

import random

import pytest

from helpers import random_graphs
from spanlab import (CapacityError, Graph, augment, complete_graph,
                     cycle_graph, end_cliques, find_asteroidal_triple, fixture,
                     induced_subgraph, interval_certificate, is_chordal,
                     is_connected, is_interval, maximal_cliques,
                     minimal_cut_sets, path_graph, random_interval_graph,
                     s_lobes, star_graph, subdivided_star)


def brute_maximal_cliques(g: Graph) -> set[tuple[int, ...]]:
    from itertools import combinations
    cliques = set()
    for r in range(1, g.n + 1):
        for vs in combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in combinations(vs, 2)):
                cliques.add(vs)
    return {c for c in cliques
            if not any(c != d and set(c) <= set(d) for d in cliques)}


def test_maximal_cliques_against_subset_enumeration():
    for g in random_graphs(12, 2, 7, seed=41):
        assert set(maximal_cliques(g)) == brute_maximal_cliques(g)


def is_peo(g: Graph, order) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if any(not g.has_edge(a, b)
               for i, a in enumerate(later) for b in later[i + 1:]):
            return False
    return True


def test_chordal_recognition():
    assert is_chordal(path_graph(5)).chordal
    assert is_chordal(complete_graph(5)).chordal
    assert is_chordal(star_graph(4)).chordal
    assert not is_chordal(cycle_graph(4)).chordal
    assert not is_chordal(cycle_graph(5)).chordal
    assert not is_chordal(fixture("figure2")).chordal


def test_chordal_witnesses_revalidate():
    for g in random_graphs(25, 3, 8, seed=43):
        res = is_chordal(g)
        if res.chordal:
            assert is_peo(g, res.elimination_order)
        else:
            cyc = res.chordless_cycle
            assert len(cyc) >= 4
            L = len(cyc)
            for i in range(L):
                for j in range(i + 1, L):
                    adjacent = g.has_edge(cyc[i], cyc[j])
                    consecutive = j - i == 1 or (i == 0 and j == L - 1)
                    assert adjacent == consecutive, (cyc, i, j)


def independent_avoidance_check(g: Graph, triple) -> bool:
    """Re-verify an asteroidal triple: pairwise non-adjacent and each pair
    connected in the graph minus the third vertex's closed neighbourhood."""
    x, y, z = triple
    if g.has_edge(x, y) or g.has_edge(y, z) or g.has_edge(x, z):
        return False
    for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
        banned = set(g.adj[c]) | {c}
        if a in banned or b in banned:
            return False
        keep = [v for v in range(g.n) if v not in banned]
        sub = induced_subgraph(g, keep)
        ka, kb = keep.index(a), keep.index(b)
        seen = {ka}
        stack = [ka]
        while stack:
            u = stack.pop()
            for w in sub.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if kb not in seen:
            return False
    return True


def test_asteroidal_triples():
    assert find_asteroidal_triple(path_graph(6)) is None
    assert find_asteroidal_triple(complete_graph(4)) is None
    s13 = subdivided_star(3)
    triple = find_asteroidal_triple(s13)
    assert triple == (2, 4, 6)  # the three leaves
    assert independent_avoidance_check(s13, triple)
    c6 = cycle_graph(6)
    assert independent_avoidance_check(c6, find_asteroidal_triple(c6))


def test_interval_recognition():
    assert is_interval(path_graph(7))
    assert is_interval(complete_graph(5))
    assert is_interval(star_graph(5))
    assert not is_interval(cycle_graph(4))      # chordless cycle
    assert not is_interval(subdivided_star(3))  # asteroidal triple
    assert not is_interval(fixture("figure2"))


def test_interval_certificate_realizes_adjacency():
    rng = random.Random(47)
    for _ in range(20):
        g = random_interval_graph(rng.randint(2, 10), seed=rng.randint(0, 10**6))
        cert = interval_certificate(g)
        assert cert.is_interval
        ends = [e for iv in cert.intervals for e in iv]
        assert len(set(ends)) == len(ends)  # all endpoints distinct
        for u in range(g.n):
            for v in range(u + 1, g.n):
                lu, ru = cert.intervals[u]
                lv, rv = cert.intervals[v]
                overlap = max(lu, lv) <= min(ru, rv)
                assert overlap == g.has_edge(u, v), (u, v)


def test_interval_certificate_negative_witnesses():
    cert = interval_certificate(cycle_graph(5))
    assert not cert.is_interval
    assert cert.chordless_cycle is not None
    cert = interval_certificate(subdivided_star(3))
    assert not cert.is_interval
    assert cert.asteroidal_triple is not None


def test_interval_certificate_capacity():
    g = path_graph(15)
    with pytest.raises(CapacityError) as exc:
        interval_certificate(g, cap=12)
    assert "is_interval=True" in str(exc.value)
    # recognition itself has no cap
    assert is_interval(g)


def test_end_cliques_examples():
    assert end_cliques(path_graph(3)) == [(0, 1), (1, 2)]
    assert end_cliques(complete_graph(4)) == [(0, 1, 2, 3)]
    assert end_cliques(star_graph(3)) == [(0, 1), (0, 2), (0, 3)]


def test_end_cliques_require_interval_graph():
    with pytest.raises(ValueError):
        end_cliques(cycle_graph(4))


def test_minimal_cut_sets_of_cycle():
    cat = minimal_cut_sets(cycle_graph(4))
    assert [(c.vertices, c.is_clique) for c in cat.sets] == [
        ((0, 2), False), ((1, 3), False)]
    assert cat.sets[0].components == ((1,), (3,))


def test_minimal_cut_sets_of_path():
    cat = minimal_cut_sets(path_graph(4))
    assert [c.vertices for c in cat.sets] == [(1,), (2,)]
    assert all(c.is_clique for c in cat.sets)


def test_complete_graph_has_no_cut_sets():
    assert minimal_cut_sets(complete_graph(5)).sets == ()


def test_minimal_cut_sets_are_minimal_and_cut():
    for g in random_graphs(12, 3, 7, seed=53):
        for cut in minimal_cut_sets(g).sets:
            rest = [v for v in range(g.n) if v not in cut.vertices]
            assert not is_connected(induced_subgraph(g, rest))
            for drop in cut.vertices:
                keep = [v for v in range(g.n)
                        if v not in cut.vertices or v == drop]
                assert is_connected(induced_subgraph(g, keep)) or len(keep) == 0


def test_minimal_cut_sets_rejects_disconnected():
    with pytest.raises(ValueError):
        minimal_cut_sets(Graph(3, [(0, 1)]))


def test_s_lobes_on_figure3_base():
    g3 = fixture("figure3")
    base = induced_subgraph(g3, [g3.index_of(l) for l in "1234567"])
    S = [base.index_of(l) for l in ("2", "4", "5")]
    lobes = s_lobes(base, S)
    assert [sorted(l.labels) for l in lobes] == [
        ["1", "2", "4", "5"], ["2", "3", "4", "5", "6", "7"]]
    for lobe in lobes:
        assert is_connected(lobe)


def test_s_lobes_of_non_cut_set():
    g = complete_graph(4)
    lobes = s_lobes(g, [0])
    assert len(lobes) == 1
    assert lobes[0].adj == g.adj


def test_augment_structure():
    base = path_graph(3)
    out = augment(base, [1], Graph(2, [(0, 1)], labels=["x", "y"]))
    assert out.n == 5
    assert out.labels == ("0", "1", "2", "x", "y")
    assert out.has_edge(1, 3) and out.has_edge(1, 4)  # cross edges
    assert out.has_edge(3, 4)                         # h's own edge
    assert not out.has_edge(0, 3) and not out.has_edge(2, 4)


def test_augment_relabels_collisions():
    out = augment(path_graph(2), [0], path_graph(2))
    assert len(set(out.labels)) == 4
    assert out.labels[:2] == ("0", "1")


def test_augment_rejects_empty_addition():
    with pytest.raises(ValueError):
        augment(path_graph(2), [0], Graph(0))


def test_figure3_is_an_augmentation():
    g3 = fixture("figure3")
    base = induced_subgraph(g3, [g3.index_of(l) for l in "1234567"])
    assert is_interval(base)
    S = [base.index_of(l) for l in ("2", "4", "5")]
    rebuilt = augment(base, S, complete_graph(1))
    assert rebuilt.adj == g3.adj
