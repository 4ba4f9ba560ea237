"""Graph construction, graph6 and edge-list parsing, metrics, surgery."""

import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import floyd_warshall, nx_to_graph
from spanlab import (INFINITY, Graph, GraphParseError, components,
                     distance_matrix, fresh_labels, induced_subgraph,
                     is_connected, join, metrics, parse_edgelist, parse_graph,
                     parse_graph6, to_graph6)


def test_basic_construction():
    g = Graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.m == 2
    assert g.adj == ((1,), (0, 2), (1,))
    assert g.labels == ("0", "1", "2")
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.degree(1) == 2


def test_duplicate_edges_collapse():
    g = Graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_loops_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])


def test_edge_out_of_range_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_labels_must_be_distinct_and_match_n():
    with pytest.raises(ValueError):
        Graph(2, [], labels=["a", "a"])
    with pytest.raises(ValueError):
        Graph(2, [], labels=["a"])
    g = Graph(2, [(0, 1)], labels=["L", "R"])
    assert g.index_of("R") == 1
    with pytest.raises(ValueError):
        g.index_of("nope")


def test_graph6_k4():
    g = parse_graph6("C~")
    assert g.n == 4
    assert g.m == 6
    assert to_graph6(g) == "C~"


def test_graph6_header_tolerated():
    assert parse_graph6(">>graph6<<C~").adj == parse_graph6("C~").adj


def test_graph6_bad_character_reports_offset():
    with pytest.raises(GraphParseError) as exc:
        parse_graph6("C" + chr(30))
    assert exc.value.offset == 1


def test_graph6_truncated():
    with pytest.raises(GraphParseError):
        parse_graph6("D")  # n=5 needs 10 bits of adjacency data


def test_graph6_round_trip_against_networkx():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 12)
        gx = nx.gnp_random_graph(n, 0.4, seed=rng.randint(0, 10**6))
        ours = nx_to_graph(gx)
        theirs = nx.to_graph6_bytes(gx, header=False).decode().strip()
        assert to_graph6(ours) == theirs
        assert parse_graph6(theirs).adj == ours.adj


def test_graph6_large_n_size_form():
    # n = 70 exercises the 4-byte size encoding
    g = Graph(70, [(i, i + 1) for i in range(69)])
    assert parse_graph6(to_graph6(g)).adj == g.adj


def test_edgelist_parsing():
    g = parse_edgelist("0 1\n1 2\n\n2 3\n")
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_edgelist_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as exc:
        parse_edgelist("0 1\n2\n")
    assert exc.value.line == 2
    with pytest.raises(GraphParseError):
        parse_edgelist("0 x")
    with pytest.raises(GraphParseError):
        parse_edgelist("-1 2")
    with pytest.raises(GraphParseError):
        parse_edgelist("3 3")


def test_parse_graph_dispatch():
    assert parse_graph("C~", "graph6").m == 6
    assert parse_graph("0 1", "edgelist").m == 1
    with pytest.raises(ValueError):
        parse_graph("C~", "dot")


def test_distance_matrix_against_floyd_warshall():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.45]
        g = Graph(n, edges)
        ours = distance_matrix(g)
        ref = floyd_warshall(g)
        for i in range(n):
            for j in range(n):
                assert ours[i][j] == ref[i][j]


def test_metrics_path4():
    met = metrics(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert met.radius == 2
    assert met.diameter == 3
    assert met.girth == INFINITY


def test_metrics_petersen():
    g = nx_to_graph(nx.petersen_graph())
    met = metrics(g)
    assert met.radius == 2
    assert met.diameter == 2
    assert met.girth == 5


def test_girth_matches_networkx():
    rng = random.Random(3)
    for _ in range(20):
        gx = nx.gnp_random_graph(rng.randint(3, 9), 0.4,
                                 seed=rng.randint(0, 10**6))
        g = nx_to_graph(gx)
        expected = nx.girth(gx)
        ours = metrics(g).girth
        if expected == math.inf:
            assert ours == INFINITY
        else:
            assert ours == expected


def test_components_and_connectivity():
    g = Graph(5, [(0, 1), (2, 3)])
    comps = components(g)
    assert sorted(sorted(c) for c in comps) == [[0, 1], [2, 3], [4]]
    assert not is_connected(g)
    assert is_connected(Graph(1))


def test_join_forms_all_cross_edges():
    g = join(Graph(2, [(0, 1)], labels=["a", "b"]), Graph(1, [], labels=["c"]))
    assert g.n == 3
    assert g.m == 3
    assert g.labels == ("a", "b", "c")


def test_join_renames_colliding_labels():
    g = join(Graph(1, labels=["0"]), Graph(2, [(0, 1)]))
    assert len(set(g.labels)) == 3
    assert g.labels[0] == "0"


def test_fresh_labels():
    assert fresh_labels(["0", "2"], ["1", "2"]) == ["1", "3"]
    assert fresh_labels([], ["x", "y"]) == ["x", "y"]


def test_induced_subgraph_of_cycle_is_path():
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    p = induced_subgraph(c5, [0, 1, 2, 3])
    assert p.edges() == [(0, 1), (1, 2), (2, 3)]
    assert p.labels == ("0", "1", "2", "3")


def test_induced_subgraph_range_check():
    with pytest.raises(ValueError):
        induced_subgraph(Graph(2, [(0, 1)]), [0, 5])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.data())
def test_graph6_round_trip_property(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, chosen)
    again = parse_graph6(to_graph6(g))
    assert again.n == g.n
    assert again.adj == g.adj
