# Interval graphs and span 1
#
# A graph is an interval graph when its vertices can be drawn as intervals
# on a line so that two vertices are adjacent exactly when their intervals
# overlap.  Interval graphs are precisely the chordal graphs without an
# asteroidal triple, and every non-trivial connected interval graph has
# traditional vertex span 1: the players can never keep distance 2 while
# both touring everything.
#
# For trees the connection is exact in both directions: a tree has span 1
# if and only if it is an interval graph (equivalently, it has no 3-leg
# spider as an induced subgraph).

from spanlab import (augment, complete_graph, cycle_graph, end_cliques,
                     interval_certificate, minimal_cut_sets, path_graph,
                     random_interval_graph, star_graph, subdivided_star,
                     vertex_span)

print("=== recognition with certificates ===")
for name, g in [("P6", path_graph(6)), ("C5", cycle_graph(5)),
                ("S_{1,3}", subdivided_star(3)),
                ("random interval n=8", random_interval_graph(8, seed=4))]:
    cert = interval_certificate(g)
    if cert.is_interval:
        span = vertex_span(g, "traditional")[0]
        print(f"{name}: interval, span {span}")
        for v, (lo, hi) in enumerate(cert.intervals):
            print(f"   {g.labels[v]}: [{lo:>2}, {hi:>2}]")
    elif cert.chordless_cycle:
        print(f"{name}: not interval, chordless cycle "
              f"{'-'.join(g.labels[v] for v in cert.chordless_cycle)}")
    else:
        print(f"{name}: not interval, asteroidal triple "
              f"{tuple(g.labels[v] for v in cert.asteroidal_triple)}")
print()

print("=== span-1 is stable under the right augmentations ===")
# aug(G, S, H) glues a fresh copy of H onto G by joining every vertex of S
# to every vertex of H.  Two theorems say the result keeps span 1 when G is
# interval and S is an end-clique, or a minimal cut set that is a clique.
g = path_graph(5)
print("end cliques of P5:", end_cliques(g))
for K in end_cliques(g):
    out = augment(g, K, star_graph(2))
    print(f"  aug(P5, {K}, K_{{1,2}}) has span "
          f"{vertex_span(out, 'traditional')[0]}")

cuts = [c.vertices for c in minimal_cut_sets(g).sets if c.is_clique]
print("clique minimal cut sets of P5:", cuts)
for K in cuts[:2]:
    out = augment(g, K, complete_graph(3))
    print(f"  aug(P5, {K}, K_3) has span {vertex_span(out, 'traditional')[0]}")
print()

print("=== ...but only the right ones ===")
# Gluing onto a clique cut set that is NOT minimal can break the property.
# The figure3 fixture arises this way and has span 2.
from spanlab import fixture, induced_subgraph, is_interval

g3 = fixture("figure3")
base = induced_subgraph(g3, [g3.index_of(l) for l in "1234567"])
S = tuple(base.index_of(l) for l in ("2", "4", "5"))
print(f"base interval: {is_interval(base)}; gluing one vertex onto clique "
      f"{tuple(base.labels[v] for v in S)} (a non-minimal cut set)")
out = augment(base, S, complete_graph(1))
print(f"resulting span: {vertex_span(out, 'traditional')[0]} (not 1)")
