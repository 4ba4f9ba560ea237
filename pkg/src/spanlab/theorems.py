"""Theorem harness: span inequalities, span-1 structure, interval theorems.

Each checker returns a TheoremReport whose violations carry enough data
(graph6 string plus the offending values) to replay the case by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .families import complete_graph, path_graph
from .graphs import Graph, induced_subgraph, is_connected, metrics, to_graph6
from .products import RULES, Rule
from .spans import edge_span, vertex_span
from .structure import augment, end_cliques, is_interval, minimal_cut_sets

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: dict | None = None


@dataclass(frozen=True)
class TheoremReport:
    graph_name: str
    graph6: str
    checks: tuple[Check, ...]

    @property
    def violations(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if c.status == VIOLATED)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check(name: str, holds: bool, witness: dict) -> Check:
    if holds:
        return Check(name, HOLDS)
    return Check(name, VIOLATED, witness)


def check_span_inequalities(h: Graph, name: str = "graph") -> TheoremReport:
    """Chain 0 <= edge <= vertex <= radius, gap <= 1, and girth bounds."""
    if not is_connected(h):
        raise ValueError("span inequalities apply to connected graphs only")
    met = metrics(h)
    rad = int(met.radius)
    checks = []
    spans = {}
    for rule in RULES:
        v = vertex_span(h, rule)[0]
        e = edge_span(h, rule)[0]
        spans[rule] = (v, e)
        checks.append(_check(
            f"chain[{rule.value}]",
            0 <= e <= v <= rad,
            {"edge": e, "vertex": v, "radius": rad},
        ))
        checks.append(_check(
            f"vertex-edge-gap[{rule.value}]",
            v - e <= 1,
            {"edge": e, "vertex": v},
        ))
    if met.girth == float("inf"):
        for rule in RULES:
            checks.append(Check(f"girth-bound[{rule.value}]", NOT_APPLICABLE))
    else:
        half = int(met.girth) // 2
        bounds = {Rule.TRADITIONAL: half, Rule.ACTIVE: half - 1, Rule.LAZY: half - 1}
        for rule in RULES:
            bound = max(bounds[rule], 0)
            checks.append(_check(
                f"girth-bound[{rule.value}]",
                spans[rule][0] >= bound,
                {"vertex": spans[rule][0], "bound": bound, "girth": int(met.girth)},
            ))
    if h.n >= 2:
        checks.append(_check(
            "traditional-vertex-span-positive",
            spans[Rule.TRADITIONAL][0] >= 1,
            {"vertex": spans[Rule.TRADITIONAL][0]},
        ))
    return TheoremReport(graph_name=name, graph6=to_graph6(h), checks=tuple(checks))


_SPAN1_CHECKS = ("cut-sets-are-cliques", "lobe-unions-span-1", "join-all-but-two")


def check_span1_structure(h: Graph, name: str = "graph", cut_cap: int = 4) -> TheoremReport:
    """Structure forced on graphs with traditional vertex span 1 and no
    universal vertex: minimal cut sets are cliques, every union of S-lobes
    keeps span 1, and all but at most two lobes are full joins onto S."""
    if not is_connected(h):
        raise ValueError("span-1 structure applies to connected graphs only")
    g6 = to_graph6(h)
    applicable = (h.n >= 2
                  and max(h.degree(v) for v in range(h.n)) < h.n - 1
                  and vertex_span(h, Rule.TRADITIONAL)[0] == 1)
    if not applicable:
        checks = tuple(Check(c, NOT_APPLICABLE) for c in _SPAN1_CHECKS)
        return TheoremReport(graph_name=name, graph6=g6, checks=checks)

    catalog = minimal_cut_sets(h, cap=cut_cap)
    clique_ok = True
    lobes_ok = True
    join_ok = True
    witness: dict = {}
    for cut in catalog.sets:
        if not cut.is_clique:
            clique_ok = False
            witness.setdefault("non_clique_cut", list(cut.vertices))
        parts = cut.components
        for r in range(1, len(parts) + 1):
            for chosen in combinations(range(len(parts)), r):
                vs = set(cut.vertices)
                for i in chosen:
                    vs.update(parts[i])
                union = induced_subgraph(h, sorted(vs))
                if vertex_span(union, Rule.TRADITIONAL)[0] != 1:
                    lobes_ok = False
                    witness.setdefault("bad_lobe_union",
                                       {"cut": list(cut.vertices), "lobes": list(chosen)})
        bad = 0
        for comp in cut.components:
            if any(not h.has_edge(s, v) for s in cut.vertices for v in comp):
                bad += 1
        if bad > 2:
            join_ok = False
            witness.setdefault("non_join_lobes", {"cut": list(cut.vertices), "count": bad})
    base = {"graph6": g6}
    checks = (
        _check(_SPAN1_CHECKS[0], clique_ok, base | witness),
        _check(_SPAN1_CHECKS[1], lobes_ok, base | witness),
        _check(_SPAN1_CHECKS[2], join_ok, base | witness),
    )
    return TheoremReport(graph_name=name, graph6=g6, checks=checks)


def _aug_test_graphs() -> list[tuple[str, Graph]]:
    return [
        ("K1", complete_graph(1)),
        ("K2", complete_graph(2)),
        ("P3", path_graph(3)),
        ("K3", complete_graph(3)),
    ]


def check_interval_theorems(h: Graph, name: str = "graph", cap: int = 12) -> TheoremReport:
    """Interval graphs have traditional vertex span 1; trees have span 1 iff
    interval; augmenting an interval graph at an end-clique or at a clique
    minimal cut set keeps span 1."""
    if not is_connected(h):
        raise ValueError("interval theorems apply to connected graphs only")
    g6 = to_graph6(h)
    iv = is_interval(h)
    checks = []

    if iv and h.n >= 2:
        sv = vertex_span(h, Rule.TRADITIONAL)[0]
        checks.append(_check("interval-implies-span-1", sv == 1, {"vertex": sv}))
    else:
        checks.append(Check("interval-implies-span-1", NOT_APPLICABLE))

    if h.n >= 2 and h.m == h.n - 1:
        sv = vertex_span(h, Rule.TRADITIONAL)[0]
        checks.append(_check("tree-characterization", (sv == 1) == iv,
                             {"vertex": sv, "is_interval": iv}))
    else:
        checks.append(Check("tree-characterization", NOT_APPLICABLE))

    if iv and 2 <= h.n <= cap:
        ok = True
        witness: dict = {}
        for K in end_cliques(h, cap=cap):
            for hname, extra in _aug_test_graphs():
                sv = vertex_span(augment(h, K, extra), Rule.TRADITIONAL)[0]
                if sv != 1:
                    ok = False
                    witness.setdefault("case", {"clique": list(K), "added": hname, "vertex": sv})
        checks.append(_check("end-clique-augmentation", ok, witness))

        ok = True
        witness = {}
        for cut in minimal_cut_sets(h).sets:
            if not cut.is_clique:
                continue
            for hname, extra in _aug_test_graphs():
                sv = vertex_span(augment(h, cut.vertices, extra), Rule.TRADITIONAL)[0]
                if sv != 1:
                    ok = False
                    witness.setdefault("case", {"clique": list(cut.vertices),
                                                "added": hname, "vertex": sv})
        checks.append(_check("cut-clique-augmentation", ok, witness))
    else:
        checks.append(Check("end-clique-augmentation", NOT_APPLICABLE))
        checks.append(Check("cut-clique-augmentation", NOT_APPLICABLE))

    return TheoremReport(graph_name=name, graph6=g6, checks=tuple(checks))
