"""Command-line surface.

Subcommands: span (all six span values), minwalk (shortest optimal walk
pair), analyze (metrics, interval certificate, cut sets), verify (theorem
checks), generate (emit graph6).  Exit codes: 0 success, 1 a theorem check
was violated, 2 usage or parse error, 3 capacity limit hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import CapacityError, GraphParseError
from .families import FIXTURES, fixture, generate_family
from .graphs import (INFINITY, Graph, distance_matrix, metrics,
                     parse_edgelist, parse_graph6, to_graph6)
from .products import KINDS, RULES, as_rule
from .spans import edge_span, vertex_span
from .structure import interval_certificate, minimal_cut_sets
from .theorems import (NOT_APPLICABLE, VIOLATED, check_interval_theorems,
                       check_span1_structure, check_span_inequalities)
from .walks import min_steps

_FAMILY_HELP = ("generated graph, e.g. path:5, cycle:6, complete:4, star:3, "
                "subdivided-star:4, random:8, interval:10")


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", metavar="NAME",
                     help="built-in graph: " + ", ".join(sorted(FIXTURES)))
    src.add_argument("--family", metavar="SPEC", help=_FAMILY_HELP)
    src.add_argument("--file", metavar="PATH", help="graph6 or edge-list file")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format (default text)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for seeded families (default 0)")
    p.add_argument("--cap", type=int, default=None,
                   help="override size caps (default from SPANLAB_CAP or built-in)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spanlab",
        description="Span values, optimal walk pairs, and structure checks "
                    "for connected graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("span", help="compute span values of a graph")
    _add_source(p)
    _add_common(p)
    p.add_argument("--rule", choices=("traditional", "active", "lazy", "all"),
                   default="all", help="movement rule (default all)")
    p.add_argument("--kind", choices=("vertex", "edge", "both"), default="both",
                   help="cover kind (default both)")

    p = sub.add_parser("minwalk", help="shortest optimal walk pair")
    _add_source(p)
    _add_common(p)
    p.add_argument("--rule", choices=("traditional", "active", "lazy"),
                   default="traditional", help="movement rule (default traditional)")

    p = sub.add_parser("analyze",
                       help="metrics, interval certificate, minimal cut sets")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run theorem checks against a graph")
    _add_source(p)
    _add_common(p)
    p.add_argument("--seeds", type=int, default=1,
                   help="check this many seeded instances of a --family spec")

    p = sub.add_parser("generate", help="emit the chosen graph as graph6")
    _add_source(p)
    _add_common(p)
    return ap


def _load_file(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = [ln for ln in text.splitlines() if ln.strip()]
    if not stripped:
        raise GraphParseError(f"empty graph file {path!r}")
    # edge-list lines contain whitespace between endpoints; graph6 never does
    if len(stripped[0].split()) > 1:
        return parse_edgelist(text)
    return parse_graph6(text)


def load_graph(args: argparse.Namespace) -> tuple[str, Graph]:
    if args.fixture is not None:
        return args.fixture, fixture(args.fixture)
    if args.family is not None:
        return args.family, generate_family(args.family, seed=args.seed)
    return args.file, _load_file(args.file)


def resolve_cap(args: argparse.Namespace) -> int | None:
    """--cap wins; else SPANLAB_CAP; else None (each operation's default)."""
    if args.cap is not None:
        if args.cap <= 0:
            raise ValueError("--cap must be positive")
        return args.cap
    env = os.environ.get("SPANLAB_CAP")
    if env is None or not env.strip():
        return None
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"SPANLAB_CAP must be an integer, got {env!r}") from None
    if value <= 0:
        raise ValueError("SPANLAB_CAP must be positive")
    return value


def describe(name: str, g: Graph) -> dict:
    return {"name": name, "n": g.n, "m": g.m,
            "graph6": to_graph6(g), "labels": list(g.labels)}


def emit(args: argparse.Namespace, doc: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _finite(x: float) -> int | None:
    return None if x == INFINITY else int(x)


def cmd_span(args: argparse.Namespace) -> int:
    name, g = load_graph(args)
    rules = RULES if args.rule == "all" else (as_rule(args.rule),)
    kinds = KINDS if args.kind == "both" else (args.kind,)
    values: dict[str, dict[str, int]] = {}
    for rule in rules:
        values[rule.value] = {}
        for kind in kinds:
            solve = vertex_span if kind == "vertex" else edge_span
            values[rule.value][kind] = solve(g, rule)[0]
    doc = {"tool": "spanlab", "version": __version__,
           "graph": describe(name, g), "results": {"spans": values}}
    lines = [f"graph: {name}  n={g.n} m={g.m}"]
    for rule in rules:
        cells = "  ".join(f"{kind}={values[rule.value][kind]}" for kind in kinds)
        lines.append(f"{rule.value}: {cells}")
    emit(args, doc, lines)
    return 0


def cmd_minwalk(args: argparse.Namespace) -> int:
    name, g = load_graph(args)
    cap = resolve_cap(args)
    result = min_steps(g, args.rule) if cap is None else min_steps(g, args.rule, cap=cap)
    pair = result.pair
    dist = distance_matrix(g)
    steps = [int(dist[g.index_of(a)][g.index_of(b)])
             for a, b in zip(pair.alice, pair.bob)]
    doc = {"tool": "spanlab", "version": __version__,
           "graph": describe(name, g),
           "results": {"rule": pair.rule.value, "span": result.span,
                       "moves": result.moves, "alice": list(pair.alice),
                       "bob": list(pair.bob), "distances": steps,
                       "safety": pair.safety}}
    width = max(5, max(len(a) for a in pair.alice + pair.bob))
    lines = [f"graph: {name}  n={g.n} m={g.m}",
             f"rule: {pair.rule.value}",
             f"span: {result.span}",
             f"moves: {result.moves}",
             f"{'step':>4}  {'alice':>{width}}  {'bob':>{width}}  distance"]
    for i, (a, b) in enumerate(zip(pair.alice, pair.bob)):
        lines.append(f"{i:>4}  {a:>{width}}  {b:>{width}}  {steps[i]:>8}")
    emit(args, doc, lines)
    return 0


def _label_all(g: Graph, vs) -> list[str]:
    return [g.labels[v] for v in vs]


def cmd_analyze(args: argparse.Namespace) -> int:
    name, g = load_graph(args)
    cap = resolve_cap(args)
    met = metrics(g)
    cert = (interval_certificate(g) if cap is None
            else interval_certificate(g, cap=cap))
    cuts = minimal_cut_sets(g)
    interval_doc: dict = {"is_interval": cert.is_interval}
    if cert.intervals is not None:
        interval_doc["intervals"] = {g.labels[v]: list(iv)
                                     for v, iv in enumerate(cert.intervals)}
    if cert.chordless_cycle is not None:
        interval_doc["chordless_cycle"] = _label_all(g, cert.chordless_cycle)
    if cert.asteroidal_triple is not None:
        interval_doc["asteroidal_triple"] = _label_all(g, cert.asteroidal_triple)
    cuts_doc = [{"vertices": _label_all(g, c.vertices),
                 "is_clique": c.is_clique,
                 "components": [_label_all(g, comp) for comp in c.components]}
                for c in cuts.sets]
    doc = {"tool": "spanlab", "version": __version__,
           "graph": describe(name, g),
           "results": {"metrics": {"radius": _finite(met.radius),
                                   "diameter": _finite(met.diameter),
                                   "girth": _finite(met.girth)},
                       "interval": interval_doc,
                       "cut_sets": cuts_doc}}
    girth_text = "acyclic" if met.girth == INFINITY else str(int(met.girth))
    lines = [f"graph: {name}  n={g.n} m={g.m}",
             f"radius={_finite(met.radius)} diameter={_finite(met.diameter)} "
             f"girth={girth_text}"]
    if cert.is_interval:
        lines.append("interval: yes")
        for v in range(g.n):
            l, r = cert.intervals[v]
            lines.append(f"  {g.labels[v]}: [{l}, {r}]")
    else:
        witness = (f"chordless cycle {'-'.join(_label_all(g, cert.chordless_cycle))}"
                   if cert.chordless_cycle is not None else
                   f"asteroidal triple {', '.join(_label_all(g, cert.asteroidal_triple))}")
        lines.append(f"interval: no  ({witness})")
    lines.append(f"minimal cut sets (size <= {cuts.size_cap}): {len(cuts.sets)}")
    for c in cuts.sets:
        comps = " / ".join("{" + ",".join(_label_all(g, comp)) + "}"
                           for comp in c.components)
        flag = "clique" if c.is_clique else "not a clique"
        lines.append("  {" + ",".join(_label_all(g, c.vertices)) + "}  "
                     + flag + "  components: " + comps)
    emit(args, doc, lines)
    return 0


def _verify_one(name: str, g: Graph) -> list:
    reports = [check_span_inequalities(g, name)]
    reports.append(check_span1_structure(g, name))
    reports.append(check_interval_theorems(g, name))
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    if args.seeds < 1:
        raise ValueError("--seeds must be at least 1")
    runs: list[tuple[str, Graph]] = []
    if args.family is not None and args.seeds > 1:
        for s in range(args.seed, args.seed + args.seeds):
            runs.append((f"{args.family} seed={s}",
                         generate_family(args.family, seed=s)))
    else:
        runs.append(load_graph(args))
    checks_run = 0
    skipped = 0
    violations = []
    for name, g in runs:
        for report in _verify_one(name, g):
            for check in report.checks:
                if check.status == NOT_APPLICABLE:
                    skipped += 1
                    continue
                checks_run += 1
                if check.status == VIOLATED:
                    violations.append({"graph": report.graph_name,
                                       "graph6": report.graph6,
                                       "check": check.name,
                                       "witness": check.witness or {}})
    first_name, first_graph = runs[0]
    graph_doc = (describe(first_name, first_graph) if len(runs) == 1
                 else {"family": args.family, "seed": args.seed,
                       "seeds": args.seeds})
    doc = {"tool": "spanlab", "version": __version__, "graph": graph_doc,
           "results": {"graphs": len(runs), "checks": checks_run,
                       "not_applicable": skipped, "violations": violations}}
    lines = [f"graphs checked: {len(runs)}",
             f"checks run: {checks_run} (not applicable: {skipped})",
             f"violations: {len(violations)}"]
    for v in violations:
        lines.append(f"  VIOLATED {v['check']} on {v['graph']} "
                     f"(graph6 {v['graph6']}): {v['witness']}")
    emit(args, doc, lines)
    return 1 if violations else 0


def cmd_generate(args: argparse.Namespace) -> int:
    name, g = load_graph(args)
    g6 = to_graph6(g)
    doc = {"tool": "spanlab", "version": __version__,
           "graph": describe(name, g), "results": {"graph6": g6}}
    emit(args, doc, [g6])
    return 0


_DISPATCH = {"span": cmd_span, "minwalk": cmd_minwalk, "analyze": cmd_analyze,
             "verify": cmd_verify, "generate": cmd_generate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except CapacityError as exc:
        print(f"spanlab: capacity: {exc}", file=sys.stderr)
        return 3
    except (GraphParseError, ValueError, OSError) as exc:
        print(f"spanlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
