"""Command-line front end.

Exit codes: 0 success, 1 oracle check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import replace

from .bracket import BracketSyntaxError, projection_to_tree, to_bracket, to_bracket_pretty
from .graph import GraphError, MixedGraph, load_graph, random_mixed_graph
from .oracle import BudgetExceeded, OracleReport, bfs_distances, check_projection
from .paths import apsp, count_shortest_paths, enumerate_shortest_paths, extract_path, sssp
from .projection import DEFAULT_NODE_CAP, ProjectionSizeError, RefinedProjection, build_refined
from .results import matrix_to_text


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_random(spec: str):
    parts = spec.split(",")
    if len(parts) != 4:
        raise UsageError(f"--random expects N,PAIR_PROB,ORIENT_PROB,SEED, got {spec!r}")
    try:
        return int(parts[0]), float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError:
        raise UsageError(f"--random expects N,PAIR_PROB,ORIENT_PROB,SEED, got {spec!r}") from None


def _graphs(args) -> list[tuple[str, MixedGraph]]:
    """Resolve the input source into labelled graphs."""
    batch = getattr(args, "batch", 1)
    if args.graph:
        if batch != 1:
            raise UsageError("--batch applies only to --random input")
        return [(args.graph, load_graph(args.graph))]
    n, pp, op, seed = _parse_random(args.random)
    return [(f"random:{n},{pp},{op},{s}", random_mixed_graph(n, pp, op, s))
            for s in range(seed, seed + batch)]


def _one_graph(args) -> MixedGraph:
    return _graphs(args)[0][1]


def _sources(g: MixedGraph, args) -> list[int]:
    if args.source is None:
        return list(g.vertices)
    g.check_vertex(args.source)
    return [args.source]


def projection_to_text(p: RefinedProjection) -> str:
    lines = [f"source {p.source}"]
    for k, frontier in enumerate(p.frontier_history[1:], start=1):
        lines.append(f"level {k}: " + " ".join(map(str, frontier)))
    for v in range(1, p.n + 1):
        if p.pred[v]:
            lines.append(f"pred {v}: " + ",".join(map(str, p.pred[v])))
    if p.unreachable:
        lines.append("unreachable: " + " ".join(map(str, p.unreachable)))
    lines.append("stats " + " ".join(f"{k}={v}" for k, v in p.stats.to_dict().items()))
    return "\n".join(lines) + "\n"


def cmd_build(args, out):
    g = _one_graph(args)
    p = build_refined(g, args.source)
    if args.format == "json":
        out.write(_dump(p.to_dict()))
    elif args.format == "bracket":
        tree = projection_to_tree(p, node_cap=args.node_cap)
        out.write(to_bracket_pretty(tree) if args.pretty else to_bracket(tree) + "\n")
    else:
        out.write(projection_to_text(p))
    return 0


def cmd_path(args, out):
    g = _one_graph(args)
    p = build_refined(g, args.source)
    ps = enumerate_shortest_paths(p, args.target, limit=args.limit)
    count = count_shortest_paths(p, args.target)
    if args.format == "json":
        out.write(_dump({**ps.to_dict(), **count.to_dict()}))
    else:
        out.write(ps.to_text())
    return 0


def cmd_sssp(args, out):
    g = _one_graph(args)
    table, _ = sssp(g, args.source)
    out.write(_dump(table.to_dict()) if args.format == "json" else table.to_text())
    return 0


def cmd_apsp(args, out):
    g = _one_graph(args)
    matrix = apsp(g, workers=args.parallel)
    if args.format == "json":
        out.write(_dump({"n": g.n, "dist": matrix}))
    else:
        out.write(matrix_to_text(matrix))
    return 0


def _inject_fault(p: RefinedProjection) -> RefinedProjection:
    """Drop the largest predecessor of the first vertex that has several."""
    for v in range(1, p.n + 1):
        if len(p.pred[v]) > 1:
            return replace(p, pred={**p.pred, v: p.pred[v][:-1]})
    for v in range(1, p.n + 1):
        if p.pred[v]:
            return replace(p, pred={**p.pred, v: ()})
    return p


def cmd_check(args, out):
    total = OracleReport()
    checked = 0
    for label, g in _graphs(args):
        for u in _sources(g, args):
            p = build_refined(g, u)
            if args.inject_fault:
                p = _inject_fault(p)
            total.extend(check_projection(g, p))
            checked += 1
    if args.format == "json":
        out.write(_dump({"projections_checked": checked, **total.to_dict()}))
    else:
        out.write(f"checked {checked} projections: {'OK' if total.ok else 'MISMATCH'}\n")
        for name in ("distance_mismatches", "pred_mismatches", "path_set_mismatches"):
            for u, v, want, got in getattr(total, name):
                out.write(f"{name[:-11]} source={u} vertex={v} expected={want} actual={got}\n")
    return 0 if total.ok else 1


BENCH_FIELDS = [
    "graph", "n", "links", "source", "vertices_placed", "adjacency_cells_read",
    "levels_built", "extraction_touches_total", "extraction_touches_max",
    "build_seconds", "bfs_seconds",
]


def _best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rows(graphs, sources=None, repeat=3):
    """One counter row per (graph, source); times are the best of ``repeat`` runs."""
    rows = []
    for label, g in graphs:
        links = len(g.edges()) + len(g.arcs())
        for u in (sources or list(g.vertices)):
            p = build_refined(g, u)
            touches = [extract_path(p, v)[1] for v in g.vertices if p.level[v] is not None]
            rows.append({
                "graph": label,
                "n": g.n,
                "links": links,
                "source": u,
                **p.stats.to_dict(),
                "extraction_touches_total": sum(touches),
                "extraction_touches_max": max(touches),
                "build_seconds": _best_time(lambda: build_refined(g, u), repeat),
                "bfs_seconds": _best_time(lambda: bfs_distances(g, u), repeat),
            })
    return rows


def cmd_bench(args, out):
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    graphs = _graphs(args)
    if args.source is not None:
        for _, g in graphs:
            g.check_vertex(args.source)
    rows = bench_rows(graphs, [args.source] if args.source is not None else None, args.repeat)
    if args.format == "json":
        out.write(_dump(rows))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    if args.plot_dir:
        from .plotting import plot_bench

        for path in plot_bench(rows, args.plot_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_gen(args, out):
    out.write(random_mixed_graph(args.n, args.pair_prob, args.orient_prob, args.seed).to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projpaths",
        description="Shortest paths in unweighted mixed graphs via refined projections.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json"), source=None, batch=False):
        p = sub.add_parser(name, help=help)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("-g", "--graph", metavar="FILE", help="graph text file")
        src.add_argument("--random", metavar="N,PAIR,ORIENT,SEED",
                         help="generate a seeded random graph instead of reading a file")
        if batch:
            p.add_argument("--batch", type=int, default=1,
                           help="with --random: use seeds SEED..SEED+BATCH-1")
        if source == "required":
            p.add_argument("-s", "--source", type=int, required=True)
        elif source == "optional":
            p.add_argument("-s", "--source", type=int, help="default: every vertex")
        p.add_argument("-f", "--format", choices=formats, default="text")
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "build and print a refined projection",
            formats=("text", "json", "bracket"), source="required")
    p.add_argument("--pretty", action="store_true", help="one node per line in bracket output")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)

    p = add("path", cmd_path, "list shortest paths between two vertices", source="required")
    p.add_argument("-t", "--target", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)

    add("sssp", cmd_sssp, "distances from one source", source="required")

    p = add("apsp", cmd_apsp, "all-pairs distance matrix")
    p.add_argument("--parallel", type=int, default=1)

    p = add("check", cmd_check, "verify projections against the brute-force oracles",
            source="optional", batch=True)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p = add("bench", cmd_bench, "report build counters and timings",
            formats=("text", "json"), source="optional", batch=True)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--plot-dir", metavar="DIR", help="also render PNG figures into DIR")

    p = sub.add_parser("gen", help="print a seeded random graph")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--pair-prob", type=float, required=True)
    p.add_argument("--orient-prob", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, GraphError, BracketSyntaxError, ProjectionSizeError,
            BudgetExceeded, OSError, ValueError) as exc:
        print(f"projpaths {args.command}: {exc}", file=sys.stderr)
        return 2
