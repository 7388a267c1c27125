"""Brute-force reference answers for checking projections.

Nothing here touches the projection builder: distances come from a plain
queue BFS and shortest paths from exhaustive simple-path search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import MixedGraph
from .results import DistanceTable, PathSet

__all__ = [
    "BudgetExceeded",
    "OracleReport",
    "bfs_distances",
    "brute_force_shortest_paths",
    "check_projection",
]

DEFAULT_BUDGET = 2_000_000
PATH_CHECK_MAX_N = 12


class BudgetExceeded(RuntimeError):
    pass


def bfs_distances(g: MixedGraph, u: int) -> DistanceTable:
    g.check_vertex(u)
    dist: dict[int, int | None] = dict.fromkeys(g.vertices)
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.out_neighbors(x):
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return DistanceTable(u, dist)


def brute_force_shortest_paths(g: MixedGraph, u: int, v: int,
                               budget: int = DEFAULT_BUDGET) -> PathSet:
    """Every minimum-length simple ``u -> v`` path, by exhaustive DFS.

    Branches are cut once they are longer than the best complete path seen
    so far; this never removes a minimum-length path.  ``budget`` bounds
    the number of vertex expansions.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return PathSet(u, v, ((u,),))
    best = g.n  # a simple path has at most n - 1 hops
    found: list[tuple[int, ...]] = []
    expansions = 0
    stack = [(u,)]
    while stack:
        path = stack.pop()
        hops = len(path) - 1
        if hops >= best:
            continue
        expansions += 1
        if expansions > budget:
            raise BudgetExceeded(f"path search {u}->{v} exceeded {budget} expansions")
        for y in g.out_neighbors(path[-1]):
            if y in path:
                continue
            if y == v:
                if hops + 1 < best:
                    best = hops + 1
                    found = []
                found.append(path + (y,))
            else:
                stack.append(path + (y,))
    found = [p for p in found if len(p) - 1 == best]
    return PathSet(u, v, tuple(sorted(found)))


Mismatch = tuple[int, int, object, object]


@dataclass
class OracleReport:
    """Disagreements as ``(source, vertex, expected, actual)`` tuples."""

    distance_mismatches: list[Mismatch] = field(default_factory=list)
    pred_mismatches: list[Mismatch] = field(default_factory=list)
    path_set_mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.distance_mismatches or self.pred_mismatches
                    or self.path_set_mismatches)

    def extend(self, other: OracleReport) -> None:
        self.distance_mismatches += other.distance_mismatches
        self.pred_mismatches += other.pred_mismatches
        self.path_set_mismatches += other.path_set_mismatches

    def to_dict(self) -> dict:
        def conv(x):
            if isinstance(x, (tuple, list)):
                return [conv(i) for i in x]
            return x
        return {
            "ok": self.ok,
            "distance_mismatches": conv(self.distance_mismatches),
            "pred_mismatches": conv(self.pred_mismatches),
            "path_set_mismatches": conv(self.path_set_mismatches),
        }


def check_projection(g: MixedGraph, p, check_paths: bool | None = None) -> OracleReport:
    """Compare a refined projection of ``g`` against the oracles.

    Checks every distance against BFS and every predecessor set against
    ``{q : dist(q) = dist(v) - 1 and v in N(q)}``.  Path sets are compared
    with exhaustive search when ``check_paths`` is true; by default only
    for graphs of at most 12 vertices.
    """
    from .paths import enumerate_shortest_paths

    if check_paths is None:
        check_paths = g.n <= PATH_CHECK_MAX_N
    u = p.source
    report = OracleReport()
    dist = bfs_distances(g, u).dist
    for v in g.vertices:
        if dist[v] != p.level[v]:
            report.distance_mismatches.append((u, v, dist[v], p.level[v]))
        if v == u:
            expected: tuple[int, ...] = ()
        elif dist[v] is None:
            expected = ()
        else:
            expected = tuple(q for q in g.vertices
                             if dist[q] == dist[v] - 1 and g.has_link(q, v))
        actual = tuple(p.pred[v])
        if expected != actual:
            report.pred_mismatches.append((u, v, expected, actual))
        if check_paths:
            want = brute_force_shortest_paths(g, u, v).paths if dist[v] is not None else ()
            got = enumerate_shortest_paths(p, v).paths
            if want != got:
                report.path_set_mismatches.append((u, v, want, got))
    return report
