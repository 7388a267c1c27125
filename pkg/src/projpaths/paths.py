"""Distance, path enumeration and path counting over refined projections."""

from __future__ import annotations

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice

from .graph import MixedGraph
from .projection import RefinedProjection, build_refined
from .results import DistanceTable, Path, PathSet

__all__ = [
    "COUNTER_BITS",
    "PathCount",
    "apsp",
    "count_shortest_paths",
    "distance",
    "eccentricity",
    "enumerate_shortest_paths",
    "extract_path",
    "iter_shortest_paths",
    "sssp",
]

COUNTER_BITS = 64
_COUNTER_MAX = (1 << COUNTER_BITS) - 1


def distance(p: RefinedProjection, v: int) -> int | None:
    p.check_vertex(v)
    return p.level[v]


def eccentricity(p: RefinedProjection) -> int:
    """Largest finite distance from the source (0 for an isolated source)."""
    return p.eccentricity


def _ancestors(p: RefinedProjection, v: int) -> set[int]:
    """Vertices of the predecessor DAG lying on some shortest source->v path."""
    seen = {v}
    stack = [v]
    while stack:
        for q in p.pred[stack.pop()]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def iter_shortest_paths(p: RefinedProjection, v: int) -> Iterator[Path]:
    """Lazily yield every shortest source->``v`` path in lexicographic order.

    The predecessor sets are expanded backwards from ``v`` to find the
    sub-DAG that leads to it; the paths are then walked forwards through
    that sub-DAG choosing successors in ascending order, so each step
    either extends toward ``v`` or finishes a path.
    """
    p.check_vertex(v)
    if p.level[v] is None:
        return
    anc = _ancestors(p, v)
    succ: dict[int, list[int]] = {x: [] for x in anc}
    for y in sorted(anc):
        for q in p.pred[y]:
            succ[q].append(y)
    stack = [(p.source, (p.source,))]
    while stack:
        x, path = stack.pop()
        if x == v:
            yield path
            continue
        stack.extend((y, path + (y,)) for y in reversed(succ[x]))


def enumerate_shortest_paths(p: RefinedProjection, v: int, limit: int | None = None) -> PathSet:
    """All shortest paths to ``v``, at most ``limit`` of them.

    ``truncated`` is set when more paths exist beyond the limit.
    Unreachable targets give an empty, untruncated set.
    """
    if limit is not None and limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    it = iter_shortest_paths(p, v)
    if limit is None:
        return PathSet(p.source, v, tuple(it))
    paths = tuple(islice(it, limit))
    truncated = next(it, None) is not None
    return PathSet(p.source, v, paths, truncated)


@dataclass(frozen=True)
class PathCount:
    """Number of shortest paths; ``value`` is None when it overflowed."""

    value: int | None
    overflow: bool = False

    def to_dict(self) -> dict:
        return {"count": self.value, "overflow": self.overflow}


def count_shortest_paths(p: RefinedProjection, v: int) -> PathCount:
    """Count shortest paths to ``v`` with a 64-bit saturating counter.

    ``sigma(source) = 1`` and ``sigma(y)`` is the sum of ``sigma`` over
    ``pred(y)``, evaluated level by level over the ancestors of ``v``.
    """
    p.check_vertex(v)
    if p.level[v] is None:
        return PathCount(0)
    anc = _ancestors(p, v)
    sigma: dict[int, int | None] = {p.source: 1}
    for y in sorted(anc - {p.source}, key=lambda x: p.level[x]):
        total = 0
        for q in p.pred[y]:
            sq = sigma[q]
            if sq is None:
                total = None
                break
            total += sq
            if total > _COUNTER_MAX:
                total = None
                break
        sigma[y] = total
    if sigma[v] is None:
        return PathCount(None, overflow=True)
    return PathCount(sigma[v])


def extract_path(p: RefinedProjection, v: int) -> tuple[Path | None, int]:
    """One shortest path by backward walk over the smallest predecessors.

    Returns ``(path, touched)`` where ``touched`` counts the vertices
    visited by the walk; it equals ``distance + 1`` for reachable targets.
    """
    p.check_vertex(v)
    if p.level[v] is None:
        return None, 0
    walk = [v]
    touched = 1
    while walk[-1] != p.source:
        walk.append(p.pred[walk[-1]][0])
        touched += 1
    return tuple(reversed(walk)), touched


def sssp(g: MixedGraph, u: int) -> tuple[DistanceTable, RefinedProjection]:
    """Distances from ``u`` together with the projection they came from."""
    p = build_refined(g, u)
    return DistanceTable(u, dict(p.level)), p


def _row(args):
    g, u, keep = args
    p = build_refined(g, u)
    return [p.level[v] for v in g.vertices], (p if keep else None)


def apsp(g: MixedGraph, workers: int = 1, keep_projections: bool = False):
    """All-pairs distance matrix, one refined projection per source.

    Row ``u - 1`` holds distances from ``u``; ``None`` is unreachable.
    With ``workers > 1`` the sources are spread over a process pool; rows
    are collected in source order, so the result does not depend on it.
    Returns ``(matrix, projections)`` when ``keep_projections`` is set.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    jobs = [(g, u, keep_projections) for u in g.vertices]
    if workers == 1 or g.n == 1:
        rows = [_row(j) for j in jobs]
    else:
        chunk = max(1, g.n // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, jobs, chunksize=chunk))
    matrix = [r for r, _ in rows]
    if keep_projections:
        return matrix, [proj for _, proj in rows]
    return matrix
