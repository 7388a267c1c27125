"""Graph projections: full path trees, their refinement, and the refined builder.

A full projection ``P(u)`` is the tree of every simple path leaving ``u``,
expanded level by level.  Keeping only the instances of each vertex that sit
at its lowest depth leaves exactly the shortest paths; :func:`build_refined`
produces that refined structure directly from the adjacency, as one
predecessor row plus the level sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import GraphError, MixedGraph

__all__ = [
    "BuildStats",
    "ProjectionSizeError",
    "ProjectionTree",
    "RefinedProjection",
    "build_full",
    "build_refined",
    "flatten_tree",
    "refine_tree",
]

DEFAULT_NODE_CAP = 1_000_000


class ProjectionSizeError(RuntimeError):
    """Tree expansion would exceed the configured node cap."""


@dataclass(frozen=True)
class ProjectionTree:
    """A vertex instance and its ordered children.

    Equality is structural over ``vertex`` and ``children`` only;
    ``depth_limit`` records the expansion depth of a full projection and
    is informational.
    """

    vertex: int
    children: tuple[ProjectionTree, ...] = ()
    depth_limit: int | None = field(default=None, compare=False)

    def iter_nodes(self):
        """Yield ``(depth, node, parent)`` in breadth-first order."""
        level = [(self, None)]
        depth = 0
        while level:
            nxt = []
            for node, parent in level:
                yield depth, node, parent
                nxt.extend((c, node) for c in node.children)
            level = nxt
            depth += 1

    def size(self) -> int:
        return sum(1 for _ in self.iter_nodes())

    def paths(self):
        """Yield every root-to-node vertex sequence, depth first."""
        stack = [(self, (self.vertex,))]
        while stack:
            node, path = stack.pop()
            yield path
            stack.extend((c, path + (c.vertex,)) for c in reversed(node.children))


def _freeze(vertex: int, kids: dict, depth_limit=None) -> ProjectionTree:
    """Turn nested ``{id: (vertex, kids)}`` builders into frozen trees, iteratively."""
    # post-order: build every child before its parent
    order = []
    stack = [(vertex, kids)]
    while stack:
        item = stack.pop()
        order.append(item)
        stack.extend(item[1])
    built = {}
    for v, ch in reversed(order):
        built[id(ch)] = ProjectionTree(v, tuple(built[id(c[1])] for c in ch))
    root = built[id(kids)]
    return ProjectionTree(root.vertex, root.children, depth_limit)


def build_full(g: MixedGraph, u: int, max_depth: int, node_cap: int = DEFAULT_NODE_CAP
               ) -> ProjectionTree:
    """Full projection of ``g`` from ``u`` down to ``max_depth`` levels.

    Children of an instance of ``x`` are ``N(x)`` minus the vertices on the
    path from ``u`` to that instance, ascending.  Instances whose exclusion
    set exhausts ``N(x)`` are leaves.  Raises :class:`ProjectionSizeError`
    once more than ``node_cap`` instances would be created.
    """
    g.check_vertex(u)
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    root_kids: list = []
    count = 1
    stack = [(u, root_kids, (u,))]
    while stack:
        x, kids, on_path = stack.pop()
        if len(on_path) > max_depth:
            continue
        for y in g.adjacency[x - 1]:
            if y in on_path:
                continue
            count += 1
            if count > node_cap:
                raise ProjectionSizeError(
                    f"full projection from {u} exceeds node cap {node_cap}")
            child = (y, [])
            kids.append(child)
            stack.append((y, child[1], on_path + (y,)))
    return _freeze(u, root_kids, depth_limit=max_depth)


def flatten_tree(t: ProjectionTree) -> tuple[dict[int, int], dict[int, tuple[int, ...]]]:
    """Per-vertex minimum depth and the parents of its minimum-depth instances."""
    depth: dict[int, int] = {}
    parents: dict[int, set[int]] = {}
    for d, node, parent in t.iter_nodes():
        v = node.vertex
        if v not in depth:
            depth[v] = d
            parents[v] = set()
        if d == depth[v] and parent is not None:
            parents[v].add(parent.vertex)
    return depth, {v: tuple(sorted(p)) for v, p in parents.items()}


def refine_tree(t: ProjectionTree) -> ProjectionTree:
    """Drop every vertex instance deeper than that vertex's shallowest one.

    The subtree under a dropped instance goes with it, so only
    shortest paths remain.
    """
    depth, _ = flatten_tree(t)
    root_kids: list = []
    stack = [(t, root_kids, 0)]
    while stack:
        node, kids, d = stack.pop()
        for c in node.children:
            if depth[c.vertex] == d + 1:
                child = (c.vertex, [])
                kids.append(child)
                stack.append((c, child[1], d + 1))
    return _freeze(t.vertex, root_kids, depth_limit=t.depth_limit)


@dataclass(frozen=True)
class BuildStats:
    vertices_placed: int = 0
    adjacency_cells_read: int = 0
    levels_built: int = 0

    def to_dict(self) -> dict[str, int]:
        return {
            "vertices_placed": self.vertices_placed,
            "adjacency_cells_read": self.adjacency_cells_read,
            "levels_built": self.levels_built,
        }


@dataclass(frozen=True)
class RefinedProjection:
    """Shortest-path predecessor row of one source vertex.

    ``pred[v]`` is the ascending tuple of vertices preceding ``v`` on
    shortest paths from ``source`` (empty for the source and for
    unreachable vertices).  ``level[v]`` is the hop distance or ``None``.
    ``frontier_history[k]`` is the ascending set of vertices at distance
    ``k``; index 0 holds the source alone.
    """

    source: int
    n: int
    pred: dict[int, tuple[int, ...]]
    level: dict[int, int | None]
    frontier_history: tuple[tuple[int, ...], ...]
    stats: BuildStats

    @property
    def eccentricity(self) -> int:
        return len(self.frontier_history) - 1

    @property
    def unreachable(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.level[v] is None]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphError(f"invalid vertex {v!r}; expected 1..{self.n}")

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "levels": [list(f) for f in self.frontier_history[1:]],
            "pred": {str(v): list(p) for v, p in sorted(self.pred.items()) if p},
            "unreachable": self.unreachable,
            "stats": self.stats.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict, n: int) -> RefinedProjection:
        """Inverse of :meth:`to_dict`; ``n`` is the graph order."""
        source = int(data["source"])
        history = ((source,),) + tuple(tuple(f) for f in data["levels"])
        level: dict[int, int | None] = {v: None for v in range(1, n + 1)}
        for k, frontier in enumerate(history):
            for v in frontier:
                level[v] = k
        pred = {v: () for v in range(1, n + 1)}
        pred.update({int(v): tuple(p) for v, p in data["pred"].items()})
        return cls(source, n, pred, level, history, BuildStats(**data["stats"]))


def build_refined(g: MixedGraph, u: int) -> RefinedProjection:
    """Refined projection ``P'(u)`` built straight from the adjacency rows.

    Level ``k`` is generated from every vertex ``x`` of level ``k - 1`` as
    ``N(x)`` minus the blocked set (vertices whose distance is already
    known).  The blocked set grows only after a whole level is done, so a
    vertex reachable from several parents on the same level records all of
    them.  Stops when every vertex is blocked or a level comes out empty.
    """
    g.check_vertex(u)
    level: dict[int, int | None] = dict.fromkeys(g.vertices)
    level[u] = 0
    pred: dict[int, tuple[int, ...]] = dict.fromkeys(g.vertices, ())
    history = [(u,)]
    blocked = {u}
    frontier: tuple[int, ...] = (u,)
    cells = 0
    k = 0
    while frontier and len(blocked) < g.n:
        k += 1
        found: dict[int, list[int]] = {}
        for x in frontier:
            for y in g.adjacency[x - 1]:
                cells += 1
                if y not in blocked:
                    found.setdefault(y, []).append(x)
        if not found:
            break
        frontier = tuple(sorted(found))
        for y in frontier:
            level[y] = k
            pred[y] = tuple(found[y])
        blocked.update(frontier)
        history.append(frontier)
    stats = BuildStats(
        vertices_placed=len(blocked) - 1,
        adjacency_cells_read=cells,
        levels_built=len(history) - 1,
    )
    return RefinedProjection(u, g.n, pred, level, tuple(history), stats)
