"""Unweighted mixed graphs: arcs and edges over vertices numbered 1..n.

A graph is stored as its out-adjacency: ``N(v)`` holds every ``w`` with
``a[v][w] = 1``.  A pair is an *edge* when both directions are present and an
*arc* when only one is.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

__all__ = [
    "EdgeKind",
    "GraphError",
    "GraphFormatError",
    "MixedGraph",
    "SplitMix64",
    "from_adjacency_matrix",
    "load_graph",
    "parse_graph_text",
    "random_mixed_graph",
]


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class GraphFormatError(GraphError):
    """Malformed graph text; ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class EdgeKind(enum.Enum):
    NONE = "none"
    ARC_FORWARD = "arc-forward"
    ARC_BACKWARD = "arc-backward"
    EDGE = "edge"


@dataclass(frozen=True)
class MixedGraph:
    """Immutable mixed graph of order ``n``.

    ``adjacency[v - 1]`` is the ascending tuple of out-neighbors of vertex
    ``v``.  Use :meth:`from_pairs`, :func:`parse_graph_text` or
    :func:`from_adjacency_matrix` rather than building one by hand.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph order must be >= 1, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for v, row in enumerate(self.adjacency, start=1):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise GraphError(f"neighbors of {v} must be strictly ascending")
            for w in row:
                if not 1 <= w <= self.n:
                    raise GraphError(f"vertex {w} out of range [1, {self.n}]")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
        object.__setattr__(self, "_sets", tuple(frozenset(r) for r in self.adjacency))

    @classmethod
    def from_pairs(cls, n: int, edges: Iterable[tuple[int, int]] = (),
                   arcs: Iterable[tuple[int, int]] = ()) -> MixedGraph:
        """Build from undirected ``edges`` and directed ``arcs`` (1-based)."""
        if n < 1:
            raise GraphError(f"graph order must be >= 1, got {n}")
        out: list[set[int]] = [set() for _ in range(n)]
        seen: set[frozenset[int]] = set()
        for kind, pairs in (("edge", edges), ("arc", arcs)):
            for u, v in pairs:
                _check_pair(n, u, v)
                key = frozenset((u, v))
                if key in seen:
                    raise GraphError(f"duplicate declaration of pair ({u}, {v})")
                seen.add(key)
                out[u - 1].add(v)
                if kind == "edge":
                    out[v - 1].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in out))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphError(f"invalid vertex {v!r}; expected 1..{self.n}")

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Ascending out-neighborhood ``N(v)``."""
        self.check_vertex(v)
        return self.adjacency[v - 1]

    def has_link(self, u: int, v: int) -> bool:
        """True when ``v`` can be reached from ``u`` in one hop."""
        return v in self._sets[u - 1]

    def classify_pair(self, u: int, v: int) -> EdgeKind:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise GraphError(f"cannot classify a vertex against itself ({u})")
        fwd, back = self.has_link(u, v), self.has_link(v, u)
        if fwd and back:
            return EdgeKind.EDGE
        if fwd:
            return EdgeKind.ARC_FORWARD
        if back:
            return EdgeKind.ARC_BACKWARD
        return EdgeKind.NONE

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u < v``, ascending."""
        return [(u, v) for u in self.vertices for v in self.adjacency[u - 1]
                if u < v and self.has_link(v, u)]

    def arcs(self) -> list[tuple[int, int]]:
        """Directed arcs ``u -> v``, ascending."""
        return [(u, v) for u in self.vertices for v in self.adjacency[u - 1]
                if not self.has_link(v, u)]

    def census(self) -> dict[str, int]:
        return {"n": self.n, "edges": len(self.edges()), "arcs": len(self.arcs())}

    def to_matrix(self) -> list[list[int]]:
        return [[1 if self.has_link(i, j) else 0 for j in self.vertices]
                for i in self.vertices]

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"e {u} {v}" for u, v in self.edges()]
        lines += [f"a {u} {v}" for u, v in self.arcs()]
        return "\n".join(lines) + "\n"


def _check_pair(n: int, u: int, v: int) -> None:
    for w in (u, v):
        if not 1 <= w <= n:
            raise GraphError(f"vertex {w} out of range [1, {n}]")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


_INT = re.compile(r"[+-]?\d+\Z")


def parse_graph_text(text: str) -> MixedGraph:
    """Parse the line-oriented graph format.

    ``#`` starts a comment, the first significant line is ``n <count>``,
    followed by ``e <u> <v>`` (edge) and ``a <u> <v>`` (arc u -> v) lines in
    any order.

    >>> g = parse_graph_text("n 3\\na 1 2\\ne 2 3")
    >>> g.out_neighbors(2)
    (3,)
    """
    n = None
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    seen: dict[frozenset[int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if not all(_INT.match(t) for t in tokens[1:]):
            raise GraphFormatError(f"expected integer arguments in {raw.strip()!r}", lineno)
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise GraphFormatError("first line must be 'n <count>'", lineno)
            n = int(tokens[1])
            if n < 1:
                raise GraphFormatError(f"vertex count must be >= 1, got {n}", lineno)
            continue
        if tokens[0] not in ("e", "a") or len(tokens) != 3:
            raise GraphFormatError(f"expected 'e <u> <v>' or 'a <u> <v>', got {raw.strip()!r}",
                                   lineno)
        u, v = int(tokens[1]), int(tokens[2])
        try:
            _check_pair(n, u, v)
        except GraphError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        key = frozenset((u, v))
        if key in seen:
            raise GraphFormatError(
                f"pair ({u}, {v}) already declared on line {seen[key]}", lineno)
        seen[key] = lineno
        (edges if tokens[0] == "e" else arcs).append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return MixedGraph.from_pairs(n, edges, arcs)


def load_graph(path) -> MixedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def from_adjacency_matrix(matrix: Sequence[Sequence[int]]) -> MixedGraph:
    """Graph whose ``N(i)`` is ``{j : matrix[i][j] == 1, j != i}``.

    The diagonal is ignored.  Rows are vertices 1..n in order.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise GraphError("adjacency matrix must be square and non-empty")
    adjacency = []
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if i != j and cell not in (0, 1):
                raise GraphError(f"matrix entry ({i + 1}, {j + 1}) must be 0 or 1, got {cell!r}")
        adjacency.append(tuple(j + 1 for j, cell in enumerate(row) if cell == 1 and j != i))
    return MixedGraph(n, tuple(adjacency))


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014), as used to seed xoshiro.

    Each call to :meth:`next` adds ``0x9E3779B97F4A7C15`` to the state and
    returns the mixed state.  Floats take the top 53 bits, so a seed produces
    the same stream in any language with 64-bit unsigned arithmetic.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next() >> 11) * (1.0 / (1 << 53))


def random_mixed_graph(n: int, pair_prob: float, orient_prob: float, seed: int) -> MixedGraph:
    """Seeded random mixed graph.

    Unordered pairs ``(u, v)``, ``u < v``, are visited in lexicographic
    order.  For each pair one float decides presence (``< pair_prob``); a
    present pair draws a second float, and if that is ``< orient_prob`` the
    pair becomes an arc whose direction is ``u -> v`` when the low bit of a
    third draw is 0 and ``v -> u`` otherwise.  Present pairs that are not
    oriented become edges.
    """
    if n < 1:
        raise GraphError(f"graph order must be >= 1, got {n}")
    for name, p in (("pair_prob", pair_prob), ("orient_prob", orient_prob)):
        if not 0.0 <= p <= 1.0:
            raise GraphError(f"{name} must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges, arcs = [], []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() >= pair_prob:
                continue
            if rng.random() < orient_prob:
                arcs.append((u, v) if rng.next() & 1 == 0 else (v, u))
            else:
                edges.append((u, v))
    return MixedGraph.from_pairs(n, edges, arcs)
