"""Query result containers shared by the path queries and the oracles."""

from __future__ import annotations

from dataclasses import dataclass

Path = tuple[int, ...]


def _fmt(d: int | None) -> str:
    return "inf" if d is None else str(d)


@dataclass(frozen=True)
class PathSet:
    """Equal-length shortest paths from ``source`` to ``target``, lexicographic."""

    source: int
    target: int
    paths: tuple[Path, ...]
    truncated: bool = False

    @property
    def length(self) -> int | None:
        return len(self.paths[0]) - 1 if self.paths else None

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "distance": self.length,
            "paths": [list(p) for p in self.paths],
            "truncated": self.truncated,
        }

    def to_text(self) -> str:
        lines = [f"source {self.source} target {self.target} "
                 f"distance {_fmt(self.length)} paths {len(self.paths)}"
                 + (" (truncated)" if self.truncated else "")]
        lines += [" ".join(map(str, p)) for p in self.paths]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DistanceTable:
    """Hop counts from ``source``; ``None`` marks unreachable vertices."""

    source: int
    dist: dict[int, int | None]

    def to_dict(self) -> dict:
        return {"source": self.source,
                "dist": {str(v): d for v, d in sorted(self.dist.items())}}

    def to_text(self) -> str:
        width = max(len("vertex"), len(str(max(self.dist, default=1))))
        lines = [f"{'vertex':>{width}}  dist"]
        lines += [f"{v:>{width}}  {_fmt(d):>4}" for v, d in sorted(self.dist.items())]
        return "\n".join(lines) + "\n"


def matrix_to_text(matrix: list[list[int | None]]) -> str:
    """Aligned distance matrix with 1-based row and column labels."""
    n = len(matrix)
    cells = [[_fmt(d) for d in row] for row in matrix]
    width = max([len(str(n))] + [len(c) for row in cells for c in row])
    header = " " * width + " " + " ".join(f"{j:>{width}}" for j in range(1, n + 1))
    lines = [header]
    lines += [f"{i:>{width}} " + " ".join(f"{c:>{width}}" for c in row)
              for i, row in enumerate(cells, start=1)]
    return "\n".join(lines) + "\n"
