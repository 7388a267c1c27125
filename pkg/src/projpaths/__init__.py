"""Shortest paths in unweighted mixed graphs via refined graph projections."""

from importlib import resources

from .bracket import BracketSyntaxError, parse_bracket, projection_to_tree, to_bracket
from .graph import (
    EdgeKind,
    GraphError,
    GraphFormatError,
    MixedGraph,
    from_adjacency_matrix,
    load_graph,
    parse_graph_text,
    random_mixed_graph,
)
from .paths import (
    apsp,
    count_shortest_paths,
    distance,
    eccentricity,
    enumerate_shortest_paths,
    extract_path,
    sssp,
)
from .projection import (
    BuildStats,
    ProjectionSizeError,
    ProjectionTree,
    RefinedProjection,
    build_full,
    build_refined,
    refine_tree,
)
from .results import DistanceTable, PathSet

__version__ = "0.1.0"


def demo_graph() -> MixedGraph:
    """The 8-vertex mixed demonstration graph shipped with the package."""
    return parse_graph_text(
        resources.files(__package__).joinpath("data/paper-fig1.graph").read_text("utf-8"))
