import itertools

import pytest
from hypothesis import given, settings

from projpaths import (
    GraphError,
    MixedGraph,
    ProjectionSizeError,
    ProjectionTree,
    RefinedProjection,
    build_full,
    build_refined,
    parse_graph_text,
    random_mixed_graph,
    refine_tree,
)
from projpaths.bracket import to_bracket
from projpaths.oracle import bfs_distances
from projpaths.projection import flatten_tree

from strategies import mixed_graphs


def simple_paths_upto(g, u, k):
    """Every simple path from u with at most k hops, by permutation search."""
    found = {(u,)}
    others = [v for v in g.vertices if v != u]
    for hops in range(1, min(k, g.n - 1) + 1):
        for tail in itertools.permutations(others, hops):
            path = (u,) + tail
            if all(g.has_link(a, b) for a, b in zip(path, path[1:])):
                found.add(path)
    return found


def leaf(v):
    return ProjectionTree(v)


def test_full_depth_one_is_neighborhood(demo):
    assert build_full(demo, 1, 1) == ProjectionTree(1, (leaf(2), leaf(4)))


def test_full_depth_two_from_4(demo):
    expected = ProjectionTree(4, (ProjectionTree(1, (leaf(2),)), ProjectionTree(3, (leaf(2),))))
    t = build_full(demo, 4, 2)
    assert t == expected
    assert set(t.paths()) == simple_paths_upto(demo, 4, 2)


def test_full_path_graph():
    g = parse_graph_text("n 3\ne 1 2\ne 2 3")
    assert to_bracket(build_full(g, 1, 2)) == "1(2(3))"


def test_full_depth_zero(demo):
    t = build_full(demo, 5, 0)
    assert t == leaf(5) and t.depth_limit == 0


@pytest.mark.parametrize("u, k", [(1, 3), (4, 4), (8, 7), (5, 5)])
def test_full_matches_simple_path_oracle(demo, u, k):
    t = build_full(demo, u, k)
    paths = list(t.paths())
    assert len(paths) == len(set(paths))
    assert set(paths) == simple_paths_upto(demo, u, k)


def test_full_children_ascending(demo):
    for _, node, _ in build_full(demo, 2, 5).iter_nodes():
        kids = [c.vertex for c in node.children]
        assert kids == sorted(kids)


def test_full_node_cap():
    g = random_mixed_graph(9, 1.0, 0.0, 1)
    with pytest.raises(ProjectionSizeError):
        build_full(g, 1, 8, node_cap=1000)


def test_full_invalid_input(demo):
    with pytest.raises(GraphError):
        build_full(demo, 9, 2)
    with pytest.raises(ValueError):
        build_full(demo, 1, -1)


def test_refine_full_demo(demo):
    depth, _ = flatten_tree(refine_tree(build_full(demo, 4, 4)))
    assert depth == {4: 0, 1: 1, 3: 1, 2: 2, 7: 3, 8: 3, 5: 4, 6: 4}


def test_refine_keeps_only_minimum_depth_instances(demo):
    t = refine_tree(build_full(demo, 4, 4))
    depth, _ = flatten_tree(t)
    for d, node, _ in t.iter_nodes():
        assert depth[node.vertex] == d


def test_refine_idempotent_on_refined_input():
    t = ProjectionTree(1, (ProjectionTree(2, (leaf(3),)), leaf(4)))
    assert refine_tree(t) == t
    assert refine_tree(refine_tree(t)) == t


def test_refine_prunes_subtree_below_dropped_instance():
    # 3 appears at depth 1 and depth 2; the deeper copy and its child go
    t = ProjectionTree(1, (ProjectionTree(2, (ProjectionTree(3, (leaf(5),)),)), leaf(3)))
    assert refine_tree(t) == ProjectionTree(1, (leaf(2), leaf(3)))


def test_refine_paths_are_shortest(demo):
    for u in demo.vertices:
        dist = bfs_distances(demo, u).dist
        t = refine_tree(build_full(demo, u, demo.n - 1))
        for path in t.paths():
            assert len(path) - 1 == dist[path[-1]]


DEMO_PRED_4 = {1: (4,), 2: (1, 3), 3: (4,), 4: (), 5: (8,), 6: (8,), 7: (2,), 8: (2,)}
DEMO_LEVEL_4 = {1: 1, 2: 2, 3: 1, 4: 0, 5: 4, 6: 4, 7: 3, 8: 3}


def test_refined_demo_source_4(demo):
    p = build_refined(demo, 4)
    assert p.pred == DEMO_PRED_4
    assert p.level == DEMO_LEVEL_4
    assert p.frontier_history == ((4,), (1, 3), (2,), (7, 8), (5, 6))
    assert p.eccentricity == 4
    assert p.stats.levels_built == 4
    assert p.stats.vertices_placed == 7
    # rows read: N(4) at level 1, N(1)+N(3), N(2), N(7)+N(8)
    assert p.stats.adjacency_cells_read == 2 + 4 + 4 + 5


def test_refined_demo_source_1(demo):
    p = build_refined(demo, 1)
    assert {v: p.level[v] for v in (2, 4, 3, 7, 8, 5, 6)} == {
        2: 1, 4: 1, 3: 2, 7: 2, 8: 2, 5: 3, 6: 3}
    assert p.pred[3] == (2, 4)
    assert p.level == bfs_distances(demo, 1).dist


def test_refined_unreachable():
    g = parse_graph_text("n 3\na 1 2\na 2 3")
    p = build_refined(g, 3)
    assert p.level == {1: None, 2: None, 3: 0}
    assert p.pred == {1: (), 2: (), 3: ()}
    assert p.unreachable == [1, 2]
    assert p.frontier_history == ((3,),)
    assert p.stats.vertices_placed == 0 and p.stats.levels_built == 0


def test_refined_invalid_source(demo):
    with pytest.raises(GraphError):
        build_refined(demo, 0)


def test_refined_json_shape(demo):
    d = build_refined(demo, 4).to_dict()
    assert d == {
        "source": 4,
        "levels": [[1, 3], [2], [7, 8], [5, 6]],
        "pred": {"1": [4], "2": [1, 3], "3": [4], "5": [8], "6": [8], "7": [2], "8": [2]},
        "unreachable": [],
        "stats": {"vertices_placed": 7, "adjacency_cells_read": 15, "levels_built": 4},
    }


def test_json_key_order_is_numeric():
    g = MixedGraph.from_pairs(12, edges=[(1, v) for v in range(2, 13)])
    assert list(build_refined(g, 1).to_dict()["pred"]) == [str(v) for v in range(2, 13)]


@given(mixed_graphs(max_n=9))
def test_json_round_trip(g):
    for u in g.vertices:
        p = build_refined(g, u)
        assert RefinedProjection.from_dict(p.to_dict(), g.n) == p


@settings(max_examples=150)
@given(mixed_graphs(max_n=9))
def test_refined_invariants(g):
    for u in g.vertices:
        p = build_refined(g, u)
        dist = bfs_distances(g, u).dist
        assert p.level == dist
        assert p.level[u] == 0 and p.pred[u] == ()
        for v in g.vertices:
            if v == u:
                continue
            assert bool(p.pred[v]) == (p.level[v] is not None)
            for q in p.pred[v]:
                assert p.level[q] == p.level[v] - 1 and g.has_link(q, v)
            assert list(p.pred[v]) == sorted(p.pred[v])
        placed = [v for f in p.frontier_history for v in f]
        assert sorted(placed) == [v for v in g.vertices if dist[v] is not None]
        for k, f in enumerate(p.frontier_history):
            assert all(p.level[v] == k for v in f)
        reachable = sum(d is not None for d in dist.values())
        assert p.stats.vertices_placed == reachable - 1 <= g.n
        assert p.stats.levels_built == max(d for d in dist.values() if d is not None)


@settings(max_examples=100)
@given(mixed_graphs(max_n=7))
def test_refine_tree_equals_refined_builder(g):
    for u in g.vertices:
        p = build_refined(g, u)
        depth, parents = flatten_tree(refine_tree(build_full(g, u, p.eccentricity)))
        assert depth == {v: d for v, d in p.level.items() if d is not None}
        assert {v: ps for v, ps in parents.items() if v != u} == {
            v: ps for v, ps in p.pred.items() if ps}
