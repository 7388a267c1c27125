from dataclasses import replace

import pytest

from projpaths import MixedGraph, build_refined, parse_graph_text
from projpaths.oracle import (
    BudgetExceeded,
    bfs_distances,
    brute_force_shortest_paths,
    check_projection,
)


def test_bfs_demo(demo):
    assert bfs_distances(demo, 4).dist == {4: 0, 1: 1, 3: 1, 2: 2, 7: 3, 8: 3, 5: 4, 6: 4}


def test_bfs_complete_graph():
    k4 = MixedGraph.from_pairs(4, edges=[(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
    for u in k4.vertices:
        assert {v: d for v, d in bfs_distances(k4, u).dist.items() if v != u} == {
            v: 1 for v in k4.vertices if v != u}


def test_bfs_arc_cycle():
    g = parse_graph_text("n 3\na 1 2\na 2 3\na 3 1")
    assert bfs_distances(g, 1).dist == {1: 0, 2: 1, 3: 2}


def test_brute_force_demo(demo):
    assert brute_force_shortest_paths(demo, 4, 5).paths == ((4, 1, 2, 8, 5), (4, 3, 2, 8, 5))
    assert brute_force_shortest_paths(demo, 4, 3).paths == ((4, 3),)
    assert brute_force_shortest_paths(demo, 5, 6).paths == ((5, 8, 6),)
    assert brute_force_shortest_paths(demo, 7, 7).paths == ((7,),)


def test_brute_force_unreachable():
    g = parse_graph_text("n 3\na 1 2\na 2 3")
    assert brute_force_shortest_paths(g, 3, 1).paths == ()


def test_brute_force_budget():
    edges = [(a, b) for a in range(1, 11) for b in range(a + 1, 11) if (a, b) != (1, 10)]
    g = MixedGraph.from_pairs(10, edges=edges)
    with pytest.raises(BudgetExceeded):
        brute_force_shortest_paths(g, 1, 10, budget=3)


def test_check_demo_clean(demo):
    assert check_projection(demo, build_refined(demo, 4)).ok


def test_check_catches_truncated_pred(demo):
    p = build_refined(demo, 4)
    broken = replace(p, pred={**p.pred, 2: (1,)})
    report = check_projection(demo, broken)
    assert not report.ok
    assert (4, 2, (1, 3), (1,)) in report.pred_mismatches
    assert report.path_set_mismatches  # paths through 3 are gone
    assert report.to_dict()["pred_mismatches"][0] == [4, 2, [1, 3], [1]]


def test_check_catches_wrong_level(demo):
    p = build_refined(demo, 4)
    broken = replace(p, level={**p.level, 5: 3})
    assert check_projection(demo, broken, check_paths=False).distance_mismatches == [
        (4, 5, 4, 3)]


def test_check_skips_paths_on_large_graphs():
    g = MixedGraph.from_pairs(20, edges=[(i, i + 1) for i in range(1, 20)])
    p = build_refined(g, 1)
    broken = replace(p, pred={**p.pred, 20: ()})
    report = check_projection(g, broken)
    assert report.pred_mismatches and not report.path_set_mismatches
