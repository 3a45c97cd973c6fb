from math import inf

from hypothesis import given, settings

from replacement_paths.generators import corpus
from replacement_paths.graph import Graph
from replacement_paths.nodes import (
    build_contracted_graph,
    classify_forest,
    node_replacements,
    partial_distances,
    reconstruct_node_path,
)
from replacement_paths.oracle import masked_dijkstra
from replacement_paths.pipeline import solve
from replacement_paths.rspdag import CandidateEdge, ReplacementReport, build_and_sweep, partition_candidates
from replacement_paths.spt import compute_labels, dijkstra, extract_path

from conftest import connected_graphs
from helpers import enumerate_min_distance, induced_dijkstra


def stages(g):
    ts = dijkstra(g, g.source)
    tt = dijkstra(g, g.target)
    path, pe = extract_path(ts, g.target)
    lab = compute_labels(ts, path, pe)
    dag = build_and_sweep(partition_candidates(g, ts, tt, lab))
    cg = build_contracted_graph(g, ts, lab)
    return ts, tt, lab, dag, cg, partial_distances(cg)


def test_classify_forest_examples():
    s, v1, v2, t, a, b = range(6)
    g = Graph.from_edges(6, [(s, v1, 1), (v1, v2, 1), (v2, t, 1), (s, a, 1), (v1, b, 1)], s, t)
    _, _, lab, _, _, _ = stages(g)
    forest = classify_forest(lab)
    assert forest[b] == 1
    assert forest[v1] is None and forest[v2] is None
    assert forest[a] is None


def test_contracted_edge_single_and_two_terms():
    # s - v1 - t path, a under s at distance 2, b under v1
    s, v1, t, a, b = range(5)
    base = [(s, v1, 1), (v1, t, 1), (s, a, 2), (v1, b, 1), (a, b, 3)]
    g = Graph.from_edges(5, base, s, t)
    _, _, _, _, cg, ptree = stages(g)
    assert cg.contracted_edges() == {b: (5.0, a, 4)}
    assert ptree.dist[b] == 5

    h = Graph.from_edges(5, base + [(s, b, 4)], s, t)
    _, _, _, _, cg, _ = stages(h)
    assert cg.contracted_edges() == {b: (4.0, s, 5)}


def test_no_forest_vertices_gives_bare_source(triangle):
    _, _, _, _, cg, ptree = stages(triangle)
    assert cg.vertices == [0] and cg.edges == []
    assert ptree.dist[1] == inf


def test_partial_distance_examples():
    # b contracted at 5, c behind b in the same forest; d isolated in the forest
    s, v1, t, a, b, c, d = range(7)
    g = Graph.from_edges(
        7,
        [(s, v1, 1), (v1, t, 1), (s, a, 2), (v1, b, 1), (a, b, 3),
         (v1, c, 1), (b, c, 1), (v1, d, 1)],
        s, t,
    )
    _, _, _, _, cg, ptree = stages(g)
    assert ptree.dist[b] == 5
    assert ptree.dist[c] == 6
    assert ptree.dist[d] == inf


def test_node_replacement_triangle(triangle):
    ts, tt, lab, dag, cg, ptree = stages(triangle)
    (rep,) = node_replacements(triangle, ts, tt, lab, dag, cg, ptree, with_paths=True)
    assert enumerate_min_distance(triangle, 0, 2, banned_vertex=1) == 10
    assert (rep.index, rep.distance, rep.via) == (1, 10, "direct")
    assert rep.swap.edge_id == 2 and rep.path == [0, 2]


def test_node_replacement_through_forest(forest_instance):
    g = forest_instance
    s, v1, v2, t, b = range(5)
    ts, tt, lab, dag, cg, ptree = stages(g)
    assert lab.path == [s, v1, v2, t]
    reports = node_replacements(g, ts, tt, lab, dag, cg, ptree, with_paths=True)
    first = reports[0]
    assert enumerate_min_distance(g, s, t, banned_vertex=v1) == 5
    assert dag.minimum(0, 2) is None
    assert (first.distance, first.via) == (5, "forest")
    assert (first.swap.x, first.swap.y) == (b, t)
    assert first.path == [s, b, t]


def test_node_replacement_single_edge_path():
    g = Graph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)], 0, 2)
    ts, tt, lab, dag, cg, ptree = stages(g)
    assert lab.l == 1
    assert node_replacements(g, ts, tt, lab, dag, cg, ptree) == []


def test_reconstruct_direct_degenerate(triangle):
    ts, tt, _, _, cg, ptree = stages(triangle)
    rep = ReplacementReport("node", 1, 10.0, CandidateEdge(10.0, 0.0, 2, 0, 2), via="direct")
    assert reconstruct_node_path(rep, ts, tt, cg, ptree) == [0, 2]


@settings(max_examples=150)
@given(connected_graphs())
def test_partial_distances_match_explicit_subgraph(g):
    ts, tt, lab, dag, cg, ptree = stages(g)
    for i in range(1, lab.l):
        keep = {v for v in range(g.n) if lab.label[v] is not None and lab.label[v] <= i} - {lab.path[i]}
        dist = induced_dijkstra(g, g.source, keep)
        for x in range(g.n):
            if cg.forest[x] == i:
                assert ptree.dist[x] == dist[x]


@settings(max_examples=200)
@given(connected_graphs())
def test_node_distances_match_oracle(g):
    sol = solve(g, with_paths=True)
    lab = sol.labeling
    for rep in sol.node_reports:
        vi = lab.path[rep.index]
        assert rep.distance == masked_dijkstra(g, g.source, banned_vertex=vi)[0][g.target]
        if rep.path is None:
            continue
        assert vi not in rep.path
        k = rep.path.index(rep.swap.y)
        assert rep.path[k - 1] == rep.swap.x
        assert all(lab.label[v] <= rep.index for v in rep.path[:k])
        assert lab.label[rep.swap.y] > rep.index


def test_winner_endpoints_keep_their_distances():
    for g in corpus(150, seed=8):
        sol = solve(g)
        lab = sol.labeling
        for rep in sol.node_reports:
            if rep.swap is None:
                continue
            vi = lab.path[rep.index]
            from_s = masked_dijkstra(g, g.source, banned_vertex=vi)[0]
            from_t = masked_dijkstra(g, g.target, banned_vertex=vi)[0]
            if rep.via == "direct":
                assert lab.label[rep.swap.x] < rep.index
                assert from_s[rep.swap.x] == sol.ts.dist[rep.swap.x]
            assert from_t[rep.swap.y] == sol.tt.dist[rep.swap.y]


def test_forest_scan_is_disjoint():
    for g in corpus(150, seed=9):
        assert solve(g).counters["cpp_scan"] <= g.m
