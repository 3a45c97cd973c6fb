"""Brute-force ground truth: rerun Dijkstra with one element deleted."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import inf
from typing import List, Optional, Sequence

from .graph import Graph
from .pipeline import solve
from .spt import dijkstra, extract_path


class ContractViolation(ValueError):
    """The oracle was asked about an element that is not on the s-t path."""


@dataclass
class OracleReport:
    kind: str
    index: int
    distance: float
    path: Optional[List[int]]


@dataclass
class Mismatch:
    kind: str
    index: int
    fast: float
    oracle: float
    reason: str


@dataclass
class ComparisonSummary:
    edge_checks: int = 0
    node_checks: int = 0
    forest_wins: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: "ComparisonSummary") -> None:
        self.edge_checks += other.edge_checks
        self.node_checks += other.node_checks
        self.forest_wins += other.forest_wins
        self.mismatches.extend(other.mismatches)


def masked_dijkstra(
    g: Graph,
    root: int,
    banned_edge: Optional[int] = None,
    banned_vertex: Optional[int] = None,
):
    """Plain Dijkstra ignoring one edge id and/or one vertex; returns (dist, parent)."""
    dist = [inf] * g.n
    parent: List[Optional[int]] = [None] * g.n
    if root == banned_vertex:
        return dist, parent
    dist[root] = 0.0
    heap = [(0.0, root)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, eid in g.adjacency[u]:
            if eid == banned_edge or v == banned_vertex:
                continue
            nd = d + g.edges[eid].weight
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, parent


def bellman_ford(g: Graph, root: int, banned_edge=None, banned_vertex=None) -> List[float]:
    dist = [inf] * g.n
    if root == banned_vertex:
        return dist
    dist[root] = 0.0
    for _ in range(g.n - 1):
        changed = False
        for e in g.edges:
            if e.id == banned_edge or banned_vertex in (e.u, e.v):
                continue
            if dist[e.u] + e.weight < dist[e.v]:
                dist[e.v] = dist[e.u] + e.weight
                changed = True
            if dist[e.v] + e.weight < dist[e.u]:
                dist[e.u] = dist[e.v] + e.weight
                changed = True
        if not changed:
            break
    return dist


def _walk(parent, t):
    out = [t]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def shortest_path(g: Graph):
    """Vertices and edge ids of the shortest s-t path chosen by the fast pipeline."""
    return extract_path(dijkstra(g, g.source), g.target)


def oracle_edge(g: Graph, edge_id: int, path_edges: Optional[Sequence[int]] = None) -> OracleReport:
    if path_edges is None:
        path_edges = shortest_path(g)[1]
    if edge_id not in path_edges:
        raise ContractViolation(f"edge {edge_id} is not on the shortest s-t path")
    dist, parent = masked_dijkstra(g, g.source, banned_edge=edge_id)
    d = dist[g.target]
    return OracleReport("edge", list(path_edges).index(edge_id) + 1, d,
                        _walk(parent, g.target) if d < inf else None)


def oracle_node(g: Graph, vertex: int, path: Optional[Sequence[int]] = None) -> OracleReport:
    if path is None:
        path = shortest_path(g)[0]
    if vertex not in path[1:-1]:
        raise ContractViolation(f"vertex {vertex} is not an internal vertex of the s-t path")
    dist, parent = masked_dijkstra(g, g.source, banned_vertex=vertex)
    d = dist[g.target]
    return OracleReport("node", list(path).index(vertex), d,
                        _walk(parent, g.target) if d < inf else None)


def path_problems(
    g: Graph,
    path: Sequence[int],
    distance: float,
    banned_edge: Optional[int] = None,
    banned_vertex: Optional[int] = None,
) -> List[str]:
    """Reasons ``path`` is not a valid replacement path of weight ``distance``.

    Between consecutive vertices the lightest edge other than ``banned_edge`` is
    charged, which is what a walk over a multigraph can achieve at best.
    """
    problems = []
    if not path or path[0] != g.source or path[-1] != g.target:
        problems.append("does not run from source to target")
    if len(set(path)) != len(path):
        problems.append("repeats a vertex")
    if banned_vertex is not None and banned_vertex in path:
        problems.append("visits the removed vertex")
    total = 0.0
    for a, b in zip(path, path[1:]):
        ws = [g.edges[k].weight for v, k in g.adjacency[a] if v == b and k != banned_edge]
        if not ws:
            problems.append(f"no usable edge between {a} and {b}")
            return problems
        total += min(ws)
    if total != distance:
        problems.append(f"weight {total} differs from reported {distance}")
    return problems


def compare_all(g: Graph, solution=None) -> ComparisonSummary:
    """Check every edge and node report of the fast algorithm against the oracle."""
    if solution is None:
        solution = solve(g, with_paths=True)
    lab = solution.labeling
    summary = ComparisonSummary()
    for rep in solution.edge_reports:
        eid = lab.path_edge_ids[rep.index - 1]
        ref = oracle_edge(g, eid, lab.path_edge_ids)
        summary.edge_checks += 1
        _compare(g, rep, ref, summary, banned_edge=eid)
    for rep in solution.node_reports:
        v = lab.path[rep.index]
        ref = oracle_node(g, v, lab.path)
        summary.node_checks += 1
        if rep.via == "forest":
            summary.forest_wins += 1
        _compare(g, rep, ref, summary, banned_vertex=v)
    return summary


def _compare(g, rep, ref, summary, banned_edge=None, banned_vertex=None):
    if rep.distance != ref.distance:
        summary.mismatches.append(Mismatch(rep.kind, rep.index, rep.distance, ref.distance, "distance"))
        return
    if rep.distance == inf:
        return
    if rep.path is None:
        summary.mismatches.append(Mismatch(rep.kind, rep.index, rep.distance, ref.distance, "no path"))
        return
    for problem in path_problems(g, rep.path, rep.distance, banned_edge, banned_vertex):
        summary.mismatches.append(Mismatch(rep.kind, rep.index, rep.distance, ref.distance, problem))
