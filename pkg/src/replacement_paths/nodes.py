"""Node replacement paths.

Removing an internal path vertex ``v_i`` splits the source tree into the part above it
(labels ``< i``), the subtree of ``v_{i+1}`` (labels ``> i``) and the forest of
``v_i``'s other subtrees (label ``i``). Crossing edges leaving the upper part are
already ranked by the swept RSP-DAG at node ``(i-1, i+1)``. Crossing edges
leaving the forest need distances that avoid both ``v_i`` and the lower part;
those come from one Dijkstra run on a graph where, for every forest, the upper
part is contracted into ``s``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import inf
from typing import Dict, List, Optional, Tuple

from .graph import Graph
from .rspdag import CandidateEdge, ReplacementReport, RspDag, reconstruct_edge_path
from .spt import PathLabeling, ShortestPathTree, is_tree_edge, shortest_path_tree


@dataclass(frozen=True)
class ContractedGraph:
    """Union of the per-vertex contracted graphs, over the original vertex ids.

    Edge ``k`` of this graph is either a forest-internal edge (``contracted_from[k]``
    is ``None``) or a contracted edge ``(s, v)`` standing for ``u -> v`` with
    ``u = contracted_from[k]``. ``origin[k]`` is the original edge id in both cases.
    """

    n: int
    source: int
    forest: List[Optional[int]]
    edges: List[Tuple[int, int]]
    weight: List[float]
    origin: List[int]
    contracted_from: List[Optional[int]]
    adjacency: List[List[Tuple[int, int]]]

    @property
    def vertices(self) -> List[int]:
        return [self.source] + [v for v, f in enumerate(self.forest) if f is not None]

    def contracted_edges(self) -> Dict[int, Tuple[float, int, int]]:
        """``v -> (weight, tail u, original edge id)`` for every contracted edge."""
        out = {}
        for k, u in enumerate(self.contracted_from):
            if u is not None:
                out[self.edges[k][1]] = (self.weight[k], u, self.origin[k])
        return out


def classify_forest(lab: PathLabeling) -> List[Optional[int]]:
    """Forest index ``i`` for off-path vertices labeled ``1..l-1``, else ``None``."""
    l = lab.l
    return [
        a if a is not None and 1 <= a <= l - 1 and lab.on_path_index[v] is None else None
        for v, a in enumerate(lab.label)
    ]


def build_contracted_graph(
    g: Graph,
    ts: ShortestPathTree,
    lab: PathLabeling,
    forest: Optional[List[Optional[int]]] = None,
    counters: Optional[Counter] = None,
) -> ContractedGraph:
    if forest is None:
        forest = classify_forest(lab)
    label = lab.label
    s = g.source
    internal: List[int] = []
    # v -> (d(s,u) + w(u,v), edge id, u)
    best: Dict[int, Tuple[float, int, int]] = {}
    for e in g.edges:
        fu, fv = forest[e.u], forest[e.v]
        if fu is not None and fu == fv:
            internal.append(e.id)
            continue
        for u, v, f in ((e.u, e.v, fv), (e.v, e.u, fu)):
            if f is None:
                continue
            lu = label[u]
            if lu is None or lu >= f:
                continue
            cand = (ts.dist[u] + e.weight, e.id, u)
            cur = best.get(v)
            if cur is None or cand < cur:
                best[v] = cand
    if counters is not None:
        counters["contract_scans"] += g.m

    edges: List[Tuple[int, int]] = []
    weight: List[float] = []
    origin: List[int] = []
    contracted_from: List[Optional[int]] = []
    for v in sorted(best):
        w, eid, u = best[v]
        edges.append((s, v))
        weight.append(w)
        origin.append(eid)
        contracted_from.append(u)
    for eid in internal:
        e = g.edges[eid]
        edges.append((e.u, e.v))
        weight.append(e.weight)
        origin.append(eid)
        contracted_from.append(None)

    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(g.n)]
    for k, (a, b) in enumerate(edges):
        adjacency[a].append((b, k))
        adjacency[b].append((a, k))
    return ContractedGraph(g.n, s, list(forest), edges, weight, origin, contracted_from, adjacency)


def partial_distances(cg: ContractedGraph, counters: Optional[Counter] = None) -> ShortestPathTree:
    """Distances from ``s`` inside the contracted graph.

    For a vertex ``x`` in forest ``i`` this is its distance from ``s`` once
    ``v_i`` and the subtree of ``v_{i+1}`` are deleted.
    """
    if counters is not None:
        counters["contracted_spt"] += 1
    return shortest_path_tree(cg.n, cg.adjacency, cg.weight, cg.source)


def forest_candidates(
    g: Graph,
    ts: ShortestPathTree,
    tt: ShortestPathTree,
    lab: PathLabeling,
    forest: List[Optional[int]],
    ptree: ShortestPathTree,
    counters: Optional[Counter] = None,
) -> Dict[int, CandidateEdge]:
    """Cheapest edge from forest ``i`` into the subtree of ``v_{i+1}``, per ``i``.

    Each edge belongs to at most one forest, so the scan is linear overall.
    """
    label = lab.label
    best: Dict[int, CandidateEdge] = {}
    touched = 0
    for e in g.edges:
        for x, y in ((e.u, e.v), (e.v, e.u)):
            i = forest[x]
            if i is None:
                continue
            ly = label[y]
            if ly is None or ly <= i:
                continue
            if is_tree_edge(ts, x, y, e.id):
                continue
            touched += 1
            dx, to_t = ptree.dist[x], tt.dist[y]
            if dx == inf or to_t == inf:
                continue
            cand = CandidateEdge(dx + e.weight + to_t, to_t, e.id, x, y)
            cur = best.get(i)
            if cur is None or cand < cur:
                best[i] = cand
    if counters is not None:
        counters["cpp_scan"] += touched
    return best


def node_replacements(
    g: Graph,
    ts: ShortestPathTree,
    tt: ShortestPathTree,
    lab: PathLabeling,
    dag: RspDag,
    cg: ContractedGraph,
    ptree: ShortestPathTree,
    with_paths: bool = False,
    counters: Optional[Counter] = None,
) -> List[ReplacementReport]:
    if not dag.swept:
        raise ValueError("RSP-DAG must be swept first")
    l = lab.l
    via_forest = forest_candidates(g, ts, tt, lab, cg.forest, ptree, counters)
    reports = []
    for i in range(1, l):
        direct = dag.minimum(i - 1, i + 1)
        other = via_forest.get(i)
        d1 = direct.cost if direct is not None else inf
        d2 = other.cost if other is not None else inf
        if d1 == inf and d2 == inf:
            reports.append(ReplacementReport("node", i, inf, None))
            continue
        if d1 <= d2:
            rep = ReplacementReport("node", i, d1, direct, via="direct")
        else:
            rep = ReplacementReport("node", i, d2, other, via="forest")
        if with_paths:
            rep.path = reconstruct_node_path(rep, ts, tt, cg, ptree)
        reports.append(rep)
    if counters is not None:
        counters["report_reads"] += max(l - 1, 0)
    return reports


def reconstruct_node_path(
    report: ReplacementReport,
    ts: ShortestPathTree,
    tt: ShortestPathTree,
    cg: ContractedGraph,
    ptree: ShortestPathTree,
) -> List[int]:
    swap = report.swap
    if swap is None:
        raise ValueError("no replacement path to reconstruct")
    if report.via == "direct":
        return reconstruct_edge_path(swap, ts, tt)
    # walk the contracted tree up from x; the edge leaving s is a contracted one
    tail = []
    v = swap.x
    while ptree.parent[v] != cg.source:
        if ptree.parent[v] is None:
            raise ValueError(f"vertex {swap.x} unreachable in contracted graph")
        tail.append(v)
        v = ptree.parent[v]
    tail.append(v)
    tail.reverse()
    u = cg.contracted_from[ptree.parent_edge[v]]
    return ts.path_from_root(u) + tail + tt.path_to_root(swap.y)
