"""One pass producing both edge and node replacement paths."""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import List

from .graph import Graph
from .nodes import (
    ContractedGraph,
    build_contracted_graph,
    classify_forest,
    node_replacements,
    partial_distances,
)
from .rspdag import ReplacementReport, RspDag, build_and_sweep, edge_replacements, partition_candidates
from .spt import NoPathError, PathLabeling, ShortestPathTree, compute_labels, dijkstra, extract_path

# Counters that make up the linear-plus-quadratic part of the work. Shortest
# path tree runs (source, target and contracted graph) are booked separately.
PHASE2_OPS = (
    "label_visits",
    "partition_scans",
    "sweep_nodes",
    "sweep_scans",
    "sweep_insertions",
    "contract_scans",
    "cpp_scan",
    "report_reads",
)
STAGES = ("spt_source", "spt_target", "labeling", "dag_sweep", "contracted_spt")


class InvariantViolation(RuntimeError):
    pass


@dataclass
class Solution:
    graph: Graph
    ts: ShortestPathTree
    tt: ShortestPathTree
    labeling: PathLabeling
    dag: RspDag
    contracted: ContractedGraph
    ptree: ShortestPathTree
    edge_reports: List[ReplacementReport]
    node_reports: List[ReplacementReport]
    counters: Counter = field(default_factory=Counter)
    phase2_seconds: float = 0.0

    @property
    def l(self) -> int:
        return self.labeling.l

    @property
    def reports(self) -> List[ReplacementReport]:
        return self.edge_reports + self.node_reports

    @property
    def phase2_ops(self) -> int:
        return sum(self.counters[k] for k in PHASE2_OPS)


def solve(g: Graph, with_paths: bool = False) -> Solution:
    """Edge and node replacement paths for the shortest source-target path of ``g``.

    Raises :class:`NoPathError` when the target is unreachable.
    """
    counters: Counter = Counter()
    ts = dijkstra(g, g.source)
    counters["spt_source"] += 1
    if not ts.reachable(g.target):
        raise NoPathError("target unreachable from source")
    tt = dijkstra(g, g.target)
    counters["spt_target"] += 1

    start = time.perf_counter()
    path, path_edges = extract_path(ts, g.target)
    lab = compute_labels(ts, path, path_edges, counters)
    dag = partition_candidates(g, ts, tt, lab, counters)
    build_and_sweep(dag, counters)
    edges = edge_replacements(dag, ts, tt, lab, with_paths, counters)
    forest = classify_forest(lab)
    cg = build_contracted_graph(g, ts, lab, forest, counters)
    ptree = partial_distances(cg, counters)
    nodes = node_replacements(g, ts, tt, lab, dag, cg, ptree, with_paths, counters)
    elapsed = time.perf_counter() - start

    for stage in STAGES:
        if counters[stage] != 1:
            raise InvariantViolation(f"stage {stage} ran {counters[stage]} times")
    return Solution(g, ts, tt, lab, dag, cg, ptree, edges, nodes, counters, elapsed)
