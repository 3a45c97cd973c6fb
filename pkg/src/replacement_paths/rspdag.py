"""Edge replacement paths through the triangular DAG of label pairs.

Every non-tree edge whose endpoints carry different labels ``a < b`` crosses
the cut of each path edge ``e_i`` with ``a < i <= b``. Grouping candidates by
``(a, b)`` and pushing the cheapest one of each group to ``(a, b-1)`` and
``(a+1, b)`` leaves, at node ``(i-1, i)``, the cheapest crossing edge of ``e_i``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import inf
from typing import List, NamedTuple, Optional

from .graph import Graph
from .spt import PathLabeling, ShortestPathTree, is_tree_edge


class CandidateEdge(NamedTuple):
    """A crossing edge oriented from the source side ``x`` to the target side ``y``.

    Field order makes tuple comparison the selection order: cost first, then the
    remaining distance ``d(y, t)``, then edge id. Preferring the smaller
    ``d(y, t)`` among equal costs keeps the tail of the reported path on the
    target side of the cut.
    """

    cost: float
    to_target: float
    edge_id: int
    x: int
    y: int


@dataclass
class ReplacementReport:
    kind: str  # "edge" or "node"
    index: int
    distance: float
    swap: Optional[CandidateEdge]
    path: Optional[List[int]] = None
    # node reports only: "direct" when the swap edge starts above v_i, "forest" when it starts in a subtree hanging off v_i
    via: Optional[str] = None

    @property
    def reachable(self) -> bool:
        return self.distance < inf


def _node_index(l: int, i: int, j: int) -> int:
    # row i holds j = i+1..l
    return i * l - i * (i - 1) // 2 + (j - i - 1)


@dataclass
class RspDag:
    """Triangular array of candidate sets ``E_(i,j)``, ``0 <= i < j <= l``."""

    l: int
    sets: List[List[CandidateEdge]] = field(repr=False)
    node_min: List[Optional[CandidateEdge]] = field(repr=False)
    swept: bool = False

    @classmethod
    def empty(cls, l: int) -> "RspDag":
        size = l * (l + 1) // 2
        return cls(l, [[] for _ in range(size)], [None] * size)

    @property
    def node_count(self) -> int:
        return len(self.sets)

    @property
    def edge_count(self) -> int:
        return 2 * (self.node_count - self.l)

    def index(self, i: int, j: int) -> int:
        if not 0 <= i < j <= self.l:
            raise IndexError(f"no DAG node ({i}, {j}) for l={self.l}")
        return _node_index(self.l, i, j)

    def candidates(self, i: int, j: int) -> List[CandidateEdge]:
        return self.sets[self.index(i, j)]

    def minimum(self, i: int, j: int) -> Optional[CandidateEdge]:
        return self.node_min[self.index(i, j)]

    def children(self, i: int, j: int) -> List[tuple]:
        if j - i > 1:
            return [(i, j - 1), (i + 1, j)]
        return []


def partition_candidates(
    g: Graph,
    ts: ShortestPathTree,
    tt: ShortestPathTree,
    lab: PathLabeling,
    counters: Optional[Counter] = None,
) -> RspDag:
    dag = RspDag.empty(lab.l)
    label = lab.label
    placed = 0
    for e in g.edges:
        a, b = label[e.u], label[e.v]
        if a is None or b is None or a == b:
            continue
        if is_tree_edge(ts, e.u, e.v, e.id):
            continue
        x, y = (e.u, e.v) if a < b else (e.v, e.u)
        to_t = tt.dist[y]
        if to_t == inf:
            continue
        cand = CandidateEdge(ts.dist[x] + e.weight + to_t, to_t, e.id, x, y)
        dag.sets[_node_index(dag.l, label[x], label[y])].append(cand)
        placed += 1
    if counters is not None:
        counters["partition_scans"] += g.m
        counters["candidates"] += placed
    return dag


def build_and_sweep(dag: RspDag, counters: Optional[Counter] = None) -> RspDag:
    """Propagate per-node minima from ``(0, l)`` towards the sinks ``(i, i+1)``.

    Nodes are visited by decreasing span ``j - i``, which is the BFS level order
    of the DAG. Pushed minima are appended to the children's sets.
    """
    l = dag.l
    sets, node_min = dag.sets, dag.node_min
    scans = insertions = nodes = 0
    for span in range(l, 0, -1):
        for i in range(0, l - span + 1):
            j = i + span
            k = _node_index(l, i, j)
            bucket = sets[k]
            nodes += 1
            scans += len(bucket)
            best = min(bucket) if bucket else None
            node_min[k] = best
            if best is not None and span > 1:
                sets[_node_index(l, i, j - 1)].append(best)
                sets[_node_index(l, i + 1, j)].append(best)
                insertions += 2
    dag.swept = True
    if counters is not None:
        counters["dag_sweep"] += 1
        counters["sweep_nodes"] += nodes
        counters["sweep_scans"] += scans
        counters["sweep_insertions"] += insertions
    return dag


def reconstruct_edge_path(
    swap: CandidateEdge, ts: ShortestPathTree, tt: ShortestPathTree
) -> List[int]:
    """``s ~> x`` along ``ts``, the swap edge, then ``y ~> t`` along ``tt``."""
    return ts.path_from_root(swap.x) + tt.path_to_root(swap.y)


def edge_replacements(
    dag: RspDag,
    ts: ShortestPathTree,
    tt: ShortestPathTree,
    lab: PathLabeling,
    with_paths: bool = False,
    counters: Optional[Counter] = None,
) -> List[ReplacementReport]:
    if not dag.swept:
        raise ValueError("RSP-DAG must be swept first")
    reports = []
    for i in range(1, lab.l + 1):
        best = dag.minimum(i - 1, i)
        if best is None:
            reports.append(ReplacementReport("edge", i, inf, None))
            continue
        path = reconstruct_edge_path(best, ts, tt) if with_paths else None
        reports.append(ReplacementReport("edge", i, best.cost, best, path))
    if counters is not None:
        counters["report_reads"] += lab.l
    return reports
