"""Shortest path trees, the source-target path and the vertex labeling."""
from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from math import inf
from typing import List, Optional, Sequence, Tuple

from .graph import Graph


class NoPathError(ValueError):
    """The requested vertex is not reachable from the tree root."""


@dataclass(frozen=True)
class ShortestPathTree:
    root: int
    dist: List[float]
    parent: List[Optional[int]]
    parent_edge: List[Optional[int]]
    children: List[List[int]]

    def reachable(self, v: int) -> bool:
        return self.dist[v] < inf

    def path_from_root(self, v: int) -> List[int]:
        """Vertices on the tree path ``root -> v``."""
        out = self.path_to_root(v)
        out.reverse()
        return out

    def path_to_root(self, v: int) -> List[int]:
        """Vertices on the tree path ``v -> root``."""
        if not self.reachable(v):
            raise NoPathError(f"vertex {v} unreachable from {self.root}")
        out = [v]
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out


@dataclass(frozen=True)
class PathLabeling:
    path: List[int]
    path_edge_ids: List[int]
    label: List[Optional[int]]
    on_path_index: List[Optional[int]]

    @property
    def l(self) -> int:
        return len(self.path_edge_ids)


def shortest_path_tree(
    n: int,
    adjacency: Sequence[Sequence[Tuple[int, int]]],
    weight: Sequence[float],
    root: int,
) -> ShortestPathTree:
    """Binary-heap Dijkstra over ``adjacency[u] = [(v, edge id), ...]``.

    Equal tentative distances settle the smaller vertex id first; on an equal
    relaxation the smaller edge id wins the parent slot.
    """
    dist = [inf] * n
    parent: List[Optional[int]] = [None] * n
    parent_edge: List[Optional[int]] = [None] * n
    done = [False] * n
    dist[root] = 0.0
    heap = [(0.0, root)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, eid in adjacency[u]:
            if done[v]:
                continue
            nd = d + weight[eid]
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                parent_edge[v] = eid
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v] and eid < parent_edge[v]:
                parent[v] = u
                parent_edge[v] = eid

    children: List[List[int]] = [[] for _ in range(n)]
    for v in range(n):
        p = parent[v]
        if p is not None:
            children[p].append(v)
    return ShortestPathTree(root, dist, parent, parent_edge, children)


def dijkstra(g: Graph, root: int) -> ShortestPathTree:
    return shortest_path_tree(g.n, g.adjacency, g.weights, root)


def extract_path(ts: ShortestPathTree, t: int) -> Tuple[List[int], List[int]]:
    """Return ``(vertices, edge ids)`` of the tree path from the root to ``t``."""
    path = ts.path_from_root(t)
    return path, [ts.parent_edge[v] for v in path[1:]]


def compute_labels(
    ts: ShortestPathTree,
    path: Sequence[int],
    path_edge_ids: Sequence[int],
    counters: Optional[Counter] = None,
) -> PathLabeling:
    """Label every vertex of ``ts`` by the last path vertex among its ancestors.

    Pre-order walk from the root starting at label 0; the child that continues
    the path is visited last with the label incremented. Unreachable vertices
    keep ``None``.
    """
    n = len(ts.dist)
    on_path: List[Optional[int]] = [None] * n
    for i, v in enumerate(path):
        on_path[v] = i
    label: List[Optional[int]] = [None] * n
    stack = [(ts.root, 0)]
    visits = 0
    while stack:
        u, lab = stack.pop()
        label[u] = lab
        visits += 1
        i = on_path[u]
        nxt = path[i + 1] if i is not None and i + 1 < len(path) else None
        if nxt is not None:
            stack.append((nxt, lab + 1))
        for c in reversed(ts.children[u]):
            if c != nxt:
                stack.append((c, lab))
    if counters is not None:
        counters["labeling"] += 1
        counters["label_visits"] += visits
    return PathLabeling(list(path), list(path_edge_ids), label, on_path)


def is_tree_edge(ts: ShortestPathTree, u: int, v: int, eid: int) -> bool:
    return ts.parent_edge[v] == eid or ts.parent_edge[u] == eid
