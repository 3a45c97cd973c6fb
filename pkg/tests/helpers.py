"""Independent reference computations used only by the tests."""
from __future__ import annotations

from math import inf


def enumerate_min_distance(g, a, b, banned_edge=None, banned_vertex=None):
    """Minimum over all simple a-b paths, by exhaustive DFS. Tiny graphs only."""
    best = inf
    if banned_vertex in (a, b):
        return inf
    stack = [(a, 0.0, frozenset([a]))]
    while stack:
        u, d, seen = stack.pop()
        if u == b:
            best = min(best, d)
            continue
        for v, eid in g.adjacency[u]:
            if eid == banned_edge or v == banned_vertex or v in seen:
                continue
            stack.append((v, d + g.edges[eid].weight, seen | {v}))
    return best


def floyd_warshall(g, banned_edge=None, banned_vertex=None):
    n = g.n
    d = [[inf] * n for _ in range(n)]
    for v in range(n):
        if v != banned_vertex:
            d[v][v] = 0.0
    for e in g.edges:
        if e.id == banned_edge or banned_vertex in (e.u, e.v):
            continue
        if e.weight < d[e.u][e.v]:
            d[e.u][e.v] = d[e.v][e.u] = e.weight
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def in_subtree(ts, v, root):
    """True if ``root`` lies on the tree path from ``v`` up to the tree root."""
    x = v
    while x is not None:
        if x == root:
            return True
        x = ts.parent[x]
    return False


def induced_dijkstra(g, root, keep):
    """Dijkstra restricted to the vertex set ``keep``, written as a plain O(n^2) scan."""
    dist = {v: inf for v in keep}
    dist[root] = 0.0
    done = set()
    while True:
        cand = [(d, v) for v, d in dist.items() if v not in done and d < inf]
        if not cand:
            return dist
        d, u = min(cand)
        done.add(u)
        for v, eid in g.adjacency[u]:
            if v in keep and d + g.edges[eid].weight < dist[v]:
                dist[v] = d + g.edges[eid].weight
