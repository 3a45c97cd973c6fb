"""Seeded random graphs for property checks and benchmarks."""
from __future__ import annotations

import random
from collections import deque
from typing import Iterator, Optional, Tuple

from .graph import Graph


def random_connected_graph(
    rng: random.Random,
    n: int,
    m: int,
    max_weight: int = 100,
    source: Optional[int] = None,
    target: Optional[int] = None,
) -> Graph:
    """Simple connected graph: a random spanning tree plus ``m - n + 1`` extra pairs."""
    if n < 2:
        raise ValueError("need at least two vertices")
    top = n * (n - 1) // 2
    if not n - 1 <= m <= top:
        raise ValueError(f"m={m} outside [{n - 1}, {top}]")
    order = list(range(n))
    rng.shuffle(order)
    pairs = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        pairs.add((min(a, b), max(a, b)))
    extra = m - (n - 1)
    if extra > top // 2:
        rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in pairs]
        pairs.update(rng.sample(rest, extra))
    else:
        while len(pairs) < m:
            a, b = rng.sample(range(n), 2)
            pairs.add((min(a, b), max(a, b)))
    edges = [(a, b, rng.randint(1, max_weight)) for a, b in sorted(pairs)]
    rng.shuffle(edges)
    if source is None or target is None:
        source, target = rng.sample(range(n), 2)
    return Graph.from_edges(n, edges, source, target)


def farthest_by_hops(g: Graph, root: int) -> int:
    """Vertex with the largest BFS depth from ``root``; smallest id on ties."""
    depth = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if depth[v] < 0:
                depth[v] = depth[u] + 1
                queue.append(v)
    return max(range(g.n), key=lambda v: (depth[v], -v))


def corpus(
    count: int,
    seed: int,
    n_range: Tuple[int, int] = (5, 60),
    max_weight: int = 100,
    sparse_bias: float = 2.0,
    far_target: bool = True,
) -> Iterator[Graph]:
    """``count`` random connected graphs.

    The edge count is drawn from the full range ``[n-1, n(n-1)/2]`` but skewed
    towards sparse graphs (``u ** sparse_bias``). The source is random; with
    ``far_target`` the target is the vertex farthest from it in hops, which
    gives longer paths and more work for the forest-side candidates.
    """
    rng = random.Random(seed)
    lo_n, hi_n = n_range
    if lo_n < 2 or hi_n < lo_n:
        raise ValueError(f"bad vertex range {n_range}")
    for _ in range(count):
        n = rng.randint(lo_n, hi_n)
        lo, hi = n - 1, n * (n - 1) // 2
        m = lo + int((hi - lo) * rng.random() ** sparse_bias)
        g = random_connected_graph(rng, n, m, max_weight)
        if far_target:
            t = farthest_by_hops(g, g.source)
            if t != g.source:
                g = g.with_terminals(g.source, t)
        yield g


def path_with_chords(k: int, seed: int = 0) -> Graph:
    """Backbone path on ``2**k`` vertices with express chords and random detours.

    The backbone has weight 2 per edge. Express chords skip ``q = 2**ceil(k/2)``
    backbone vertices for weight ``2q - 1``, so the shortest path from vertex 0
    to the last vertex takes about ``2 * 2**(k/2)`` edges. Every vertex also
    gets one random detour chord that is never shorter than the backbone.
    """
    rng = random.Random(seed * 1000003 + k)
    n = 2 ** k
    q = 2 ** ((k + 1) // 2)
    edges = [(v, v + 1, 2) for v in range(n - 1)]
    for a in range(0, n - q, q):
        edges.append((a, a + q, 2 * q - 1))
    for u in range(n):
        v = min(n - 1, u + rng.randint(2, 3 * q))
        if v - u < 2:
            continue
        edges.append((u, v, 2 * (v - u) + rng.randint(1, q)))
    return Graph.from_edges(n, edges, 0, n - 1)
