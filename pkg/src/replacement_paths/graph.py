"""Undirected weighted multigraph with a designated source and target.

Two text formats are understood:

* ``dimacs``: ``c`` comment lines, a ``p sp <n> <m>`` header and ``a <u> <v> <w>``
  edge lines with 1-based vertex ids. Every ``a`` line is one undirected edge.
* ``edge-list``: one ``<u> <v> <w>`` triple per line, 0-based ids; ``#`` starts
  a comment. The vertex count is one more than the largest id seen.

Source and target are never read from the file; they are passed in using the
same id base as the file.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

FORMATS = ("dimacs", "edge-list")
ID_BASE = {"dimacs": 1, "edge-list": 0}


class GraphFormatError(ValueError):
    """Raised for malformed or invalid graph input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class Edge(NamedTuple):
    u: int
    v: int
    weight: float
    id: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class Graph:
    """Immutable undirected multigraph on vertices ``0..n-1``.

    ``adjacency[u]`` lists ``(neighbor, edge id)`` pairs; each edge appears once
    in ``edges`` and once in the adjacency list of each endpoint.
    """

    n: int
    edges: Tuple[Edge, ...]
    source: int
    target: int
    adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        for name, x in (("source", self.source), ("target", self.target)):
            if not 0 <= x < self.n:
                raise GraphFormatError(f"{name} {x} out of range 0..{self.n - 1}")
        if self.source == self.target:
            raise GraphFormatError("source and target must differ")
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for k, e in enumerate(self.edges):
            if e.id != k:
                raise GraphFormatError(f"edge ids must be 0..m-1, got {e.id} at position {k}")
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise GraphFormatError(f"edge {k} has an endpoint out of range")
            if e.u == e.v:
                raise GraphFormatError(f"edge {k} is a self-loop")
            if not (e.weight > 0 and math.isfinite(e.weight)):
                raise GraphFormatError(f"edge {k} has weight <= 0 or non-finite")
            adj[e.u].append((e.v, k))
            adj[e.v].append((e.u, k))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[float]],
        source: int,
        target: int,
    ) -> "Graph":
        """Build from ``(u, v, w)`` triples; edge ids follow input order."""
        es = tuple(Edge(int(u), int(v), float(w), k) for k, (u, v, w) in enumerate(edges))
        return cls(n, es, source, target)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weights(self) -> List[float]:
        return [e.weight for e in self.edges]

    def with_terminals(self, source: int, target: int) -> "Graph":
        return Graph(self.n, self.edges, source, target)


def _parse_weight(token: str, lineno: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise GraphFormatError(f"bad weight {token!r}", lineno) from None
    if not math.isfinite(w):
        raise GraphFormatError("non-finite weight", lineno)
    if w <= 0:
        raise GraphFormatError("weight <= 0", lineno)
    return w


def _parse_vertex(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"bad vertex id {token!r}", lineno) from None


def parse_graph(
    text: str,
    fmt: str = "dimacs",
    source: Optional[int] = None,
    target: Optional[int] = None,
) -> Tuple[Graph, int]:
    """Parse ``text`` and return ``(graph, dropped_self_loops)``.

    ``source`` and ``target`` use the input's id base (1-based for DIMACS).
    Parallel edges are kept; self-loops are skipped and counted.
    """
    if fmt not in ID_BASE:
        raise GraphFormatError(f"unknown format {fmt!r}")
    if source is None or target is None:
        raise GraphFormatError("source and target must be given")
    base = ID_BASE[fmt]
    n: Optional[int] = None
    triples: List[Tuple[int, int, float]] = []
    dropped = 0
    max_id = -1

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if fmt == "dimacs":
            tag = parts[0]
            if tag == "c":
                continue
            if tag == "p":
                if n is not None:
                    raise GraphFormatError("duplicate header", lineno)
                if len(parts) != 4 or parts[1] != "sp":
                    raise GraphFormatError("malformed header, expected 'p sp <n> <m>'", lineno)
                try:
                    n = int(parts[2])
                    int(parts[3])
                except ValueError:
                    raise GraphFormatError("malformed header counts", lineno) from None
                if n < 1:
                    raise GraphFormatError("vertex count must be positive", lineno)
                continue
            if tag != "a" or len(parts) != 4:
                raise GraphFormatError("malformed line", lineno)
            if n is None:
                raise GraphFormatError("edge line before 'p sp' header", lineno)
            fields = parts[1:]
        else:
            if line.startswith("#"):
                continue
            if len(parts) != 3:
                raise GraphFormatError("malformed line, expected '<u> <v> <w>'", lineno)
            fields = parts

        u = _parse_vertex(fields[0], lineno) - base
        v = _parse_vertex(fields[1], lineno) - base
        w = _parse_weight(fields[2], lineno)
        for x in (u, v):
            if x < 0 or (n is not None and x >= n):
                raise GraphFormatError(f"vertex id {x + base} out of range", lineno)
        if u == v:
            dropped += 1
            continue
        max_id = max(max_id, u, v)
        triples.append((u, v, w))

    if n is None:
        if fmt == "dimacs":
            raise GraphFormatError("missing 'p sp' header")
        n = max(max_id, source - base, target - base) + 1
    s, t = source - base, target - base
    for name, x in (("source", s), ("target", t)):
        if not 0 <= x < n:
            raise GraphFormatError(f"{name} {x + base} out of range")
    return Graph.from_edges(n, triples, s, t), dropped


def serialize_graph(g: Graph, fmt: str = "dimacs") -> str:
    """Inverse of :func:`parse_graph` up to comments and weight formatting."""
    base = ID_BASE[fmt]
    lines = []
    if fmt == "dimacs":
        lines.append(f"p sp {g.n} {g.m}")
        prefix = "a "
    else:
        prefix = ""
    for e in g.edges:
        lines.append(f"{prefix}{e.u + base} {e.v + base} {e.weight!r}")
    return "\n".join(lines) + "\n"


def validate_reachability(g: Graph) -> bool:
    """True iff the target is reachable from the source."""
    seen = [False] * g.n
    seen[g.source] = True
    queue = deque([g.source])
    while queue:
        u = queue.popleft()
        if u == g.target:
            return True
        for v, _ in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return False
