"""Edge and node replacement shortest paths in O(T_SPT + m + l^2)."""
from .graph import Graph, GraphFormatError, parse_graph, serialize_graph, validate_reachability
from .oracle import compare_all, oracle_edge, oracle_node
from .pipeline import InvariantViolation, Solution, solve
from .rspdag import CandidateEdge, ReplacementReport, RspDag
from .spt import NoPathError, ShortestPathTree, dijkstra

__all__ = [
    "CandidateEdge",
    "Graph",
    "GraphFormatError",
    "InvariantViolation",
    "NoPathError",
    "ReplacementReport",
    "RspDag",
    "ShortestPathTree",
    "Solution",
    "compare_all",
    "dijkstra",
    "oracle_edge",
    "oracle_node",
    "parse_graph",
    "serialize_graph",
    "solve",
    "validate_reachability",
]
