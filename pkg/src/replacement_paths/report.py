"""TSV and JSON rendering of replacement reports."""
from __future__ import annotations

import json
from math import inf
from typing import Iterable, List

from .graph import Graph
from .rspdag import ReplacementReport

TSV_COLUMNS = ("kind", "index", "distance", "swap_u", "swap_v", "swap_w", "path")

JSON_SCHEMA = {
    "type": "object",
    "required": ["elements"],
    "additionalProperties": False,
    "properties": {
        "elements": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "index", "distance", "swap", "path"],
                "additionalProperties": False,
                "properties": {
                    "kind": {"enum": ["edge", "node"]},
                    "index": {"type": "integer", "minimum": 1},
                    "distance": {"type": ["number", "null"]},
                    "swap": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "required": ["u", "v", "weight"],
                                "additionalProperties": False,
                                "properties": {
                                    "u": {"type": "integer"},
                                    "v": {"type": "integer"},
                                    "weight": {"type": "number"},
                                },
                            },
                        ]
                    },
                    "path": {
                        "oneOf": [
                            {"type": "null"},
                            {"type": "array", "items": {"type": "integer"}},
                        ]
                    },
                },
            },
        }
    },
}


def format_number(x: float) -> str:
    if x == inf:
        return "INF"
    if float(x).is_integer():
        return str(int(x))
    return f"{x:.9g}"


def _json_number(x: float):
    if x == inf:
        return None
    if float(x).is_integer():
        return int(x)
    return float(f"{x:.9g}")


def to_elements(g: Graph, reports: Iterable[ReplacementReport], base: int = 1) -> List[dict]:
    out = []
    for r in reports:
        swap = None
        if r.swap is not None:
            swap = {
                "u": r.swap.x + base,
                "v": r.swap.y + base,
                "weight": _json_number(g.edges[r.swap.edge_id].weight),
            }
        out.append(
            {
                "kind": r.kind,
                "index": r.index,
                "distance": _json_number(r.distance),
                "swap": swap,
                "path": [v + base for v in r.path] if r.path is not None else None,
            }
        )
    return out


def render_json(g: Graph, reports: Iterable[ReplacementReport], base: int = 1) -> str:
    return json.dumps({"elements": to_elements(g, reports, base)}, indent=2) + "\n"


def render_tsv(g: Graph, reports: Iterable[ReplacementReport], base: int = 1) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for el in to_elements(g, reports, base):
        swap = el["swap"]
        row = [
            el["kind"],
            str(el["index"]),
            "INF" if el["distance"] is None else format_number(el["distance"]),
            "" if swap is None else str(swap["u"]),
            "" if swap is None else str(swap["v"]),
            "" if swap is None else format_number(swap["weight"]),
            "" if el["path"] is None else ";".join(map(str, el["path"])),
        ]
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
