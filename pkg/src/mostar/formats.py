"""Text and JSON serialization of graphs.

Edge-list text format: first line ``n m``, then ``m`` lines ``u v``
(0-based, whitespace separated).  Lines whose first non-blank character is
``#`` are comments; blank lines are skipped.

JSON format: object with integer field ``n`` and field ``edges`` holding an
array of 2-element integer arrays.  Emission is canonical: ``u < v`` per
edge, edges sorted, keys sorted.
"""

from __future__ import annotations

import json

from .errors import GraphError
from .graphs import Graph, from_edge_list


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header declares {m} edges, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"expected edge line 'u v', got {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, pairs)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_json(source: str | dict) -> Graph:
    obj = json.loads(source) if isinstance(source, str) else source
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphError("graph JSON must be an object with 'n' and 'edges'")
    return from_edge_list(int(obj["n"]), obj["edges"])


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def emit_graph_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True) + "\n"


def parse_graph(text: str) -> Graph:
    """Sniff JSON versus edge-list text and parse accordingly."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return parse_graph_json(stripped)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid graph JSON: {exc}") from exc
    return parse_edge_list(text)


def dump_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return emit_edge_list(g)
    if fmt == "json":
        return emit_graph_json(g)
    raise GraphError(f"unknown graph format {fmt!r}")
