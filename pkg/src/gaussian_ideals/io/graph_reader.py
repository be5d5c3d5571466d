from __future__ import annotations

import json
from pathlib import Path

from gaussian_ideals.combinat.monomial import GRAPH_SHAPES, Graph, graph_from_shape
from gaussian_ideals.errors import ParseError


def _graph_from_json(data: object, source: Path) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ParseError(f"{source}: JSON graph must include 'vertices' and 'edges'")
    try:
        return Graph.from_edges(int(data["vertices"]), data["edges"])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{source}: {exc}") from exc


def _graph_from_edge_list(text: str, source: Path) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"{source}:{lineno}: expected two vertex indices, got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise ParseError(f"{source}: edge list is empty")
    vertex_count = 1 + max(max(u, v) for u, v in edges)
    try:
        return Graph.from_edges(vertex_count, edges)
    except ValueError as exc:
        raise ParseError(f"{source}: {exc}") from exc


def read_graph(path: Path) -> Graph:
    """JSON ``{"vertices": n, "edges": [[i, j], ...]}`` or one ``i j`` edge per line."""
    if not path.exists():
        raise FileNotFoundError(f"Graph file not found: {path}")

    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from exc
        return _graph_from_json(data, path)
    return _graph_from_edge_list(text, path)


def resolve_graph(spec: str) -> Graph:
    """A built-in shape like ``cycle:4`` or a path to a graph file."""
    name = spec.partition(":")[0].strip().lower()
    if name in GRAPH_SHAPES and not Path(spec).exists():
        return graph_from_shape(spec)
    return read_graph(Path(spec))
