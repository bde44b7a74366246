"""Reading and writing the JSON graph format.

Keys: ``vertex_count``, ``edges`` (``[u, v]`` pairs, edge id = index),
``rotation`` (dart ids per vertex; edge ``i`` owns darts ``2i`` at its lower
endpoint and ``2i+1`` at the other), ``signs`` (+1/-1 per edge) and
``surface`` (``{"orientable": bool, "genus": int}``). No other keys.
"""

from __future__ import annotations

import json
from pathlib import Path

from .maps import EmbeddedGraph, MapError, SurfaceClass, build_map

GRAPH_KEYS = ("vertex_count", "edges", "rotation", "signs", "surface")
SURFACE_KEYS = ("orientable", "genus")


class GraphFormatError(MapError):
    pass


def graph_to_json(G: EmbeddedGraph) -> dict:
    return {
        "vertex_count": G.vertex_count,
        "edges": [list(e) for e in G.edges],
        "rotation": [list(r) for r in G.rotation],
        "signs": list(G.signs),
        "surface": {"orientable": G.surface.orientable, "genus": G.surface.genus},
    }


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _int_list(value, key: str) -> list[int]:
    if not isinstance(value, list) or not all(_is_int(v) for v in value):
        raise GraphFormatError(f"key '{key}' must be an array of integers")
    return value


def graph_from_json(data) -> EmbeddedGraph:
    if not isinstance(data, dict):
        raise GraphFormatError("graph must be a JSON object")
    extra = sorted(set(data) - set(GRAPH_KEYS))
    if extra:
        raise GraphFormatError(f"unexpected key '{extra[0]}'")
    for key in GRAPH_KEYS:
        if key not in data:
            raise GraphFormatError(f"missing key '{key}'")
    n = data["vertex_count"]
    if not _is_int(n):
        raise GraphFormatError("key 'vertex_count' must be an integer")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError("key 'edges' must be an array")
    for i, e in enumerate(edges):
        _int_list(e, f"edges[{i}]")
        if len(e) != 2:
            raise GraphFormatError(f"key 'edges[{i}]' must have two endpoints")
    rotation = data["rotation"]
    if not isinstance(rotation, list):
        raise GraphFormatError("key 'rotation' must be an array")
    for i, r in enumerate(rotation):
        _int_list(r, f"rotation[{i}]")
    signs = _int_list(data["signs"], "signs")
    surf = data["surface"]
    if not isinstance(surf, dict):
        raise GraphFormatError("key 'surface' must be an object")
    extra = sorted(set(surf) - set(SURFACE_KEYS))
    if extra:
        raise GraphFormatError(f"unexpected key 'surface.{extra[0]}'")
    for key in SURFACE_KEYS:
        if key not in surf:
            raise GraphFormatError(f"missing key 'surface.{key}'")
    if not isinstance(surf["orientable"], bool):
        raise GraphFormatError("key 'surface.orientable' must be a boolean")
    if not _is_int(surf["genus"]):
        raise GraphFormatError("key 'surface.genus' must be an integer")
    surface = SurfaceClass(surf["orientable"], surf["genus"])
    return build_map(n, edges, rotation, signs, surface)


def dumps(G: EmbeddedGraph) -> str:
    return json.dumps(graph_to_json(G))


def loads(text: str) -> EmbeddedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from exc
    return graph_from_json(data)


def read_graph(path) -> EmbeddedGraph:
    return loads(Path(path).read_text())


def write_graph(G: EmbeddedGraph, path) -> None:
    Path(path).write_text(dumps(G) + "\n")
