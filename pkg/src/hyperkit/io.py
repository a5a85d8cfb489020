"""Hypergraph documents and flat export formats.

A document is UTF-8 JSON::

    {"format_version": "1.0", "kind": "hypergraph",
     "vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]]}

Optional keys: ``vertex_weights`` / ``edge_weights`` (lists parallel to
``vertices`` / ``edges``), ``vertex_attrs`` (vertex id -> object) and
``edge_attrs`` (edge position -> object). ``kind: "directed"`` adds
``directed_edges``, a list of ``{"tail": [...], "head": [...]}``.
``kind: "multilayer"`` holds ``layers`` (documents without
``format_version``) and ``interlinks`` as ``[[layer, v], [layer, w]]``.
Keys the reader does not know are kept and written back on save.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, Union

from .core import DirectedHypergraph, Graph, Hypergraph, MultilayerHypergraph, edge_key
from .dynamics.trajectory import Trajectory
from .errors import HyperkitError, ParseError, SchemaError

FORMAT_VERSION = "1.0"
SUPPORTED_MAJOR = "1"

AnyHypergraph = Union[Hypergraph, DirectedHypergraph, MultilayerHypergraph]

_LAYER_KEYS = {
    "vertices",
    "edges",
    "vertex_weights",
    "edge_weights",
    "vertex_attrs",
    "edge_attrs",
    "directed_edges",
}
_TOP_KEYS = {"format_version", "kind"}


# -- documents -------------------------------------------------------------


def _layer_document(h: Hypergraph) -> Dict[str, Any]:
    vertices = h.vertices
    edges = h.edges
    doc: Dict[str, Any] = {
        "vertices": vertices,
        "edges": [list(edge_key(e)) for e in edges],
    }
    if h.vertex_weights is not None:
        doc["vertex_weights"] = [h.vertex_weights[v] for v in vertices]
    if h.edge_weights is not None:
        doc["edge_weights"] = [h.edge_weights[e] for e in edges]
    if h.vertex_attrs:
        doc["vertex_attrs"] = {str(v): h.vertex_attrs[v] for v in sorted(h.vertex_attrs)}
    if h.edge_attrs:
        pos = {e: m for m, e in enumerate(edges)}
        doc["edge_attrs"] = {
            str(pos[e]): attrs for e, attrs in sorted(h.edge_attrs.items(), key=lambda kv: pos[kv[0]])
        }
    if isinstance(h, DirectedHypergraph):
        doc["directed_edges"] = [
            {"tail": list(edge_key(t)), "head": list(edge_key(hd))} for t, hd in h.directed_edges
        ]
    doc.update(h.extra)
    return doc


def to_document(h: AnyHypergraph) -> Dict[str, Any]:
    if isinstance(h, MultilayerHypergraph):
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "multilayer",
            "layers": [_with_kind(layer) for layer in h.layers],
            "interlinks": [[list(a), list(b)] for a, b in h.interlinks],
        }
        doc.update(h.extra)
        return doc
    kind = "directed" if isinstance(h, DirectedHypergraph) else "hypergraph"
    return {"format_version": FORMAT_VERSION, "kind": kind, **_layer_document(h)}


def _with_kind(h: Hypergraph) -> Dict[str, Any]:
    kind = "directed" if isinstance(h, DirectedHypergraph) else "hypergraph"
    return {"kind": kind, **_layer_document(h)}


def _int_list(value, where: str):
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise SchemaError(f"{where} must be a list of integers")
    return value


def _layer_from_document(doc: Dict[str, Any], where: str) -> Hypergraph:
    kind = doc.get("kind", "hypergraph")
    if kind not in ("hypergraph", "directed"):
        raise SchemaError(f"{where}: unknown kind {kind!r}")
    if "vertices" not in doc or "edges" not in doc:
        raise SchemaError(f"{where}: 'vertices' and 'edges' are required")
    vertices = _int_list(doc["vertices"], f"{where}.vertices")
    if any(v < 0 for v in vertices):
        raise SchemaError(f"{where}.vertices: vertex ids must be non-negative")
    if len(set(vertices)) != len(vertices):
        raise SchemaError(f"{where}.vertices: duplicate vertex ids")
    known = set(vertices)

    h = DirectedHypergraph() if kind == "directed" else Hypergraph()
    for v in vertices:
        h.add_vertex(v)
    if not isinstance(doc["edges"], list):
        raise SchemaError(f"{where}.edges must be a list")
    for m, members in enumerate(doc["edges"]):
        members = _int_list(members, f"{where}.edges[{m}]")
        if not members:
            raise SchemaError(f"{where}.edges[{m}]: empty edge")
        unknown = sorted(set(members) - known)
        if unknown:
            raise SchemaError(f"{where}.edges[{m}]: edge references unknown vertices {unknown}")
        if h.has_edge(members):
            raise SchemaError(f"{where}.edges[{m}]: duplicate edge")
        h.add_edge(members)
    edges = h.edges

    if "vertex_weights" in doc:
        weights = doc["vertex_weights"]
        if not isinstance(weights, list) or len(weights) != len(vertices):
            raise SchemaError(f"{where}.vertex_weights must have one entry per vertex")
        h.vertex_weights = {v: float(w) for v, w in zip(vertices, weights)}
    if "edge_weights" in doc:
        weights = doc["edge_weights"]
        if not isinstance(weights, list) or len(weights) != len(edges):
            raise SchemaError(f"{where}.edge_weights must have one entry per edge")
        h.edge_weights = {e: float(w) for e, w in zip(edges, weights)}
    for key, target, lookup in (
        ("vertex_attrs", h.vertex_attrs, lambda k: int(k)),
        ("edge_attrs", h.edge_attrs, lambda k: edges[int(k)]),
    ):
        if key not in doc:
            continue
        if not isinstance(doc[key], dict):
            raise SchemaError(f"{where}.{key} must be an object")
        for k, attrs in doc[key].items():
            try:
                ref = lookup(k)
            except (ValueError, IndexError):
                raise SchemaError(f"{where}.{key}: {k!r} names no existing element") from None
            if key == "vertex_attrs" and ref not in known:
                raise SchemaError(f"{where}.{key}: {k!r} names no existing vertex")
            target[ref] = attrs

    if kind == "directed":
        pairs = doc.get("directed_edges", [])
        if not isinstance(pairs, list):
            raise SchemaError(f"{where}.directed_edges must be a list")
        for d, pair in enumerate(pairs):
            if not isinstance(pair, dict) or "tail" not in pair or "head" not in pair:
                raise SchemaError(f"{where}.directed_edges[{d}] needs 'tail' and 'head'")
            tail = _int_list(pair["tail"], f"{where}.directed_edges[{d}].tail")
            head = _int_list(pair["head"], f"{where}.directed_edges[{d}].head")
            if not tail or not head:
                raise SchemaError(f"{where}.directed_edges[{d}]: tail and head must be non-empty")
            if not set(tail) | set(head) <= known:
                raise SchemaError(f"{where}.directed_edges[{d}] references unknown vertices")
            h.add_directed_edge(tail, head)
    elif "directed_edges" in doc:
        raise SchemaError(f"{where}: directed_edges requires kind 'directed'")

    h.extra = {k: v for k, v in doc.items() if k not in _LAYER_KEYS | _TOP_KEYS}
    return h


def from_document(doc: Any) -> AnyHypergraph:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    version = doc.get("format_version")
    if not isinstance(version, str):
        raise SchemaError("'format_version' is required")
    if version.split(".")[0] != SUPPORTED_MAJOR:
        raise SchemaError(f"unsupported format_version {version!r}")
    kind = doc.get("kind", "hypergraph")
    if kind != "multilayer":
        return _layer_from_document(doc, "document")

    layers = doc.get("layers")
    if not isinstance(layers, list):
        raise SchemaError("multilayer document needs a 'layers' list")
    ml = MultilayerHypergraph()
    for i, layer in enumerate(layers):
        if not isinstance(layer, dict):
            raise SchemaError(f"layers[{i}] must be an object")
        ml.add_layer(_layer_from_document(layer, f"layers[{i}]"))
    links = doc.get("interlinks", [])
    if not isinstance(links, list):
        raise SchemaError("'interlinks' must be a list")
    for i, link in enumerate(links):
        try:
            (la, va), (lb, vb) = link
            ml.add_interlink((la, va), (lb, vb))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"interlinks[{i}]: {exc}") from None
        except HyperkitError as exc:
            raise SchemaError(f"interlinks[{i}]: {exc}") from None
    ml.extra = {k: v for k, v in doc.items() if k not in {"layers", "interlinks"} | _TOP_KEYS}
    return ml


def dumps(h: AnyHypergraph) -> str:
    return json.dumps(to_document(h), indent=2) + "\n"


def loads(text: str) -> AnyHypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_document(doc)


def save(h: AnyHypergraph, path) -> None:
    Path(path).write_text(dumps(h), encoding="utf-8")


def load(path) -> AnyHypergraph:
    return loads(Path(path).read_text(encoding="utf-8"))


# -- flat exports ------------------------------------------------------------


def export_bipartite(h: Hypergraph, path) -> int:
    """Write ``vertex<TAB>e<m>`` per incidence; returns the line count."""
    lines = [f"{v}\te{m}" for m, e in enumerate(h.edges) for v in edge_key(e)]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return len(lines)


def export_graph(g: Graph, path) -> int:
    """Write ``u<TAB>v`` per graph edge, sorted; returns the line count."""
    lines = [f"{u}\t{v}" for u, v in sorted(g.edges)]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return len(lines)


def _write_csv(path, header: Iterable, rows: Iterable[Iterable]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(header)
        writer.writerows(rows)


def export_incidence_csv(h: Hypergraph, path) -> None:
    """Header of edge ids ``e0..``; one 0/1 row per vertex in ascending order."""
    inc = h.incidence_matrix()
    header = [f"e{m}" for m in range(len(inc.col_index))]
    _write_csv(path, header, inc.entries.tolist())


def read_incidence_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], [[int(x) for x in row] for row in rows[1:]]


def export_trajectory_csv(t: Trajectory, path) -> None:
    _write_csv(path, t.columns, ([_cell(x) for x in row] for row in t.rows))


def _cell(x):
    if isinstance(x, float):
        return repr(x)
    return x
