"""File formats: edge lists for graphs, JSON for everything else.

JSON is written with a fixed key order and a trailing newline, so writing
the same object twice gives identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .burling import ConstructionCertificate, GraphStableSetPair
from .errors import DomainError, ParseError
from .frames import Frame, FrameRepresentation
from .graph import Multigraph, SimpleGraph, format_multigraph, parse_multigraph


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


# graphs


def read_multigraph(path) -> Multigraph:
    return parse_multigraph(read_text(path))


def to_simple(g: Multigraph) -> SimpleGraph:
    seen = set()
    for u, v in g.edge_list():
        if u == v:
            raise DomainError(f"loop at {u}: expected a simple graph")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DomainError(f"parallel edges between {u} and {v}: expected a simple graph")
        seen.add(key)
    return SimpleGraph(g.vertex_count, g.edge_list())


def read_simple_graph(path) -> SimpleGraph:
    return to_simple(read_multigraph(path))


def format_simple_graph(g: SimpleGraph) -> str:
    return format_multigraph(g.to_multigraph())


# representations


def rep_to_json(rep: FrameRepresentation) -> dict:
    return {
        "vertices": rep.target.vertex_count,
        "edges": [list(e) for e in rep.target.edges()],
        "frames": [{"vertex": f.vertex, "x1": f.x1, "x2": f.x2, "y1": f.y1, "y2": f.y2}
                   for f in rep.frames],
    }


def rep_from_json(d: dict) -> FrameRepresentation:
    try:
        target = SimpleGraph(int(d["vertices"]), [tuple(e) for e in d["edges"]])
        frames = tuple(Frame(f["x1"], f["x2"], f["y1"], f["y2"], vertex=f["vertex"])
                       for f in d["frames"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise ParseError(f"malformed representation: {exc}") from None
    return FrameRepresentation(frames, target)


def read_rep(path) -> FrameRepresentation:
    return rep_from_json(loads(read_text(path)))


def write_rep(path, rep: FrameRepresentation) -> None:
    write_text(path, dumps(rep_to_json(rep)))


# pairs and certificates


def read_pair(path) -> GraphStableSetPair:
    try:
        return GraphStableSetPair.from_json(loads(read_text(path)))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed pair: {exc}") from None


def write_pair(path, pair: GraphStableSetPair) -> None:
    write_text(path, dumps(pair.to_json()))


def read_cert(path) -> ConstructionCertificate:
    return ConstructionCertificate.from_json(loads(read_text(path)))


def write_cert(path, cert: ConstructionCertificate) -> None:
    write_text(path, dumps(cert.to_json()))
