"""Frame representations with exact integer geometry.

A frame is the boundary of an axis-parallel box ``[x1, x2] x [y1, y2]``.
The only intersection allowed between two frames ``A`` and ``B`` is the
canonical one, where ``A``'s right side pierces ``B``::

    A.x1 < B.x1 < A.x2 < B.x2   and   A.y1 < B.y1 < B.y2 < A.y2

Builders keep coordinates rank-compressed (each axis uses ``0..2n-1``) and
make room for new frames by spreading the ranks apart before inserting.
"""

from __future__ import annotations

import html
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, NotApplicable, VertexRangeError
from .graph import (
    Multigraph,
    SimpleGraph,
    chandelier_pivots,
    components,
    induced_cycles,
    is_tree,
    subdivide,
)

DISJOINT = "Disjoint"
A_INSIDE_B = "AInsideB"
B_INSIDE_A = "BInsideA"
INTERSECTING = "Intersecting"


@dataclass(frozen=True)
class Frame:
    x1: int
    x2: int
    y1: int
    y2: int
    vertex: int = 0

    def __post_init__(self):
        for name in ("x1", "x2", "y1", "y2", "vertex"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise DomainError(f"frame coordinate {name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if not (self.x1 < self.x2 and self.y1 < self.y2):
            raise DomainError(f"degenerate frame {self.coords()} for vertex {self.vertex}")

    def coords(self) -> tuple[int, int, int, int]:
        return (self.x1, self.x2, self.y1, self.y2)

    def box_inside(self, other: "Frame") -> bool:
        """Closed box of ``self`` lies in the closed box of ``other``."""
        return (other.x1 <= self.x1 and self.x2 <= other.x2
                and other.y1 <= self.y1 and self.y2 <= other.y2)


@dataclass(frozen=True)
class FrameRepresentation:
    frames: tuple[Frame, ...]
    target: SimpleGraph

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(self.frames))

    def frame_of(self, v: int) -> Frame:
        for f in self.frames:
            if f.vertex == v:
                return f
        raise VertexRangeError(f"no frame for vertex {v}")

    def by_vertex(self) -> dict[int, Frame]:
        return {f.vertex: f for f in self.frames}

    def array(self) -> np.ndarray:
        return np.array([f.coords() for f in self.frames], dtype=np.int64).reshape(-1, 4)


@dataclass(frozen=True)
class Violation:
    kind: str  # general-position | clause-1 .. clause-4 | graph-mismatch
    frames: tuple[int, ...]
    detail: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "frames": list(self.frames), "detail": self.detail}


# ---------------------------------------------------------------------------
# pairwise geometry


def _columns(frames: Sequence[Frame]):
    a = np.array([f.coords() for f in frames], dtype=np.int64).reshape(-1, 4)
    return a[:, 0], a[:, 1], a[:, 2], a[:, 3]


def _general_position_ties(frames: Sequence[Frame]) -> list[tuple[str, int, tuple[int, ...]]]:
    out = []
    for axis, cols in (("x", (0, 1)), ("y", (2, 3))):
        seen: dict[int, list[int]] = {}
        for f in frames:
            c = f.coords()
            for k in cols:
                seen.setdefault(c[k], []).append(f.vertex)
        for value, owners in sorted(seen.items()):
            if len(owners) > 1:
                out.append((axis, value, tuple(sorted(set(owners)))))
    return out


def _in_general_position(frames: Sequence[Frame]) -> bool:
    x1, x2, y1, y2 = _columns(frames)
    xs = np.concatenate([x1, x2])
    ys = np.concatenate([y1, y2])
    return np.unique(xs).size == xs.size and np.unique(ys).size == ys.size


def _side_hits(frames: Sequence[Frame]):
    """Boolean (n, n) matrices describing which sides meet which frames.

    ``left[i, j]``: left side of i meets frame j.  ``right_top[i, j]`` and
    ``right_bottom[i, j]``: right side of i meets the top / bottom of j.
    ``right_any[i, j]``: right side of i meets frame j at all.  Segments are
    closed, so ties are counted as contact.
    """
    x1, x2, y1, y2 = _columns(frames)
    X1, X2, Y1, Y2 = (c[:, None] for c in (x1, x2, y1, y2))
    x1j, x2j, y1j, y2j = (c[None, :] for c in (x1, x2, y1, y2))

    def vertical_meets(x, ylo, yhi):
        # vertical segment of frame i against all four sides of frame j
        top = (x1j <= x) & (x <= x2j) & (ylo <= y2j) & (y2j <= yhi)
        bottom = (x1j <= x) & (x <= x2j) & (ylo <= y1j) & (y1j <= yhi)
        sides = ((x == x1j) | (x == x2j)) & (ylo <= y2j) & (y1j <= yhi)
        return top, bottom, sides

    lt, lb, ls = vertical_meets(X1, Y1, Y2)
    rt, rb, rs = vertical_meets(X2, Y1, Y2)
    n = len(frames)
    eye = np.eye(n, dtype=bool)
    left = (lt | lb | ls) & ~eye
    right_top = rt & ~eye
    right_bottom = rb & ~eye
    right_any = (rt | rb | rs) & ~eye
    return left, right_top, right_bottom, right_any


def _boundaries_meet(frames: Sequence[Frame]) -> np.ndarray:
    left, _, _, right_any = _side_hits(frames)
    # every contact between two frames involves a vertical side of one of them
    hit = left | right_any
    return hit | hit.T


def containment(a: Frame, b: Frame) -> str:
    """Relative position of two frames in general position."""
    if a.x2 < b.x1 or b.x2 < a.x1 or a.y2 < b.y1 or b.y2 < a.y1:
        return DISJOINT
    if b.x1 < a.x1 and a.x2 < b.x2 and b.y1 < a.y1 and a.y2 < b.y2:
        return A_INSIDE_B
    if a.x1 < b.x1 and b.x2 < a.x2 and a.y1 < b.y1 and b.y2 < a.y2:
        return B_INSIDE_A
    return INTERSECTING


def is_canonical_pair(a: Frame, b: Frame) -> bool:
    """``a``'s right side pierces ``b`` in the canonical pattern."""
    return a.x1 < b.x1 < a.x2 < b.x2 and a.y1 < b.y1 < b.y2 < a.y2


def intersection_graph(frames: Sequence[Frame]) -> SimpleGraph:
    """Graph on the frames' vertex ids with an edge for every meeting pair."""
    frames = list(frames)
    if not frames:
        return SimpleGraph(0)
    if not _in_general_position(frames):
        raise DomainError("intersection_graph needs frames in general position")
    ids = [f.vertex for f in frames]
    if sorted(ids) != list(range(len(ids))):
        raise DomainError("frame vertex ids must be exactly 0..n-1")
    meet = _boundaries_meet(frames)
    ii, jj = np.nonzero(np.triu(meet, 1))
    return SimpleGraph(len(frames), [(ids[i], ids[j]) for i, j in zip(ii.tolist(), jj.tolist())])


def validate(rep: FrameRepresentation) -> list[Violation]:
    """Every breach of the frame restrictions, plus mismatches with the target."""
    frames = list(rep.frames)
    out: list[Violation] = []
    n = rep.target.vertex_count
    ids = [f.vertex for f in frames]
    if sorted(ids) != list(range(n)):
        missing = sorted(set(range(n)) - set(ids))
        extra = sorted(v for v in set(ids) if not 0 <= v < n or ids.count(v) > 1)
        out.append(Violation("graph-mismatch", tuple(missing + extra),
                             "frames must cover the target's vertices exactly once"))
    if not frames:
        return out

    ties = _general_position_ties(frames)
    for axis, value, owners in ties:
        out.append(Violation("general-position", owners, f"shared {axis}-coordinate {value}"))
    if ties:
        for a in frames:
            for b in frames:
                if a is b:
                    continue
                corners = ((a.x1, a.y1), (a.x1, a.y2), (a.x2, a.y1), (a.x2, a.y2))
                if any(_point_on_frame(x, y, b) for x, y in corners):
                    out.append(Violation("clause-1", (a.vertex, b.vertex),
                                         "a corner lies on another frame"))

    left, right_top, right_bottom, right_any = _side_hits(frames)
    for i, j in zip(*np.nonzero(left)):
        out.append(Violation("clause-2", (ids[i], ids[j]), "left side meets another frame"))
    bad3 = right_any & ~(right_top & right_bottom)
    for i, j in zip(*np.nonzero(bad3)):
        out.append(Violation("clause-3", (ids[i], ids[j]),
                             "right side meets a frame without crossing its top and bottom"))

    meet = left | right_any
    meet = meet | meet.T
    x1, x2, y1, y2 = _columns(frames)
    for i, j in zip(*np.nonzero(np.triu(meet, 1))):
        zx1, zx2 = max(x1[i], x1[j]), min(x2[i], x2[j])
        zy1, zy2 = max(y1[i], y1[j]), min(y2[i], y2[j])
        inside = (zx1 <= x1) & (x2 <= zx2) & (zy1 <= y1) & (y2 <= zy2)
        inside[[i, j]] = False
        for k in np.nonzero(inside)[0]:
            out.append(Violation("clause-4", (ids[i], ids[j], ids[k]),
                                 "a frame lies inside the common region of an intersecting pair"))

    if sorted(ids) == list(range(n)):
        got = {(min(ids[i], ids[j]), max(ids[i], ids[j]))
               for i, j in zip(*np.nonzero(np.triu(meet, 1)))}
        want = set(rep.target.edges())
        for u, v in sorted(got - want):
            out.append(Violation("graph-mismatch", (u, v), "frames meet but the target has no edge"))
        for u, v in sorted(want - got):
            out.append(Violation("graph-mismatch", (u, v), "target edge but the frames do not meet"))
    return out


def _point_on_frame(x: int, y: int, f: Frame) -> bool:
    on_vertical = x in (f.x1, f.x2) and f.y1 <= y <= f.y2
    on_horizontal = y in (f.y1, f.y2) and f.x1 <= x <= f.x2
    return on_vertical or on_horizontal


def is_valid(rep: FrameRepresentation) -> bool:
    return not validate(rep)


# ---------------------------------------------------------------------------
# diagnostics on valid representations


def _is_inside(inner: Frame, outer: Frame) -> bool:
    return containment(inner, outer) == A_INSIDE_B


def big_vertex_of_cycle(rep: FrameRepresentation, cycle: Sequence[int]) -> set[int]:
    """Cycle vertices whose frame contains the frames of all cycle vertices
    outside their closed neighbourhood."""
    g = rep.target
    cycle = list(cycle)
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise DomainError("a cycle needs at least three distinct vertices")
    cset = set(cycle)
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % k]):
            raise DomainError(f"{v} and {cycle[(i + 1) % k]} are not adjacent")
        if len(g.adj[v] & cset) != 2:
            raise DomainError(f"cycle is not induced at vertex {v}")
    frames = rep.by_vertex()
    return {v for v in cycle
            if all(_is_inside(frames[w], frames[v]) for w in cset - g.closed_neighborhood(v))}


def _component_map(g: SimpleGraph, removed: Iterable[int]) -> dict[int, int]:
    comp = {}
    for i, c in enumerate(components(g, removed)):
        for x in c:
            comp[x] = i
    return comp


def path_lemma_violations(rep: FrameRepresentation) -> list[tuple[int, int, int]]:
    """Triples (u, v, w), F_u inside F_v and F_w outside F_v, joined by a path
    avoiding N[v].  Empty on every valid representation."""
    g = rep.target
    frames = rep.by_vertex()
    out = []
    for v in range(g.vertex_count):
        comp = _component_map(g, g.closed_neighborhood(v))
        fv = frames[v]
        inside = [u for u in comp if _is_inside(frames[u], fv)]
        outside = [w for w in comp if containment(frames[w], fv) == DISJOINT]
        for u in inside:
            for w in outside:
                if comp[u] == comp[w]:
                    out.append((u, v, w))
    return out


def path_corollary_violations(rep: FrameRepresentation) -> list[tuple[int, int, int]]:
    """Triples (u, v, x): F_u inside F_v, x in u's component of G - N[v],
    but F_x not inside F_v."""
    g = rep.target
    frames = rep.by_vertex()
    out = []
    for v in range(g.vertex_count):
        fv = frames[v]
        for comp in components(g, g.closed_neighborhood(v)):
            inner = [x for x in comp if _is_inside(frames[x], fv)]
            if inner:
                out.extend((inner[0], v, x) for x in comp if not _is_inside(frames[x], fv))
    return out


def cycle_lemma_violations(rep: FrameRepresentation,
                           cycles: Iterable[Sequence[int]] | None = None) -> list[tuple]:
    """Induced cycles with no big vertex or with two non-adjacent ones.

    On cycles of length at least four, pairwise adjacency caps the big
    vertices at two; every vertex of a triangle is big.
    """
    g = rep.target
    if cycles is None:
        cycles = induced_cycles(g)
    out = []
    for c in cycles:
        big = sorted(big_vertex_of_cycle(rep, c))
        if not big:
            out.append((tuple(c), ()))
        for u, v in itertools.combinations(big, 2):
            if not g.has_edge(u, v):
                out.append((tuple(c), (u, v)))
    return out


def big_vertices(rep: FrameRepresentation, cycles: Iterable[Sequence[int]] | None = None) -> set[int]:
    """Union of the big vertices over all (or the given) induced cycles."""
    if cycles is None:
        cycles = induced_cycles(rep.target)
    out: set[int] = set()
    for c in cycles:
        out |= big_vertex_of_cycle(rep, c)
    return out


# ---------------------------------------------------------------------------
# builders
#
# Builders work on a plain dict vertex -> [x1, x2, y1, y2].


def _compress(coords: dict[int, list[int]], spacing: int = 1) -> None:
    """Replace coordinates by their rank on each axis, times ``spacing``."""
    if not coords:
        return
    keys = list(coords)
    a = np.array([coords[k] for k in keys], dtype=np.int64)
    for cols in ((0, 1), (2, 3)):
        flat = a[:, cols].ravel()
        _, inv = np.unique(flat, return_inverse=True)
        a[:, cols] = (inv.reshape(-1, 2) * spacing)
    for k, row in zip(keys, a.tolist()):
        coords[k] = row


def _finish(coords: dict[int, list[int]], target: SimpleGraph) -> FrameRepresentation:
    _compress(coords)
    frames = tuple(Frame(*coords[v], vertex=v) for v in sorted(coords))
    return FrameRepresentation(frames, target)


def _coords_of(rep: FrameRepresentation) -> dict[int, list[int]]:
    return {f.vertex: list(f.coords()) for f in rep.frames}


def _tree_layout(adj: Mapping[int, Iterable[int]], root: int, extend: Iterable[int] = ()):
    """Layout of a tree with the root leftmost and childless nodes rightmost.

    A node at depth d with preorder index i gets ``x1 = 4Nd + i`` and
    ``x2 = 4N(d+1) + 2N + i``; nodes without children (and those listed in
    ``extend``) get their right side in the last band instead.  The y-range
    comes from an Euler tour, so children nest inside their parent and
    siblings are disjoint.  Returns the coordinates and an x-value that
    separates every extended right side from everything else.
    """
    order = []
    depth = {root: 0}
    parent = {root: None}
    y = {}
    t = 0
    stack = [(root, iter(sorted(adj[root])))]
    y[root] = [t, None]
    t += 1
    order.append(root)
    while stack:
        v, it = stack[-1]
        for w in it:
            if w == parent[v]:
                continue
            parent[w] = v
            depth[w] = depth[v] + 1
            order.append(w)
            y[w] = [t, None]
            t += 1
            stack.append((w, iter(sorted(adj[w]))))
            break
        else:
            stack.pop()
            y[v][1] = t
            t += 1
    n = len(order)
    d_max = max(depth.values())
    has_child = {p for p in parent.values() if p is not None}
    extend = set(extend)
    coords = {}
    for i, v in enumerate(order):
        d = depth[v]
        x1 = 4 * n * d + i
        if v in has_child and v not in extend:
            x2 = 4 * n * (d + 1) + 2 * n + i
        else:
            x2 = 4 * n * (d_max + 1) + 2 * n + i
        coords[v] = [x1, x2, y[v][0], y[v][1]]
    return coords, 4 * n * (d_max + 1) + n


def _tree_adj(g: SimpleGraph, vertices: Iterable[int] | None = None) -> dict[int, list[int]]:
    vs = range(g.vertex_count) if vertices is None else vertices
    vset = set(vs)
    return {v: [w for w in g.adj[v] if w in vset] for v in vset}


def build_tree(t: SimpleGraph, root: int = 0) -> FrameRepresentation:
    """Representation of a tree: root leftmost, leaves rightmost."""
    if t.vertex_count == 0 or not is_tree(t):
        raise DomainError("build_tree needs a non-empty tree")
    if not 0 <= root < t.vertex_count:
        raise VertexRangeError(f"root {root} out of range")
    coords, _ = _tree_layout(_tree_adj(t), root)
    return _finish(coords, t)


def _chandelier_tree(adj: Mapping[int, Iterable[int]], leaves: set[int]):
    """Root choice for a chandelier's tree: an internal vertex if one exists,
    otherwise (the tree is a single edge) one end, extended to the right."""
    internal = sorted(v for v in adj if v not in leaves)
    if internal:
        return internal[0], ()
    root = min(adj)
    return root, (root,)


def _check_chandelier(h: SimpleGraph, pivot: int) -> tuple[dict[int, list[int]], set[int]]:
    if not 0 <= pivot < h.vertex_count:
        raise VertexRangeError(f"pivot {pivot} out of range")
    rest = [v for v in range(h.vertex_count) if v != pivot]
    sub, labels = h.induced(rest)
    if len(rest) < 2 or not is_tree(sub):
        raise DomainError("removing the pivot must leave a tree on at least two vertices")
    adj = _tree_adj(h, rest)
    leaves = {v for v in rest if len(adj[v]) == 1}
    if leaves != set(h.adj[pivot]):
        raise DomainError("the pivot must be adjacent to exactly the leaves of the tree")
    return adj, leaves


def build_chandelier(h: SimpleGraph, pivot: int | None = None) -> FrameRepresentation:
    """Tree layout plus one large pivot frame pierced by every leaf."""
    if pivot is None:
        found = chandelier_pivots(h)
        if not found:
            raise DomainError("graph is not a chandelier")
        pivot = found[0][0]
    adj, leaves = _check_chandelier(h, pivot)
    root, extend = _chandelier_tree(adj, leaves)
    coords, threshold = _tree_layout(adj, root, extend)
    top = max(c[3] for c in coords.values()) + 1
    coords[pivot] = [-1, threshold, -1, top]
    return _finish(coords, h)


def add_twin(rep: FrameRepresentation, v: int) -> FrameRepresentation:
    """Add a vertex with the same neighbourhood as ``v``, drawn just inside F_v."""
    g = rep.target
    if not 0 <= v < g.vertex_count:
        raise VertexRangeError(f"vertex {v} out of range")
    coords = _coords_of(rep)
    _compress(coords, 3)
    x1, x2, y1, y2 = coords[v]
    w = g.vertex_count
    coords[w] = [x1 + 1, x2 - 1, y1 + 1, y2 - 1]
    target = SimpleGraph(w + 1, g.edges() + [(u, w) for u in sorted(g.adj[v])])
    return _finish(coords, target)


def _attach(coords: dict[int, list[int]], v: int, local: dict[int, list[int]], threshold: int) -> None:
    """Shrink ``local`` into the corner just below the top-right corner of F_v.

    Local x-values below ``threshold`` go immediately left of F_v's right
    side, the others immediately right of it; every y-value goes immediately
    below F_v's top.  Nothing else has coordinates in those gaps, so the new
    frames only meet F_v (through the ones straddling its right side) and
    each other.
    """
    xs = sorted({x for c in local.values() for x in c[:2]})
    ys = sorted({y for c in local.values() for y in c[2:]})
    below = [x for x in xs if x < threshold]
    above = [x for x in xs if x >= threshold]
    spacing = max(len(below), len(above), len(ys)) + 1
    _compress(coords, spacing)
    vx2, vy2 = coords[v][1], coords[v][3]
    xmap = {x: vx2 - len(below) + i for i, x in enumerate(below)}
    xmap.update({x: vx2 + 1 + i for i, x in enumerate(above)})
    ymap = {y: vy2 - len(ys) + i for i, y in enumerate(ys)}
    for u, (x1, x2, y1, y2) in local.items():
        coords[u] = [xmap[x1], xmap[x2], ymap[y1], ymap[y2]]


def _glue_layout(coords, v, adj, leaves) -> None:
    root, extend = _chandelier_tree(adj, leaves)
    local, threshold = _tree_layout(adj, root, extend)
    _attach(coords, v, local, threshold)


def _pendant_layout(coords, v, path: Sequence[int]) -> None:
    adj = {p: [] for p in path}
    for a, b in zip(path, path[1:]):
        adj[a].append(b)
        adj[b].append(a)
    local, _ = _tree_layout(adj, path[0])
    # only the first frame's left side stays inside F_v
    _attach(coords, v, local, 4 * len(path))


def glue_chandelier(rep: FrameRepresentation, v: int, chandelier: SimpleGraph,
                    pivot: int | None = None) -> FrameRepresentation:
    """Identify ``v`` with the pivot of ``chandelier``.

    The chandelier's other vertices get new ids after the existing ones,
    in increasing order of their id in ``chandelier``.
    """
    g = rep.target
    if not 0 <= v < g.vertex_count:
        raise VertexRangeError(f"vertex {v} out of range")
    if pivot is None:
        found = chandelier_pivots(chandelier)
        if not found:
            raise DomainError("graph is not a chandelier")
        pivot = found[0][0]
    adj, leaves = _check_chandelier(chandelier, pivot)
    n = g.vertex_count
    ids = {c: n + i for i, c in enumerate(sorted(adj))}
    ids[pivot] = v
    gadj = {ids[c]: [ids[w] for w in ws] for c, ws in adj.items()}
    coords = _coords_of(rep)
    _glue_layout(coords, v, gadj, {ids[c] for c in leaves})
    edges = g.edges() + [(ids[a], ids[b]) for a, b in chandelier.edges()]
    return _finish(coords, SimpleGraph(n + len(adj), edges))


def add_pendant_path(rep: FrameRepresentation, v: int, length: int) -> FrameRepresentation:
    """Attach a path of ``length`` new vertices at ``v``."""
    g = rep.target
    if not 0 <= v < g.vertex_count:
        raise VertexRangeError(f"vertex {v} out of range")
    if length < 1:
        raise DomainError("a pendant path needs at least one vertex")
    n = g.vertex_count
    path = list(range(n, n + length))
    coords = _coords_of(rep)
    _pendant_layout(coords, v, path)
    edges = g.edges() + list(zip([v] + path, path))
    return _finish(coords, SimpleGraph(n + length, edges))


# ---------------------------------------------------------------------------
# path insertion


def _boundary_meets(f: Sequence[int], xa, xb, ya, yb) -> bool:
    """Does the boundary of frame ``f`` meet the closed box [xa,xb] x [ya,yb]?"""
    x1, x2, y1, y2 = f
    if xa > xb or ya > yb:
        return False
    ylap = y1 <= yb and ya <= y2
    xlap = x1 <= xb and xa <= x2
    vertical = ylap and (xa <= x1 <= xb or xa <= x2 <= xb)
    horizontal = xlap and (ya <= y1 <= yb or ya <= y2 <= yb)
    return vertical or horizontal


def _insert_candidates(coords, a_id, b_id):
    """Cut positions, in preference order, whose strips are clear.

    A cut at gap ``t`` (between ranks t and t+1) shortens A to end just
    before the cut and B to start just after it; the strips given up by A
    and B must not meet any third frame.
    """
    A, B = coords[a_id], coords[b_id]
    a, b0 = A[1], B[0]
    others = [c for k, c in coords.items() if k not in (a_id, b_id)]

    def clear(xa, xb, ya, yb):
        return not any(_boundary_meets(c, xa, xb, ya, yb) for c in others)

    gaps = [a, b0 - 1] + list(range(b0, a))
    seen = set()
    for t in gaps:
        if t in seen:
            continue
        seen.add(t)
        # A gives up (t, a], B gives up [b0, t]
        if t < a and not clear(t + 1, a, A[2], A[3]):
            continue
        if t >= b0 and not clear(b0, t, B[2], B[3]):
            continue
        yield t


def _insert_at(coords, a_id, b_id, chain: Sequence[int], t: int) -> None:
    """Replace the A-B crossing by A - chain - B around the cut gap ``t``."""
    k = len(chain)
    A, B = coords[a_id], coords[b_id]
    a, b0 = A[1], B[0]
    tokens: list[tuple[int, int]] = [(chain[0], 0)]
    if t != a:
        tokens.append((a_id, 1))
    for i in range(1, k):
        tokens.append((chain[i], 0))
        tokens.append((chain[i - 1], 1))
    if t != b0 - 1:
        tokens.append((b_id, 0))
    tokens.append((chain[-1], 1))
    spacing = len(tokens) + 2
    for c in chain:
        coords[c] = [0, 0, 0, 0]
    _compress_partial(coords, spacing, skip=set(chain))
    A, B = coords[a_id], coords[b_id]
    if t == a:
        # the existing right side of A splits the tokens after the first
        base_left, base_right = A[1], A[1]
        left_tokens, right_tokens = tokens[:1], tokens[1:]
    elif t == b0 - 1:
        base_left, base_right = B[0], B[0]
        left_tokens, right_tokens = tokens[:-1], tokens[-1:]
    else:
        base = t * spacing
        left_tokens, right_tokens = [], tokens
        base_left = base_right = base
    for i, (vid, side) in enumerate(left_tokens):
        coords[vid][side] = base_left - len(left_tokens) + i
    for i, (vid, side) in enumerate(right_tokens):
        coords[vid][side] = base_right + 1 + i
    # nested y-ranges just outside B's
    for i, c in enumerate(chain):
        coords[c][2] = B[2] - k + i
        coords[c][3] = B[3] + k - i


def _compress_partial(coords, spacing, skip) -> None:
    keep = {k: v for k, v in coords.items() if k not in skip}
    _compress(keep, spacing)
    coords.update(keep)


def insert_path(rep: FrameRepresentation, edge: tuple[int, int], k: int) -> FrameRepresentation:
    """Subdivide edge ``uv`` ``k`` times by replacing the crossing of F_u and
    F_v with a chain of ``k`` frames.

    New vertices get ids ``n .. n+k-1`` listed from ``u`` to ``v``.  Raises
    :class:`NotApplicable` when no cut position leaves a clear strip.
    """
    u, v = edge
    g = rep.target
    for x in (u, v):
        if not 0 <= x < g.vertex_count:
            raise VertexRangeError(f"vertex {x} out of range")
    if not g.has_edge(u, v):
        raise DomainError(f"{u}{v} is not an edge")
    if k < 1:
        raise DomainError("insert_path needs k >= 1")
    frames = rep.by_vertex()
    if is_canonical_pair(frames[u], frames[v]):
        a_id, b_id, forward = u, v, True
    elif is_canonical_pair(frames[v], frames[u]):
        a_id, b_id, forward = v, u, False
    else:
        raise NotApplicable(f"frames of {u} and {v} do not meet in the canonical pattern")
    n = g.vertex_count
    new_ids = list(range(n, n + k))
    chain = new_ids if forward else new_ids[::-1]
    path = [u, *new_ids, v]
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))] + list(zip(path, path[1:]))
    target = SimpleGraph(n + k, edges)
    base = _coords_of(rep)
    _compress(base)
    for t in _insert_candidates(base, a_id, b_id):
        coords = {key: list(c) for key, c in base.items()}
        _insert_at(coords, a_id, b_id, chain, t)
        out = _finish(coords, target)
        if not validate(out):
            return out
    raise NotApplicable(f"no clear strip to subdivide {u}{v}")


# ---------------------------------------------------------------------------
# subdivisions of multigraphs


def _block_pieces(profile, edge_ids: Iterable[int]):
    """Realized vertices and adjacency of the subdivided block."""
    adj: dict[int, set[int]] = {}
    for e in edge_ids:
        path = profile.path_map[e]
        for a, b in zip(path, path[1:]):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    return adj


def _chandelier_parts(adj: dict[int, set[int]], pivot: int):
    tree = {x: sorted(ws - {pivot}) for x, ws in adj.items() if x != pivot}
    leaves = set(adj[pivot])
    return tree, leaves


def build_ge2_subdivision(g: Multigraph, counts) -> FrameRepresentation:
    """Representation of the subdivision of ``g`` given by ``counts`` (all >= 2).

    The surviving block of the pruning becomes a chandelier around its
    feedback vertex (or a path), and the pruned blocks are glued back in
    reverse order at their parent cut-vertices.
    """
    from .decision import decide_ge2_subdivisions

    profile = subdivide(g, counts)
    if not profile.is_ge(2):
        raise DomainError("every edge needs at least two subdivision vertices")
    outcome = decide_ge2_subdivisions(g)
    if not outcome.answer:
        raise DomainError("no >=2-subdivision of this multigraph is a restricted frame graph: "
                          f"{outcome.evidence.kind}")
    h = profile.realized
    coords: dict[int, list[int]] = {}
    root = outcome.evidence.blocks[0]
    fv = outcome.evidence.vertices[0]
    if g.edge_count == 0:
        coords[0] = [0, 1, 0, 1]
    else:
        adj = _block_pieces(profile, root.edge_ids)
        if _is_bridge(root):
            path = profile.path_map[root.edge_ids[0]]
            coords, _ = _tree_layout({x: sorted(adj[x]) for x in adj}, path[0])
        else:
            tree, leaves = _chandelier_parts(adj, fv)
            troot, extend = _chandelier_tree(tree, leaves)
            coords, threshold = _tree_layout(tree, troot, extend)
            top = max(c[3] for c in coords.values()) + 1
            coords[fv] = [-1, threshold, -1, top]
    for blk, c in reversed(outcome.trace):
        adj = _block_pieces(profile, blk.edge_ids)
        if _is_bridge(blk):
            path = list(profile.path_map[blk.edge_ids[0]])
            if path[0] != c:
                path.reverse()
            _pendant_layout(coords, c, path[1:])
        else:
            tree, leaves = _chandelier_parts(adj, c)
            _glue_layout(coords, c, tree, leaves)
    return _finish(coords, h)


def _is_bridge(blk) -> bool:
    return len(blk.edge_ids) == 1 and not blk.is_loop


# ---------------------------------------------------------------------------
# subdivisions of K4
#
# Base layouts for the four triangle-free supports, mostly with one
# subdivision vertex per supported edge.  Vertex ids follow ``subdivide``:
# 0..3 are the branch vertices, then one vertex per supported edge in edge
# order.  Found by a randomized search over rank orders and certified by
# ``validate`` in the tests.

K4_BASES = {
    # (01, 23)
    "matching": ((1, 1, 0, 0, 0, 0), (
        (0, 8, 0, 11), (1, 7, 1, 10), (3, 10, 3, 4), (4, 11, 5, 6),
        (5, 9, 8, 9), (2, 6, 2, 7))),
    # (23, 13, 12)
    "triangle": ((0, 1, 0, 1, 0, 1), (
        (2, 10, 2, 11), (1, 5, 1, 12), (6, 12, 4, 5), (7, 13, 8, 9),
        (0, 11, 0, 13), (3, 9, 7, 10), (4, 8, 3, 6))),
    # 2 - 0 - 1 - 3
    "path": ((1, 0, 1, 1, 0, 0), (
        (1, 11, 1, 12), (5, 10, 4, 7), (2, 8, 2, 11), (0, 4, 0, 13),
        (9, 12, 5, 6), (6, 13, 9, 10), (3, 7, 3, 8))),
    # the triangle again, two vertices per edge; the one-vertex layout
    # cannot be stretched this far by path insertion
    "triangle-2": ((0, 2, 0, 2, 0, 2), (
        (2, 14, 2, 17), (1, 5, 1, 18), (12, 18, 13, 14), (10, 16, 5, 8),
        (0, 17, 0, 19), (15, 19, 6, 7), (3, 8, 3, 10), (7, 11, 4, 9),
        (4, 9, 11, 16), (6, 13, 12, 15))),
    # all but 01 and 12
    "shared": ((0, 1, 1, 1, 1, 0), (
        (4, 10, 3, 6), (1, 7, 1, 14), (3, 11, 9, 12), (0, 12, 0, 15),
        (8, 15, 10, 11), (2, 5, 2, 13), (6, 14, 7, 8), (9, 13, 4, 5))),
}


def _k4_base(name: str) -> FrameRepresentation:
    from .decision import k4_subdivision

    counts, coords = K4_BASES[name]
    target = k4_subdivision(counts).realized
    return FrameRepresentation(tuple(Frame(*c, vertex=v) for v, c in enumerate(coords)), target)


def _k4_edge_index(u: int, v: int) -> int:
    from .decision import K4_EDGES

    return K4_EDGES.index((min(u, v), max(u, v)))


def _k4_attempt(base: FrameRepresentation, base_counts, perm, counts, order):
    """Extend ``base`` to ``counts`` under the vertex map ``perm``; None on failure."""
    from .decision import K4_EDGES

    rep = base
    paths = {}
    nxt = 4
    for f, (u, v) in enumerate(K4_EDGES):
        paths[f] = [u, *range(nxt, nxt + base_counts[f]), v]
        nxt += base_counts[f]
    edge_of = {f: _k4_edge_index(perm[u], perm[v]) for f, (u, v) in enumerate(K4_EDGES)}
    if any(counts[edge_of[f]] < base_counts[f] for f in range(6)):
        return None
    for f in order:
        extra = counts[edge_of[f]] - base_counts[f]
        if extra <= 0:
            continue
        path = paths[f]
        for i in range(len(path) - 1):
            try:
                rep = insert_path(rep, (path[i], path[i + 1]), extra)
            except NotApplicable:
                continue
            n0 = rep.target.vertex_count - extra
            paths[f] = path[:i + 1] + list(range(n0, n0 + extra)) + path[i + 1:]
            break
        else:
            return None
    return rep, paths, edge_of


def build_k4_subdivision(counts) -> FrameRepresentation:
    """Representation of the subdivision of K4 with ``counts[i]`` vertices on
    the i-th edge of ``K4_EDGES``; the profile must be representable."""
    from .decision import K4_EDGES, k4_status, k4_subdivision

    counts = tuple(int(c) for c in counts)
    status = k4_status(counts)
    if status.status != "RestrictedFrameGraph":
        raise DomainError(f"K4 profile {counts} is {status.status}")
    profile = k4_subdivision(counts)
    support = {K4_EDGES[i] for i, c in enumerate(counts) if c}
    for name, (base_counts, _) in K4_BASES.items():
        if sum(1 for c in base_counts if c) != len(support):
            continue
        base = None
        for perm in itertools.permutations(range(4)):
            mapped = {tuple(sorted((perm[u], perm[v])))
                      for f, (u, v) in enumerate(K4_EDGES) if base_counts[f]}
            if mapped != support:
                continue
            if base is None:
                base = _k4_base(name)
            todo = [f for f in range(6) if base_counts[f]]
            for order in itertools.permutations(todo):
                got = _k4_attempt(base, base_counts, perm, counts, order)
                if got is None:
                    continue
                rep, paths, edge_of = got
                out = _k4_relabel(rep, paths, edge_of, perm, profile)
                if not validate(out):
                    return out
    raise NotApplicable(f"no layout found for K4 profile {counts}")


def _k4_relabel(rep, paths, edge_of, perm, profile) -> FrameRepresentation:
    from .decision import K4_EDGES

    ids = {v: perm[v] for v in range(4)}
    for f, path in paths.items():
        e = edge_of[f]
        if perm[path[0]] != K4_EDGES[e][0]:
            path = path[::-1]
        for old, new in zip(path[1:-1], profile.path_map[e][1:-1]):
            ids[old] = new
    frames = tuple(sorted((Frame(*f.coords(), vertex=ids[f.vertex]) for f in rep.frames),
                          key=lambda f: f.vertex))
    return FrameRepresentation(frames, profile.realized)


# ---------------------------------------------------------------------------
# rendering


def emit_svg(rep: FrameRepresentation, violations: Sequence[Violation] | None = None) -> str:
    """SVG drawing of the frames; frames named in violations get class ``bad``."""
    if violations is None:
        violations = validate(rep)
    bad = {v for viol in violations for v in viol.frames}
    frames = list(rep.frames)
    if frames:
        a = rep.array()
        xmin, xmax = int(a[:, 0].min()), int(a[:, 1].max())
        ymin, ymax = int(a[:, 2].min()), int(a[:, 3].max())
    else:
        xmin, xmax, ymin, ymax = 0, 1, 0, 1
    w, h = max(xmax - xmin, 1), max(ymax - ymin, 1)
    mx, my = 0.05 * w, 0.05 * h
    vb = f"{xmin - mx:g} {-(ymax + my):g} {w + 2 * mx:g} {h + 2 * my:g}"
    stroke = max(w, h) / 400
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}">',
        "<style>",
        f"rect {{ fill: none; stroke: #1f4e79; stroke-width: {stroke:g}; }}",
        f"rect.bad {{ stroke: #c0392b; stroke-width: {3 * stroke:g}; }}",
        f"text {{ font-size: {max(w, h) / 60:g}px; font-family: sans-serif; }}",
        "</style>",
    ]
    for f in frames:
        cls = ' class="bad"' if f.vertex in bad else ""
        # y grows upwards in the model and downwards in SVG
        lines.append(f'<rect{cls} x="{f.x1}" y="{-f.y2}" width="{f.x2 - f.x1}" '
                     f'height="{f.y2 - f.y1}" data-vertex="{f.vertex}"/>')
        lines.append(f'<text x="{f.x1}" y="{-f.y2}">{html.escape(str(f.vertex))}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
