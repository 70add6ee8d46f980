"""Multigraphs, simple graphs and the structural operations used everywhere.

Vertex ids are dense integers ``0..n-1``.  Multigraph edges live in an
``(m, 2)`` integer array so the linear-time routines can hand them straight
to the kernels; simple graphs keep adjacency sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, DomainError, ParseError, SubdivisionError, VertexRangeError

__all__ = [
    "Multigraph",
    "SimpleGraph",
    "Block",
    "BlockTree",
    "SubdivisionProfile",
    "Shape",
    "parse_multigraph",
    "format_multigraph",
    "is_connected",
    "is_triangle_free",
    "full_star_cutset_centers",
    "block_tree",
    "is_feedback_vertex",
    "subdivide",
    "subdivision_base",
    "recognize_shape",
    "chandelier_pivots",
    "is_induced_subgraph",
    "induced_cycles",
]


class Multigraph:
    """Undirected multigraph; loops and parallel edges allowed."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges=()):
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise DomainError("edges must be a list of (u, v) pairs")
        if vertex_count < 0:
            raise DomainError("vertex_count must be non-negative")
        if arr.size and (arr.min() < 0 or arr.max() >= vertex_count):
            raise VertexRangeError(
                f"edge endpoint out of range for {vertex_count} vertices")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        self.vertex_count = int(vertex_count)
        self.edges = arr

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]

    def degree(self, v: int) -> int:
        return int(np.count_nonzero(self.edges[:, 0] == v) + np.count_nonzero(self.edges[:, 1] == v))

    def remove_vertex(self, v: int) -> "Multigraph":
        """Delete ``v`` and relabel the remaining vertices in order."""
        self._check(v)
        keep = (self.edges[:, 0] != v) & (self.edges[:, 1] != v)
        e = self.edges[keep]
        e = e - (e > v)
        return Multigraph(self.vertex_count - 1, e)

    def canonical_key(self) -> tuple:
        """Edge multiset as a sorted tuple (labelled, not isomorphism-invariant)."""
        return (self.vertex_count, tuple(sorted((min(u, v), max(u, v)) for u, v in self.edge_list())))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise VertexRangeError(f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and np.array_equal(self.edges, other.edges)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Multigraph({self.vertex_count}, {self.edge_list()})"


class SimpleGraph:
    """Undirected graph without loops or parallel edges."""

    __slots__ = ("vertex_count", "adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        adj = [set() for _ in range(vertex_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexRangeError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise DomainError(f"loop at {u} in a simple graph")
            adj[u].add(v)
            adj[v].add(u)
        self.vertex_count = vertex_count
        self.adj = tuple(frozenset(s) for s in adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "SimpleGraph":
        g = cls.__new__(cls)
        g.vertex_count = len(adj)
        g.adj = tuple(frozenset(s) for s in adj)
        return g

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def induced(self, vertices: Sequence[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph on ``vertices`` (relabelled in the given order)."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        adj = [[index[w] for w in self.adj[v] if w in index] for v in vs]
        return SimpleGraph.from_adjacency(adj), vs

    def remove(self, removed: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        gone = set(removed)
        return self.induced([v for v in range(self.vertex_count) if v not in gone])

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.vertex_count, self.edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.vertex_count}, {self.edges()})"


# ---------------------------------------------------------------------------
# parsing


def parse_multigraph(text: str) -> Multigraph:
    """Read the edge-list format.

    First non-comment line is the vertex count, every further non-comment
    line is ``"u v"``.  Lines starting with ``#`` and blank lines are skipped.
    """
    if text.startswith("﻿"):
        text = text[1:]
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise ParseError(f"expected vertex count, got {raw!r}", lineno)
            n = int(parts[0])
            continue
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise ParseError(f"expected 'u v', got {raw!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise VertexRangeError(f"line {lineno}: vertex id out of range for {n} vertices")
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count", 1)
    return Multigraph(n, edges)


def format_multigraph(g: Multigraph) -> str:
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# basic structure


def _components(g: SimpleGraph, removed: frozenset | set = frozenset()) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for s in range(g.vertex_count):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def components(g: SimpleGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``."""
    return _components(g, set(removed))


def is_connected(g: SimpleGraph | Multigraph) -> bool:
    if isinstance(g, Multigraph):
        if g.vertex_count <= 1:
            return True
        eu, ev = _edge_arrays(g)
        return int(_kernels.count_components(g.vertex_count, eu, ev)) == 1
    return len(_components(g)) <= 1


def is_triangle_free(g: SimpleGraph) -> bool:
    for u in range(g.vertex_count):
        au = g.adj[u]
        for v in au:
            if v > u and not au.isdisjoint(g.adj[v]):
                return False
    return True


def full_star_cutset_centers(g: SimpleGraph) -> set[int]:
    """All ``u`` such that removing ``N[u]`` leaves at least two components."""
    if not is_connected(g):
        raise DomainError("full star-cutsets are defined for connected graphs")
    return {u for u in range(g.vertex_count)
            if len(_components(g, g.closed_neighborhood(u))) >= 2}


def is_path(g: SimpleGraph) -> bool:
    n = g.vertex_count
    return (n >= 1 and is_connected(g) and g.edge_count == n - 1
            and all(len(a) <= 2 for a in g.adj))


def is_tree(g: SimpleGraph) -> bool:
    return g.vertex_count >= 1 and g.edge_count == g.vertex_count - 1 and is_connected(g)


# ---------------------------------------------------------------------------
# block decomposition


@dataclass(frozen=True)
class Block:
    """One block: a local multigraph plus the maps back into the parent."""

    graph: Multigraph
    vertex_map: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.vertex_map

    @property
    def is_loop(self) -> bool:
        return self.graph.vertex_count == 1 and self.graph.edge_count == 1


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]  # (cut vertex, block index)
    root: int | None = None
    parent_cut_vertex: dict = field(default_factory=dict)

    def blocks_at(self, v: int) -> list[int]:
        return [b for c, b in self.tree_edges if c == v]

    def leaves(self) -> list[int]:
        deg = [0] * len(self.blocks)
        for _, b in self.tree_edges:
            deg[b] += 1
        return [b for b, d in enumerate(deg) if d <= 1]

    def rooted(self, root: int) -> "BlockTree":
        """Same decomposition rooted at block ``root``."""
        if not 0 <= root < len(self.blocks):
            raise DomainError(f"no block {root}")
        by_block: dict[int, list[int]] = {}
        by_cut: dict[int, list[int]] = {}
        for c, b in self.tree_edges:
            by_block.setdefault(b, []).append(c)
            by_cut.setdefault(c, []).append(b)
        parent = {}
        seen_b = {root}
        seen_c = set()
        queue = deque([root])
        while queue:
            b = queue.popleft()
            for c in by_block.get(b, []):
                if c in seen_c:
                    continue
                seen_c.add(c)
                for b2 in by_cut[c]:
                    if b2 not in seen_b:
                        seen_b.add(b2)
                        parent[b2] = c
                        queue.append(b2)
        return BlockTree(self.blocks, self.cut_vertices, self.tree_edges, root, parent)


def _edge_arrays(g: Multigraph):
    # 32-bit ids halve the memory traffic of the traversal kernels
    dt = np.int32 if max(g.vertex_count, g.edge_count) < 2**31 - 1 else np.int64
    return (np.ascontiguousarray(g.edges[:, 0], dtype=dt),
            np.ascontiguousarray(g.edges[:, 1], dtype=dt))


def block_arrays(g: Multigraph):
    """Block labels for every edge plus the block/vertex incidence structure.

    Returns a dict of arrays consumed by :func:`block_tree` and the decision
    procedure.  Loops become single-vertex blocks; an edgeless graph with one
    vertex is a single block.
    """
    n = g.vertex_count
    m = g.edge_count
    eu, ev = _edge_arrays(g)
    a = _kernels.block_structure(n, eu, ev)
    # isolated vertices become blocks of their own
    if m == 0:
        a.update(nb=n, inc_block=np.arange(n), inc_vertex=np.arange(n),
                 bptr=np.arange(n + 1), block_loop=np.zeros(n, np.bool_),
                 eptr=np.zeros(n + 1, np.int64))
    a["vinc"], a["vptr"] = _kernels.group_by(a["inc_vertex"], n)
    a.update(n=n, block_edges=np.diff(a["eptr"]))
    return a


def make_block(g: Multigraph, vertices, edge_ids) -> Block:
    vs = np.unique(np.asarray(vertices, dtype=np.int64))
    eids = np.sort(np.asarray(edge_ids, dtype=np.int64))
    if eids.size:
        if vs.size * 8 < g.vertex_count:
            local = np.searchsorted(vs, g.edges[eids])
        else:
            index = np.empty(g.vertex_count, dtype=np.int64)
            index[vs] = np.arange(vs.size)
            local = index[g.edges[eids]]
    else:
        local = np.zeros((0, 2), np.int64)
    return Block(Multigraph(len(vs), local), tuple(vs.tolist()), tuple(eids.tolist()))


def block_tree(g: Multigraph) -> BlockTree:
    """Blocks and cut-vertices of a connected multigraph."""
    if g.vertex_count == 0:
        raise DomainError("block decomposition needs at least one vertex")
    if not is_connected(g):
        raise DomainError("block decomposition needs a connected graph")
    a = block_arrays(g)
    return _block_tree_from_arrays(g, a)


def _block_tree_from_arrays(g: Multigraph, a) -> BlockTree:
    nb = a["nb"]
    bptr, inc_vertex = a["bptr"], a["inc_vertex"]
    edge_groups: list[list[int]] = [[] for _ in range(nb)]
    for e, b in enumerate(a["label"].tolist()):
        edge_groups[b].append(e)
    blocks = tuple(make_block(g, inc_vertex[bptr[b]:bptr[b + 1]].tolist(), edge_groups[b])
                   for b in range(nb))
    count = np.diff(a["vptr"])
    cuts = tuple(int(v) for v in np.nonzero(count >= 2)[0])
    cutset = set(cuts)
    tree_edges = tuple((int(v), int(b)) for b in range(nb)
                       for v in inc_vertex[bptr[b]:bptr[b + 1]].tolist() if v in cutset)
    return BlockTree(blocks, cuts, tuple(sorted(tree_edges)))


def is_feedback_vertex(g: Multigraph, v: int) -> bool:
    """True iff ``g - v`` is a forest (loops and parallel pairs are cycles)."""
    g._check(v)
    eu, ev = _edge_arrays(g)
    return bool(_kernels.is_forest_without(g.vertex_count, eu, ev, v))


def is_forest(g: Multigraph) -> bool:
    eu, ev = _edge_arrays(g)
    return bool(_kernels.is_forest_without(g.vertex_count, eu, ev, -1))


# ---------------------------------------------------------------------------
# subdivisions


@dataclass(frozen=True)
class SubdivisionProfile:
    """``realized`` is ``base`` with ``counts[e]`` new vertices on edge ``e``."""

    base: Multigraph
    counts: tuple[int, ...]
    realized: SimpleGraph
    branch_map: tuple[int, ...]
    path_map: tuple[tuple[int, ...], ...]

    def is_ge(self, k: int) -> bool:
        return all(c >= k for c in self.counts)


def subdivide(g: Multigraph, counts: Sequence[int] | int) -> SubdivisionProfile:
    """Replace edge ``e`` by a path with ``counts[e]`` internal vertices.

    Base vertices keep their ids; the internal vertices of edge ``e`` follow
    in edge order, listed from the first to the second endpoint.
    """
    m = g.edge_count
    if isinstance(counts, (int, np.integer)):
        counts = [int(counts)] * m
    counts = tuple(int(c) for c in counts)
    if len(counts) != m:
        raise SubdivisionError(f"expected {m} counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise SubdivisionError("subdivision counts must be non-negative")
    seen_pairs = set()
    edges = []
    paths = []
    nxt = g.vertex_count
    for e, (u, v) in enumerate(g.edge_list()):
        c = counts[e]
        if u == v and c < 2:
            raise SubdivisionError(f"loop {e} at {u} needs at least 2 subdivision vertices")
        if c == 0:
            key = (min(u, v), max(u, v))
            if key in seen_pairs:
                raise SubdivisionError(f"parallel edge {e} between {u} and {v} must be subdivided")
            seen_pairs.add(key)
        path = [u, *range(nxt, nxt + c), v]
        nxt += c
        edges.extend(zip(path, path[1:]))
        paths.append(tuple(path))
    # an unsubdivided edge might duplicate a subdivided one only if both are
    # direct edges, which the pair check above already excludes
    realized = SimpleGraph(nxt, edges)
    if realized.edge_count != len(edges):
        raise SubdivisionError("subdivision is not a simple graph")
    return SubdivisionProfile(g, counts, realized, tuple(range(g.vertex_count)), tuple(paths))


def subdivision_base(h: SimpleGraph) -> SubdivisionProfile:
    """Suppress every degree-2 vertex of a connected graph.

    Branch vertices (degree other than 2) are renumbered in increasing order;
    a cycle becomes a single vertex with one loop anchored at vertex 0.
    """
    if h.vertex_count == 0 or not is_connected(h):
        raise DomainError("subdivision_base needs a connected, non-empty graph")
    branch = [v for v in range(h.vertex_count) if h.degree(v) != 2]
    if not branch:
        anchor = 0
        path = [anchor]
        prev, cur = anchor, min(h.adj[anchor])
        while cur != anchor:
            path.append(cur)
            a, b = h.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        path.append(anchor)
        base = Multigraph(1, [(0, 0)])
        return SubdivisionProfile(base, (len(path) - 2,), h, (anchor,), (tuple(path),))
    index = {v: i for i, v in enumerate(branch)}
    edges = []
    paths = []
    for u in branch:
        for w in sorted(h.adj[u]):
            path = [u]
            prev, cur = u, w
            while h.degree(cur) == 2:
                path.append(cur)
                a, b = h.adj[cur]
                prev, cur = cur, (b if a == prev else a)
            path.append(cur)
            v = cur
            first, last = path[1], path[-2]
            if u == v:
                if first > last:
                    continue
            elif (u, first) > (v, last):
                continue
            edges.append((index[u], index[v]))
            paths.append(tuple(path))
    base = Multigraph(len(branch), edges)
    counts = tuple(len(p) - 2 for p in paths)
    return SubdivisionProfile(base, counts, h, tuple(branch), tuple(paths))


# ---------------------------------------------------------------------------
# shapes


@dataclass(frozen=True)
class Shape:
    kind: str  # PathAtMost4 | LongerPath | LuxuryChandelier | Chandelier | Other
    pivot: int | None = None

    def __str__(self) -> str:
        return self.kind if self.pivot is None else f"{self.kind}({self.pivot})"


def chandelier_pivots(h: SimpleGraph) -> list[tuple[int, bool]]:
    """Every vertex that is a chandelier pivot, with its luxury flag.

    ``v`` is a pivot when ``h - v`` is a tree on at least two vertices whose
    leaves are exactly ``N(v)``; luxury when every leaf's tree neighbour has
    degree 2 in the tree.
    """
    out = []
    n = h.vertex_count
    if n < 3:
        return out
    m = h.edge_count
    for v in range(n):
        nv = h.adj[v]
        if m - len(nv) != n - 2:
            continue
        t, labels = h.remove([v])
        if not is_connected(t):
            continue
        leaves = {labels[i] for i in range(t.vertex_count) if t.degree(i) == 1}
        if leaves != set(nv):
            continue
        index = {x: i for i, x in enumerate(labels)}
        luxury = all(t.degree(next(iter(t.adj[index[x]]))) == 2 for x in leaves)
        out.append((v, luxury))
    return out


def recognize_shape(h: SimpleGraph) -> Shape:
    if h.vertex_count == 0 or not is_connected(h):
        raise DomainError("recognize_shape needs a connected, non-empty graph")
    if is_path(h):
        return Shape("PathAtMost4" if h.vertex_count <= 4 else "LongerPath")
    pivots = chandelier_pivots(h)
    for v, lux in pivots:
        if lux:
            return Shape("LuxuryChandelier", v)
    if pivots:
        return Shape("Chandelier", pivots[0][0])
    return Shape("Other")


# ---------------------------------------------------------------------------
# search


def is_induced_subgraph(small: SimpleGraph, big: SimpleGraph,
                        budget: int | None = 10**6, accept=None) -> dict[int, int] | None:
    """Find an induced embedding of ``small`` into ``big`` by backtracking.

    Returns ``{small vertex: big vertex}`` or ``None``.  ``accept``, if
    given, filters complete embeddings.  Raises :class:`BudgetExceeded`
    after ``budget`` search nodes.
    """
    n = small.vertex_count
    if n == 0:
        return {} if accept is None or accept({}) else None
    if n > big.vertex_count:
        return None
    order = _search_order(small)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in small.adj[v] if pos[w] < pos[v]] for v in order]
    nonback = [[w for w in order[:i] if w not in small.adj[v]] for i, v in enumerate(order)]
    mapping: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return accept is None or accept(mapping)
        v = order[i]
        if back[i]:
            cands = big.adj[mapping[back[i][0]]]
        else:
            cands = range(big.vertex_count)
        dv = small.degree(v)
        for x in cands:
            if x in used or big.degree(x) < dv:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"induced subgraph search exceeded {budget} nodes")
            ax = big.adj[x]
            if any(mapping[w] not in ax for w in back[i]):
                continue
            if any(mapping[w] in ax for w in nonback[i]):
                continue
            mapping[v] = x
            used.add(x)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(x)
        return False

    return dict(mapping) if extend(0) else None


def _search_order(g: SimpleGraph) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(range(g.vertex_count), key=lambda v: -g.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.adj[v], key=lambda x: -g.degree(x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def induced_cycles(g: SimpleGraph, limit: int | None = None) -> list[tuple[int, ...]]:
    """All induced cycles (length >= 3), each listed once from its minimum vertex.

    Exponential in general; meant for graphs of a few dozen vertices.
    """
    out = []
    for s in range(g.vertex_count):
        # grow chordless paths s, x1, ..., xk with all xi > s
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in g.adj[v]:
                if w <= s or w in path:
                    continue
                if any(x in g.adj[w] for x in path[1:-1]):
                    continue
                if len(path) >= 2 and s in g.adj[w]:
                    if path[1] < w:
                        out.append(tuple(path + [w]))
                        if limit is not None and len(out) >= limit:
                            return out
                    continue
                stack.append((w, path + [w]))
    return out

