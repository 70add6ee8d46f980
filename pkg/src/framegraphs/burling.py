"""Graph/stable-set pairs, the NEXT iteration and constructibility certificates.

A certificate is a tree of ADD / JOIN / INDUCE operations over SINGLETON
leaves.  Replaying it bottom-up gives a pair; ADD and JOIN preserve
constructibility, so any certificate of depth ``d`` describes a pair that
sits inside ``next^d`` of the one-vertex pair (empty-set joins cost an extra
level when simulated).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, CertificateError, DomainError, VertexRangeError
from .graph import (
    SimpleGraph,
    components,
    is_connected,
    is_triangle_free,
    subdivision_base,
)

__all__ = [
    "GraphStableSetPair",
    "CertNode",
    "ConstructionCertificate",
    "singleton_pair",
    "next_pair",
    "next_iterate",
    "add_op",
    "join_op",
    "replay",
    "expand_empty_joins",
    "is_induced_subpair",
    "PseudoBlock",
    "PseudoDecomposition",
    "pseudo_decomposition",
    "lemma_inter_builder",
    "construct",
    "chromatic_number",
]


def _norm_sets(sets) -> tuple[tuple[int, ...], ...]:
    out = []
    seen = set()
    for s in sets:
        t = tuple(sorted(int(x) for x in s))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class GraphStableSetPair:
    graph: SimpleGraph
    stable_sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "stable_sets", _norm_sets(self.stable_sets))
        n = self.graph.vertex_count
        for s in self.stable_sets:
            for x in s:
                if not 0 <= x < n:
                    raise VertexRangeError(f"stable set {list(s)} names vertex {x} outside 0..{n - 1}")
            for i, x in enumerate(s):
                if self.graph.adj[x] & set(s[i + 1:]):
                    raise DomainError(f"set {list(s)} is not stable")

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def sizes(self) -> tuple[int, int]:
        return self.graph.vertex_count, len(self.stable_sets)

    def to_json(self) -> dict:
        return {
            "vertices": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges()],
            "stable_sets": [list(s) for s in self.stable_sets],
        }

    @classmethod
    def from_json(cls, d: dict) -> "GraphStableSetPair":
        g = SimpleGraph(int(d["vertices"]), [tuple(e) for e in d["edges"]])
        return cls(g, d["stable_sets"])


def singleton_pair() -> GraphStableSetPair:
    return GraphStableSetPair(SimpleGraph(1), ((0,),))


def _set_index(p: GraphStableSetPair, index: int) -> tuple[int, ...]:
    if not isinstance(index, (int, np.integer)) or not 0 <= index < len(p.stable_sets):
        raise VertexRangeError(f"stable-set index {index} out of range 0..{len(p.stable_sets) - 1}")
    return p.stable_sets[index]


def next_pair(p: GraphStableSetPair) -> GraphStableSetPair:
    """One NEXT step.

    Numbering: the original vertices, then copy ``H_S`` for each set in
    family order, then ``v_{S,T}`` in lexicographic (S, T) order.  The new
    family lists every ``S + T`` before every ``S + {v_{S,T}}``.
    """
    fam = p.stable_sets
    if not fam:
        raise DomainError("NEXT needs a non-empty family")
    n, s = p.vertex_count, len(fam)
    base_edges = p.graph.edges()
    edges = list(base_edges)
    for i in range(s):
        off = n * (i + 1)
        edges.extend((u + off, v + off) for u, v in base_edges)
    hub = n * (s + 1)
    unions, hubs = [], []
    for i, S in enumerate(fam):
        off = n * (i + 1)
        for j, T in enumerate(fam):
            v = hub + i * s + j
            T_copy = [t + off for t in T]
            edges.extend((t, v) for t in T_copy)
            unions.append(list(S) + T_copy)
            hubs.append(list(S) + [v])
    g = SimpleGraph(hub + s * s, edges)
    return GraphStableSetPair(g, unions + hubs)


def next_iterate(k: int, start: GraphStableSetPair | None = None) -> GraphStableSetPair:
    p = singleton_pair() if start is None else start
    for _ in range(k):
        p = next_pair(p)
    return p


def add_op(p: GraphStableSetPair, index: int) -> GraphStableSetPair:
    """New vertex adjacent to exactly the ``index``-th set; its singleton joins the family."""
    S = _set_index(p, index)
    n = p.vertex_count
    g = SimpleGraph(n + 1, p.graph.edges() + [(x, n) for x in S])
    return GraphStableSetPair(g, p.stable_sets + ((n,),))


def join_op(p1: GraphStableSetPair, p2: GraphStableSetPair, index: int | None) -> GraphStableSetPair:
    """Disjoint union, ``p1``'s vertices first.

    ``index`` picks ``S`` in ``p2``'s family: ``S`` is replaced by ``S + S1``
    for every ``S1`` of ``p1``.  ``None`` joins on the empty set, which keeps
    ``p2``'s family and appends ``p1``'s.
    """
    n1 = p1.vertex_count
    edges = p1.graph.edges() + [(u + n1, v + n1) for u, v in p2.graph.edges()]
    g = SimpleGraph(n1 + p2.vertex_count, edges)
    shifted = [tuple(x + n1 for x in s) for s in p2.stable_sets]
    if index is None:
        return GraphStableSetPair(g, shifted + list(p1.stable_sets))
    S = _set_index(p2, index)
    S = tuple(x + n1 for x in S)
    rest = [s for s in shifted if s != S]
    return GraphStableSetPair(g, rest + [S + s1 for s1 in p1.stable_sets])


def induce(p: GraphStableSetPair, vertices: Sequence[int], sets: Sequence[Sequence[int]]):
    """Sub-pair on ``vertices`` (renumbered in the given order); ``sets`` are in
    the parent's ids and must each be a restriction of a parent set."""
    vertices = [int(v) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise DomainError("INDUCE vertices repeat")
    for v in vertices:
        if not 0 <= v < p.vertex_count:
            raise VertexRangeError(f"INDUCE vertex {v} out of range")
    keep = set(vertices)
    restrictions = {tuple(sorted(x for x in s if x in keep)) for s in p.stable_sets}
    pos = {v: i for i, v in enumerate(vertices)}
    out = []
    for s in sets:
        t = tuple(sorted(int(x) for x in s))
        if t not in restrictions:
            raise DomainError(f"set {list(t)} is not the restriction of any set")
        out.append([pos[x] for x in t])
    g, _ = p.graph.induced(vertices)
    return GraphStableSetPair(g, out)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CertNode:
    op: str  # SINGLETON | ADD | JOIN | INDUCE
    children: tuple["CertNode", ...] = ()
    index: int | None = None
    vertices: tuple[int, ...] = ()
    sets: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def singleton(cls) -> "CertNode":
        return cls("SINGLETON")

    @classmethod
    def add(cls, child: "CertNode", index: int) -> "CertNode":
        return cls("ADD", (child,), index)

    @classmethod
    def join(cls, left: "CertNode", right: "CertNode", index: int | None) -> "CertNode":
        return cls("JOIN", (left, right), index)

    @classmethod
    def induce(cls, child: "CertNode", vertices, sets) -> "CertNode":
        return cls("INDUCE", (child,), None, tuple(vertices), tuple(tuple(s) for s in sets))

    def op_count(self) -> int:
        own = 1 if self.op in ("ADD", "JOIN") else 0
        return own + sum(c.op_count() for c in self.children)

    def to_json(self) -> dict:
        if self.op == "SINGLETON":
            return {"op": "SINGLETON"}
        if self.op == "ADD":
            return {"op": "ADD", "set": self.index, "child": self.children[0].to_json()}
        if self.op == "JOIN":
            return {"op": "JOIN", "set": self.index,
                    "left": self.children[0].to_json(), "right": self.children[1].to_json()}
        return {"op": "INDUCE", "vertices": list(self.vertices),
                "sets": [list(s) for s in self.sets], "child": self.children[0].to_json()}

    @classmethod
    def from_json(cls, d: dict, path: str = "root") -> "CertNode":
        try:
            op = d["op"]
            if op == "SINGLETON":
                return cls.singleton()
            if op == "ADD":
                return cls.add(cls.from_json(d["child"], path + ".child"), d["set"])
            if op == "JOIN":
                return cls.join(cls.from_json(d["left"], path + ".left"),
                                cls.from_json(d["right"], path + ".right"), d["set"])
            if op == "INDUCE":
                return cls.induce(cls.from_json(d["child"], path + ".child"),
                                  d["vertices"], d["sets"])
        except (KeyError, TypeError) as exc:
            raise CertificateError(f"malformed node ({exc})", path) from None
        raise CertificateError(f"unknown op {d.get('op')!r}", path)


@dataclass(frozen=True)
class ConstructionCertificate:
    root: CertNode
    claim: GraphStableSetPair
    labels: tuple[int, ...] | None = field(default=None)  # pair vertex -> input vertex

    def to_json(self) -> dict:
        d = {"claim": self.claim.to_json(), "root": self.root.to_json()}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "ConstructionCertificate":
        try:
            claim = GraphStableSetPair.from_json(d["claim"])
            root = CertNode.from_json(d["root"])
        except (KeyError, TypeError) as exc:
            raise CertificateError(f"malformed certificate ({exc})") from None
        labels = d.get("labels")
        return cls(root, claim, None if labels is None else tuple(labels))


def _replay(node: CertNode, path: str) -> tuple[GraphStableSetPair, int]:
    try:
        if node.op == "SINGLETON":
            if node.children:
                raise CertificateError("SINGLETON takes no children", path)
            return singleton_pair(), 0
        if node.op == "ADD":
            child, d = _replay(node.children[0], path + ".child")
            return add_op(child, node.index), d + 1
        if node.op == "JOIN":
            left, dl = _replay(node.children[0], path + ".left")
            right, dr = _replay(node.children[1], path + ".right")
            return join_op(left, right, node.index), dl + dr + 1
        if node.op == "INDUCE":
            child, d = _replay(node.children[0], path + ".child")
            return induce(child, node.vertices, node.sets), d
    except CertificateError:
        raise
    except (DomainError, IndexError) as exc:
        raise CertificateError(str(exc), path) from None
    raise CertificateError(f"unknown op {node.op!r}", path)


def replay(cert: ConstructionCertificate | CertNode) -> tuple[GraphStableSetPair, int]:
    """Evaluate the tree; returns the pair and the number of ADD/JOIN nodes.

    For a full certificate the result must equal the claimed pair.
    """
    if isinstance(cert, CertNode):
        return _replay(cert, "root")
    pair, depth = _replay(cert.root, "root")
    if pair != cert.claim:
        raise CertificateError("replayed pair differs from the claimed pair", "root")
    return pair, depth


def expand_empty_joins(node: CertNode) -> CertNode:
    """Rewrite every empty-set JOIN as ADD a vertex, JOIN on it, drop it again."""
    kids = tuple(expand_empty_joins(c) for c in node.children)
    if node.op != "JOIN" or node.index is not None:
        return CertNode(node.op, kids, node.index, node.vertices, node.sets)
    left, right = kids
    p1, _ = _replay(left, "left")
    p2, _ = _replay(right, "right")
    if not p2.stable_sets:
        raise CertificateError("cannot simulate an empty join when the right family is empty")
    helper = CertNode.add(right, 0)
    joined = CertNode.join(left, helper, len(p2.stable_sets))
    n1 = p1.vertex_count
    v = n1 + p2.vertex_count
    keep = list(range(v))
    sets = [tuple(x + n1 for x in s) for s in p2.stable_sets] + list(p1.stable_sets)
    return CertNode.induce(joined, keep, sets)


# ---------------------------------------------------------------------------
# embeddings


def is_induced_subpair(small: GraphStableSetPair, big: GraphStableSetPair,
                       budget: int | None = 10**6) -> dict[int, int] | None:
    """Induced embedding of ``small`` in ``big`` under which every small set is
    the restriction of some big set; ``None`` if there is none.

    Forward-checking backtracking.  Candidate images are kept as bitsets over
    big vertices, one per unmapped small vertex; for each small set we keep
    the bitset of big sets that agree with it on the vertices mapped so far.
    The vertex with the fewest candidates is mapped next.
    """
    n, N = small.vertex_count, big.vertex_count
    g, h = small.graph, big.graph
    if n > N:
        return None
    everything = (1 << N) - 1
    adj = [sum(1 << y for y in h.adj[x]) for x in range(N)]
    set_bits = [sum(1 << y for y in s) for s in big.stable_sets]
    member = [0] * N  # bitset of big sets containing y
    for j, s in enumerate(big.stable_sets):
        for y in s:
            member[y] |= 1 << j
    small_sets = [frozenset(s) for s in small.stable_sets]
    if small_sets and not big.stable_sets:
        return None
    full = (1 << len(big.stable_sets)) - 1
    nodes = 0

    def support(mask: int) -> tuple[int, int]:
        # vertices lying in some / in every big set of ``mask``
        union, inter = 0, everything
        while mask:
            low = mask & -mask
            j = low.bit_length() - 1
            union |= set_bits[j]
            inter &= set_bits[j]
            mask ^= low
        return union, inter

    def narrow(domains: dict[int, int], masks: tuple[int, ...]) -> dict[int, int] | None:
        bounds = [support(m) for m in masks]
        out = {}
        for w, d in domains.items():
            for k, s in enumerate(small_sets):
                d &= bounds[k][0] if w in s else ~bounds[k][1]
            if not d:
                return None
            out[w] = d
        return out

    def extend(domains: dict[int, int], masks: tuple[int, ...], mapping: dict[int, int]):
        nonlocal nodes
        if not domains:
            return mapping
        v = min(domains, key=lambda w: (bin(domains[w]).count("1"), -g.degree(w), w))
        rest = {w: d for w, d in domains.items() if w != v}
        d = domains[v]
        while d:
            low = d & -d
            x = low.bit_length() - 1
            d ^= low
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"sub-pair search exceeded {budget} nodes")
            mx = member[x]
            new_masks = tuple(m & mx if v in s else m & ~mx for m, s in zip(masks, small_sets))
            if not all(new_masks):
                continue
            near, far = adj[x], ~adj[x] & ~low
            nxt = {w: dw & (near if w in g.adj[v] else far) for w, dw in rest.items()}
            if any(not dw for dw in nxt.values()):
                continue
            nxt = narrow(nxt, new_masks)
            if nxt is None:
                continue
            found = extend(nxt, new_masks, {**mapping, v: x})
            if found is not None:
                return found
        return None

    start = {v: sum(1 << x for x in range(N) if h.degree(x) >= g.degree(v)) for v in range(n)}
    masks = tuple(full for _ in small_sets)
    start = narrow(start, masks)
    if start is None:
        return None
    return extend(start, masks, {})


# ---------------------------------------------------------------------------
# constructions for >=2-subdivisions


@dataclass(frozen=True)
class PseudoBlock:
    vertices: frozenset[int]
    parent_cut: int | None  # None for the root
    base_vertices: tuple[int, ...]


@dataclass(frozen=True)
class PseudoDecomposition:
    root: int
    blocks: tuple[PseudoBlock, ...]  # root pseudo-block first

    def cut_vertices(self) -> set[int]:
        return {b.parent_cut for b in self.blocks if b.parent_cut is not None}


def pseudo_decomposition(h: SimpleGraph) -> PseudoDecomposition:
    """Rooted block decomposition of the base multigraph, lifted to ``h``."""
    from .decision import decide_ge2_subdivisions

    if h.vertex_count == 0 or not is_connected(h):
        raise DomainError("pseudo_decomposition needs a connected, non-empty graph")
    if h.vertex_count == 1:
        return PseudoDecomposition(0, (PseudoBlock(frozenset({0}), None, (0,)),))
    prof = subdivision_base(h)
    if not prof.is_ge(2):
        raise DomainError("graph is not a >=2-subdivision of its base")
    out = decide_ge2_subdivisions(prof.base)
    if not out.answer:
        raise DomainError("no >=2-subdivision of the base multigraph is a restricted frame graph "
                          f"({out.evidence.kind})")

    def lift(blk):
        vs = set()
        for e in blk.edge_ids:
            vs.update(prof.path_map[e])
        return frozenset(vs)

    bm = prof.branch_map
    root_blk = out.evidence.blocks[0]
    r = bm[out.evidence.vertices[0]]
    blocks = [PseudoBlock(lift(root_blk), None, tuple(bm[v] for v in root_blk.vertex_map))]
    for blk, c in out.trace:
        blocks.append(PseudoBlock(lift(blk), bm[c], tuple(bm[v] for v in blk.vertex_map)))
    dec = PseudoDecomposition(r, tuple(blocks))
    dist = _bfs_distances(h, r)
    for c in dec.cut_vertices():
        if c != r and dist[c] < 3:
            raise DomainError(f"cut-vertex {c} is within distance 2 of the root {r}")
    return dec


def _bfs_distances(h: SimpleGraph, s: int) -> dict[int, int]:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for w in h.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


@dataclass
class _Built:
    """A certificate node together with the input-graph vertex of each pair vertex."""

    node: CertNode | None  # None: the empty pair
    labels: list[int]
    sets: list[tuple[int, ...]]  # family in input-graph ids, in family order

    def set_index(self, members: Sequence[int]) -> int:
        return self.sets.index(tuple(sorted(members)))


def _empty() -> _Built:
    return _Built(None, [], [])


def _tree_pair(h: SimpleGraph, vertices: set[int]) -> _Built:
    """ADD sequence building the (connected) induced tree with all singletons."""
    if not vertices:
        return _empty()
    root = min(vertices)
    b = _Built(CertNode.singleton(), [root], [(root,)])
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in sorted(h.adj[v] & vertices):
                if w in seen:
                    continue
                seen.add(w)
                b = _add(b, (v,), w)
                nxt.append(w)
        frontier = nxt
    if seen != vertices:
        raise DomainError("expected a connected tree")
    return b


def _add(b: _Built, members: Sequence[int], new: int) -> _Built:
    idx = b.set_index(members)
    return _Built(CertNode.add(b.node, idx), b.labels + [new], b.sets + [(new,)])


def _join(b1: _Built, b2: _Built, members: Sequence[int] | None) -> _Built:
    if members is None:
        if b1.node is None:
            return b2
        if b2.node is None:
            return b1
        return _Built(CertNode.join(b1.node, b2.node, None), b1.labels + b2.labels,
                      list(dict.fromkeys(b2.sets + b1.sets)))
    idx = b2.set_index(members)
    S = b2.sets[idx]
    rest = [s for s in b2.sets if s != S]
    joined = [tuple(sorted(S + s1)) for s1 in b1.sets]
    if b1.node is None:
        raise DomainError("cannot join an empty pair on a set")
    return _Built(CertNode.join(b1.node, b2.node, idx), b1.labels + b2.labels,
                  list(dict.fromkeys(rest + joined)))


def _children(block: PseudoBlock, blocks: Sequence[PseudoBlock]) -> list[PseudoBlock]:
    return [c for c in blocks
            if c is not block and c.parent_cut is not None
            and c.parent_cut in block.vertices and c.parent_cut != block.parent_cut]


def _inter(h: SimpleGraph, block: PseudoBlock, r: int, blocks: Sequence[PseudoBlock]) -> _Built:
    """Pair on (the piece rooted at ``block``) - N[r] with {v} for every v at
    distance 2 from r, following the induction on pseudo-blocks."""
    kids = _children(block, blocks)
    built = _tree_pair(h, set(block.vertices) - h.adj[r] - {r})
    for s in sorted({c.parent_cut for c in kids} - {r}):
        below = [c for c in kids if c.parent_cut == s]
        built = _join(_hanging(h, below, s, blocks), built, (s,))
        for c in below:
            for w in sorted(h.adj[s] & c.vertices):
                (u,) = h.adj[w] - {s}
                built = _add(built, (s, u), w)
    at_root = [c for c in kids if c.parent_cut == r]
    if at_root:
        built = _join(_hanging(h, at_root, r, blocks), built, None)
    return built


def _hanging(h: SimpleGraph, below: Sequence[PseudoBlock], s: int,
             blocks: Sequence[PseudoBlock]) -> _Built:
    built = _empty()
    for c in sorted(below, key=lambda b: min(b.vertices - {s})):
        built = _join(_inter(h, c, s, blocks), built, None)
    return built


def _check_input(h: SimpleGraph) -> None:
    if not is_triangle_free(h):
        raise DomainError("graph has a triangle, so it cannot be constructible")


def lemma_inter_builder(h: SimpleGraph, r: int | None = None) -> ConstructionCertificate:
    """Certificate for ``h - N[r]`` whose family holds {v} for every v at distance 2 from r."""
    _check_input(h)
    dec = pseudo_decomposition(h)
    if r is not None and r != dec.root:
        raise DomainError(f"{r} is not the root of the pseudo-decomposition (root is {dec.root})")
    built = _inter(h, dec.blocks[0], dec.root, dec.blocks)
    return _certificate(built)


def _certificate(built: _Built) -> ConstructionCertificate:
    node = built.node
    if node is None:
        node = CertNode.induce(CertNode.singleton(), [], [])
    pair, _ = _replay(node, "root")
    return ConstructionCertificate(node, pair, tuple(built.labels))


def _construct_connected(h: SimpleGraph, vertices: set[int]) -> _Built:
    sub, labels = h.induced(sorted(vertices))
    if sub.edge_count == sub.vertex_count - 1:
        # trees need no decomposition, whatever their subdivision counts
        return _tree_pair(h, vertices)
    dec = pseudo_decomposition(sub)
    r = dec.root
    built = _inter(sub, dec.blocks[0], r, dec.blocks)
    built = _join(built, _Built(CertNode.singleton(), [r], [(r,)]), (r,))
    for w in sorted(sub.adj[r]):
        (u,) = sub.adj[w] - {r}
        built = _add(built, (r, u), w)
    return _Built(built.node, [labels[x] for x in built.labels],
                  [tuple(sorted(labels[x] for x in s)) for s in built.sets])


def construct(h: SimpleGraph) -> ConstructionCertificate:
    """Certificate whose replay is ``h`` (vertex ``i`` of the pair is ``labels[i]``)."""
    _check_input(h)
    if h.vertex_count == 0:
        raise DomainError("empty graph")
    built = _empty()
    for comp in components(h):
        built = _join(_construct_connected(h, set(comp)), built, None)
    return _certificate(built)


# ---------------------------------------------------------------------------
# chromatic number


def _csr(g: SimpleGraph):
    n = g.vertex_count
    ptr = np.zeros(n + 1, np.int64)
    for v in range(n):
        ptr[v + 1] = ptr[v] + len(g.adj[v])
    nbr = np.empty(ptr[-1], np.int64)
    for v in range(n):
        nbr[ptr[v]:ptr[v + 1]] = sorted(g.adj[v])
    return ptr, nbr


def _greedy_clique(g: SimpleGraph) -> int:
    best = 1 if g.vertex_count else 0
    for v in range(g.vertex_count):
        clique = [v]
        cand = set(g.adj[v])
        while cand:
            w = max(cand, key=lambda x: (len(g.adj[x] & cand), -x))
            clique.append(w)
            cand &= g.adj[w]
        best = max(best, len(clique))
    return best


def chromatic_number(g: SimpleGraph, budget: int = 10**8) -> int:
    """Exact chromatic number by DSATUR backtracking for k = lower, lower+1, ...

    ``budget`` caps the search nodes of each k-colorability test; running
    out raises :class:`BudgetExceeded` with the (lower, upper) bounds known.
    """
    n = g.vertex_count
    if n == 0:
        return 0
    ptr, nbr = _csr(g)
    lower = _greedy_clique(g)
    upper = n
    colors = np.empty(n, np.int64)
    k = lower
    while k < upper:
        res = _kernels.k_colorable(ptr, nbr, k, budget, colors)
        if res == 1:
            return k
        if res == -1:
            raise BudgetExceeded(f"{k}-colorability undecided within {budget} nodes", (k, upper))
        k += 1
    return upper
