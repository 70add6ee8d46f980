"""Deciding whether the >=2-subdivisions of a multigraph are restricted frame graphs.

The fast path works on flat arrays (block labels, incidence lists) and runs
in linear time; :func:`decide_bruteforce` recomputes everything from scratch
with quadratic-ish code and serves as its oracle.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import DomainError
from .graph import (
    Block,
    Multigraph,
    SimpleGraph,
    block_arrays,
    full_star_cutset_centers,
    is_connected,
    is_feedback_vertex,
    is_forest,
    is_triangle_free,
    make_block,
    recognize_shape,
    subdivide,
)

__all__ = [
    "DecisionOutcome",
    "ScottStatus",
    "K4Status",
    "K4_EDGES",
    "feedback_vertex_2connected",
    "feedback_vertices_bruteforce",
    "decide_ge2_subdivisions",
    "decide_bruteforce",
    "classify_scott",
    "k4_status",
    "k4_profile_graph",
    "hhat_fixtures",
    "check_evidence",
]


def _is_two_connected_block(b: Multigraph) -> bool:
    n = b.vertex_count
    if n == 1:
        return b.edge_count <= 1 and all(u == v for u, v in b.edge_list())
    if any(u == v for u, v in b.edge_list()) or not is_connected(b):
        return False
    if n == 2:
        return True
    return all(is_connected(b.remove_vertex(v)) for v in range(n))


def feedback_vertex_2connected(b: Multigraph) -> int | None:
    """A feedback vertex of a 2-connected multigraph, or ``None``.

    A cycle is found by depth-first search and one ear of it is located; a
    feedback vertex must lie on all three cycles of the resulting theta, so
    only the two ear endpoints need testing.
    """
    if not _is_two_connected_block(b):
        raise DomainError("feedback_vertex_2connected needs a 2-connected multigraph, "
                          "a single edge or a single loop")
    return _block_feedback_vertex(b)


def _block_feedback_vertex(b: Multigraph) -> int | None:
    n = b.vertex_count
    if n == 1 or b.edge_count <= n:
        return 0
    eu = np.ascontiguousarray(b.edges[:, 0])
    ev = np.ascontiguousarray(b.edges[:, 1])
    x, y = _kernels.ear_endpoints(n, eu, ev)
    for cand in (x, y):
        if cand >= 0 and _kernels.is_forest_without(n, eu, ev, cand):
            return int(cand)
    return None


def feedback_vertices_bruteforce(b: Multigraph) -> set[int]:
    return {v for v in range(b.vertex_count) if is_feedback_vertex(b, v)}


# ---------------------------------------------------------------------------
# the decision procedure


class Evidence:
    """Why the decision came out the way it did.

    ``blocks`` are materialized on first access; the decision itself only
    keeps block indices.
    """

    def __init__(self, kind: str, blocks=(), vertices=(), *, source=None, block_ids=()):
        self.kind = kind  # FeedbackVertex | SingleBlockNoFeedback | TwoBadLeaves
        self.vertices = tuple(vertices)  # feedback vertex, or the two parent cut-vertices
        self._blocks = tuple(blocks) if blocks else None
        self._source = source
        self.block_ids = tuple(block_ids)

    @property
    def blocks(self) -> tuple[Block, ...]:
        if self._blocks is None:
            g, a = self._source
            self._blocks = tuple(_block_from_arrays(g, a, b) for b in self.block_ids)
        return self._blocks

    def __repr__(self):
        return f"Evidence({self.kind!r}, vertices={self.vertices!r})"

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "FeedbackVertex":
            d["block"] = _block_json(self.blocks[0])
            d["vertex"] = self.vertices[0]
        elif self.kind == "SingleBlockNoFeedback":
            d["block"] = _block_json(self.blocks[0])
        else:
            d["block1"] = _block_json(self.blocks[0])
            d["cut1"] = self.vertices[0]
            d["block2"] = _block_json(self.blocks[1])
            d["cut2"] = self.vertices[1]
        return d


def _block_json(b: Block) -> dict:
    return {"vertices": list(b.vertex_map), "edges": list(b.edge_ids)}


@dataclass
class DecisionOutcome:
    """Answer, pruning trace and evidence.

    ``trace`` is materialized lazily since the fast path keeps it as arrays.
    """

    answer: bool
    evidence: Evidence
    graph: Multigraph = field(repr=False)
    _arrays: dict = field(repr=False, default=None)
    _trace_blocks: np.ndarray = field(repr=False, default=None)
    _trace_cuts: np.ndarray = field(repr=False, default=None)

    @cached_property
    def trace(self) -> list[tuple[Block, int]]:
        return [(_block_from_arrays(self.graph, self._arrays, int(b)), int(c))
                for b, c in zip(self._trace_blocks.tolist(), self._trace_cuts.tolist())]

    @property
    def trace_length(self) -> int:
        return int(self._trace_blocks.shape[0])

    def to_json(self) -> dict:
        return {
            "answer": "yes" if self.answer else "no",
            "trace": [{"block": _block_json(b), "cut_vertex": c} for b, c in self.trace],
            "evidence": self.evidence.to_json(),
        }


def _block_from_arrays(g: Multigraph, a: dict, b: int) -> Block:
    bptr = a["bptr"]
    verts = a["inc_vertex"][bptr[b]:bptr[b + 1]]
    edges, eptr = a["eorder"], a["eptr"]
    return make_block(g, verts.tolist(), edges[eptr[b]:eptr[b + 1]].tolist())


def decide_ge2_subdivisions(g: Multigraph, order=None) -> DecisionOutcome:
    """Are all >=2-subdivisions of the connected multigraph ``g`` restricted frame graphs?

    Leaf blocks are deleted while their parent cut-vertex is a feedback
    vertex of the leaf; the answer is yes iff a single block survives and it
    has a feedback vertex.  ``order`` optionally permutes the initial leaf
    queue (the result does not depend on it).
    """
    if g.vertex_count == 0:
        raise DomainError("empty graph")
    a = block_arrays(g)
    if a["ncomp"] != 1:
        raise DomainError("decide needs a connected multigraph; split it into components first")
    nb = a["nb"]
    if order is None:
        order = np.arange(nb, dtype=np.int64)
    else:
        order = np.asarray(order, dtype=np.int64)
    alive, tb, tc, active = _kernels.prune_leaf_blocks(
        nb, a["bptr"], a["inc_vertex"], a["eends"], a["eptr"], a["vptr"], a["vinc"],
        a["inc_block"], a["block_loop"], order)
    survivors = np.nonzero(alive)[0]
    out = DecisionOutcome(False, None, g, a, tb, tc)
    src = (g, a)
    if survivors.size == 1:
        b = int(survivors[0])
        fv = _surviving_block_feedback_vertex(a, b)
        if fv is None:
            out.evidence = Evidence("SingleBlockNoFeedback", source=src, block_ids=(b,))
        else:
            out.answer = True
            out.evidence = Evidence("FeedbackVertex", vertices=(fv,), source=src, block_ids=(b,))
        return out
    leaves = []
    bptr, inc_vertex = a["bptr"], a["inc_vertex"]
    for b in survivors.tolist():
        verts = inc_vertex[bptr[b]:bptr[b + 1]]
        cuts = verts[active[verts] >= 2]
        if cuts.size == 1:
            leaves.append((b, int(cuts[0])))
        if len(leaves) == 2:
            break
    (b1, c1), (b2, c2) = leaves
    out.evidence = Evidence("TwoBadLeaves", vertices=(c1, c2), source=src, block_ids=(b1, b2))
    return out


def _surviving_block_feedback_vertex(a: dict, b: int) -> int | None:
    # works on the whole-graph arrays; in a 2-connected block x is a feedback
    # vertex iff deleting it leaves a tree, i.e. e(B) - deg_B(x) == v(B) - 2
    lo, hi = a["bptr"][b], a["bptr"][b + 1]
    verts = a["inc_vertex"][lo:hi]
    nv = hi - lo
    ne = int(a["block_edges"][b])
    if nv == 1 or ne <= nv:
        return int(verts.min())
    x, y = _kernels.ear_in_block(a["indptr"], a["adj"], a["label"], b, int(verts[0]))
    for cand in (x, y):
        if cand < 0:
            continue
        ends = a["eends"][a["eptr"][b]:a["eptr"][b + 1]]
        deg = int(np.count_nonzero(ends == cand))
        if ne - deg == nv - 2:
            return int(cand)
    return None


def _blocks_bruteforce(g: Multigraph) -> list[tuple[set[int], list[int]]]:
    """Blocks as (vertex set, edge ids) using separation by single vertices.

    Two non-loop edges share a block iff no vertex removal separates them.
    """
    n = g.vertex_count
    edges = g.edge_list()
    adj = [[] for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)

    def comp_ids(removed):
        cid = [-1] * n
        k = 0
        for s in range(n):
            if s == removed or cid[s] != -1:
                continue
            cid[s] = k
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y != removed and cid[y] == -1:
                        cid[y] = k
                        stack.append(y)
            k += 1
        return cid

    comps = [comp_ids(x) for x in range(n)]
    groups: dict[tuple, list[int]] = {}
    blocks = []
    for e, (u, v) in enumerate(edges):
        if u == v:
            blocks.append(({u}, [e]))
            continue
        sig = tuple(comps[x][u if u != x else v] for x in range(n))
        groups.setdefault(sig, []).append(e)
    for es in groups.values():
        vs = set()
        for e in es:
            vs.update(edges[e])
        blocks.append((vs, es))
    if not edges:
        blocks.append(({0}, []))
    return blocks


def decide_bruteforce(g: Multigraph, rng: random.Random | None = None) -> bool:
    """Same pruning rule, recomputed naively; leaves are visited in random order."""
    if g.vertex_count == 0 or not is_connected(g):
        raise DomainError("decide needs a connected multigraph")
    rng = rng or random.Random(0)
    blocks = []
    for vs, es in _blocks_bruteforce(g):
        blocks.append(make_block(g, sorted(vs), es))
    alive = set(range(len(blocks)))
    while True:
        count: dict[int, int] = {}
        for b in alive:
            for v in blocks[b].vertex_map:
                count[v] = count.get(v, 0) + 1
        leaves = []
        for b in alive:
            cuts = [v for v in blocks[b].vertex_map if count[v] >= 2]
            if len(cuts) == 1:
                leaves.append((b, cuts[0]))
        rng.shuffle(leaves)
        for b, c in leaves:
            blk = blocks[b]
            if blk.vertex_map.index(c) in feedback_vertices_bruteforce(blk.graph):
                alive.discard(b)
                break
        else:
            break
    if len(alive) != 1:
        return False
    (b,) = alive
    return bool(feedback_vertices_bruteforce(blocks[b].graph))


def check_evidence(outcome: DecisionOutcome) -> bool:
    """Re-verify an outcome's evidence with independent brute-force checks."""
    ev = outcome.evidence
    if ev.kind == "FeedbackVertex":
        blk = ev.blocks[0]
        return outcome.answer and is_feedback_vertex(blk.graph, blk.vertex_map.index(ev.vertices[0]))
    if outcome.answer:
        return False
    if ev.kind == "SingleBlockNoFeedback":
        blk = ev.blocks[0].graph
        return _is_two_connected_block(blk) and not feedback_vertices_bruteforce(blk)
    for blk, c in zip(ev.blocks, ev.vertices):
        if c not in blk.vertex_map or not _is_two_connected_block(blk.graph):
            return False
        # a cycle avoiding the parent cut-vertex
        if is_forest(blk.graph.remove_vertex(blk.vertex_map.index(c))):
            return False
    return True


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ScottStatus:
    status: str  # Counterexample | RepresentableFamily | NotDecidedByTheorem
    detail: str | None = None

    def to_json(self) -> dict:
        d = {"status": self.status}
        if self.detail is not None:
            d["detail"] = self.detail
        return d


def classify_scott(h: SimpleGraph) -> ScottStatus:
    """Counterexample status of a graph via the full star-cutset theorem."""
    if h.vertex_count == 0 or not is_connected(h):
        return ScottStatus("NotDecidedByTheorem", "Disconnected")
    if not is_triangle_free(h):
        return ScottStatus("NotDecidedByTheorem", "HasTriangle")
    if full_star_cutset_centers(h):
        return ScottStatus("NotDecidedByTheorem", "HasFullStarCutset")
    shape = recognize_shape(h)
    if shape.kind in ("PathAtMost4", "LuxuryChandelier"):
        return ScottStatus("RepresentableFamily", shape.kind)
    return ScottStatus("Counterexample")


# K4 edges grouped as three perfect matchings: {01, 23}, {02, 13}, {03, 12}
K4_EDGES = ((0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2))
K4_TRIANGLES = tuple(tuple(i for i, e in enumerate(K4_EDGES) if set(e) <= set(t))
                     for t in itertools.combinations(range(4), 3))


@dataclass(frozen=True)
class K4Status:
    status: str  # ContainsTriangle | RestrictedFrameGraph | NotRestrictedFrameGraph
    type: int

    def to_json(self) -> dict:
        return {"status": self.status, "type": self.type}


def k4_profile_graph(profile) -> Multigraph:
    return Multigraph(4, K4_EDGES)


def k4_status(profile) -> K4Status:
    """Classify the subdivision of K4 with ``profile[i]`` vertices on ``K4_EDGES[i]``."""
    profile = tuple(int(c) for c in profile)
    if len(profile) != 6 or any(c < 0 for c in profile):
        raise DomainError("a K4 profile has six non-negative counts")
    typ = sum(1 for c in profile if c > 0)
    if any(all(profile[i] == 0 for i in tri) for tri in K4_TRIANGLES):
        return K4Status("ContainsTriangle", typ)
    if typ <= 3:
        return K4Status("RestrictedFrameGraph", typ)
    if typ == 4:
        plain = [K4_EDGES[i] for i, c in enumerate(profile) if c == 0]
        if set(plain[0]) & set(plain[1]):
            return K4Status("RestrictedFrameGraph", typ)
    return K4Status("NotRestrictedFrameGraph", typ)


def k4_subdivision(profile):
    return subdivide(Multigraph(4, K4_EDGES), profile)


def hhat_fixtures() -> tuple[Multigraph, Multigraph]:
    """The two digon-plus-apex gadgets glued at a shared apex / along an edge.

    Reconstructed from their structural description: each has two vertex
    disjoint digons whose vertices are not cut-vertices.
    """
    h1 = Multigraph(5, [(0, 1), (0, 2), (1, 2), (1, 2), (0, 3), (0, 4), (3, 4), (3, 4)])
    h2 = Multigraph(6, [(0, 1), (0, 2), (1, 2), (1, 2), (3, 4), (3, 5), (4, 5), (4, 5), (0, 3)])
    return h1, h2
