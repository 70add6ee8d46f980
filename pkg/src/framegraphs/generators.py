"""Named graphs and random instances used by tests, benchmarks and the CLI."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Multigraph, SimpleGraph


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def cycle_multigraph(n: int) -> Multigraph:
    if n == 1:
        return Multigraph(1, [(0, 0)])
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def k4() -> Multigraph:
    return Multigraph(4, list(itertools.combinations(range(4), 2)))


def prism() -> Multigraph:
    return Multigraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def bowtie() -> Multigraph:
    """Two triangles sharing vertex 0."""
    return Multigraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def theta(paths: int = 3) -> Multigraph:
    return Multigraph(2, [(0, 1)] * paths)


def digon() -> Multigraph:
    return theta(2)


def digon_chain() -> Multigraph:
    """a=0, b=1, c=2, d=3 with a-b doubled, b-c single, c-d doubled."""
    return Multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    return [(int(rng.integers(0, i)), i) for i in range(1, n)]


def random_tree(n: int, rng: np.random.Generator) -> SimpleGraph:
    return SimpleGraph(n, random_tree_edges(n, rng))


def random_connected_multigraph(n: int, m: int, rng: np.random.Generator,
                                loops: bool = True) -> Multigraph:
    """A random spanning tree plus ``m - (n - 1)`` uniform extra edges."""
    if n == 1 and not loops:
        return Multigraph(1, [])
    m = max(m, n - 1)
    tree_v = np.arange(1, n, dtype=np.int64)
    tree_u = (rng.random(n - 1) * tree_v).astype(np.int64)
    extra = m - (n - 1)
    a = rng.integers(0, n, extra)
    b = rng.integers(0, n, extra)
    if not loops and extra:
        same = a == b
        b[same] = (b[same] + 1 + rng.integers(0, max(n - 1, 1), int(same.sum()))) % n
    u = np.concatenate((tree_u, a))
    v = np.concatenate((tree_v, b))
    perm = rng.permutation(n)
    edges = np.stack((perm[u], perm[v]), axis=1)
    return Multigraph(n, edges[rng.permutation(len(edges))])


def relabel(g: Multigraph, perm) -> Multigraph:
    perm = np.asarray(perm, dtype=np.int64)
    return Multigraph(g.vertex_count, perm[g.edges] if g.edge_count else [])
