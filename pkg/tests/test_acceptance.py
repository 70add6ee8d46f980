"""Acceptance checks, one test (or a small group) per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints a
PASS/FAIL line per criterion.  Frozen reference values were produced by the
oracles in ``oracles.py`` or by hand.
"""

import itertools
import random
import time

import networkx as nx
import numpy as np
import pytest

import oracles
from framegraphs import generators as gen
from framegraphs import io
from framegraphs.burling import (
    CertNode,
    ConstructionCertificate,
    GraphStableSetPair,
    chromatic_number,
    construct,
    is_induced_subpair,
    next_iterate,
    replay,
)
from framegraphs.decision import (
    K4_EDGES,
    decide_bruteforce,
    decide_ge2_subdivisions,
    hhat_fixtures,
    k4_status,
)
from framegraphs.frames import (
    Frame,
    FrameRepresentation,
    add_pendant_path,
    add_twin,
    big_vertices,
    build_chandelier,
    build_ge2_subdivision,
    build_k4_subdivision,
    build_tree,
    cycle_lemma_violations,
    glue_chandelier,
    insert_path,
    intersection_graph,
    path_corollary_violations,
    path_lemma_violations,
    validate,
)
from framegraphs.graph import (
    Multigraph,
    SimpleGraph,
    chandelier_pivots,
    format_multigraph,
    full_star_cutset_centers,
    induced_cycles,
    is_path,
    is_tree,
    is_triangle_free,
    parse_multigraph,
    subdivide,
)

# ---------------------------------------------------------------------------
# 1. decision vs brute force


@pytest.mark.criterion(1)
@pytest.mark.slow
def test_c1_decision_matches_bruteforce():
    start = time.perf_counter()
    graphs = list(oracles.connected_multigraphs(5, 8))
    assert len(graphs) == 3300  # classes with <= 5 vertices, <= 8 edges, loops allowed
    rng = random.Random(1)
    mismatches = [g for g in graphs if decide_ge2_subdivisions(g).answer != decide_bruteforce(g, rng)]
    assert not mismatches, mismatches[:3]

    nrng = np.random.default_rng(2)
    yes = 0
    for _ in range(100_000):
        n = int(nrng.integers(1, 13))
        m = n - 1 + int(nrng.integers(0, 9))
        g = gen.random_connected_multigraph(n, m, nrng)
        a = decide_ge2_subdivisions(g).answer
        assert a == decide_bruteforce(g, rng), g
        yes += a
    # both answers are well represented in the sample
    assert 20_000 < yes < 80_000
    assert time.perf_counter() - start < 300


# ---------------------------------------------------------------------------
# 2. named fixtures


def _timed_answer(g):
    t = time.perf_counter()
    ans = decide_ge2_subdivisions(g).answer
    assert time.perf_counter() - t < 1.0
    return ans


@pytest.mark.criterion(2)
def test_c2_reference_fixtures():
    decide_ge2_subdivisions(gen.k4())  # compile outside the timed calls
    h1, h2 = hhat_fixtures()
    assert _timed_answer(gen.k4()) is False
    assert _timed_answer(h1) is False
    assert _timed_answer(h2) is False
    assert _timed_answer(gen.prism()) is False
    for n in range(1, 12):
        assert _timed_answer(gen.cycle_multigraph(n)) is True
    assert _timed_answer(gen.bowtie()) is True
    assert _timed_answer(gen.theta()) is True


# ---------------------------------------------------------------------------
# 3. running time


def _best_time(g, reps):
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        decide_ge2_subdivisions(g)
        best = min(best, time.perf_counter() - t)
    return best


@pytest.mark.criterion(3)
@pytest.mark.slow
def test_c3_linear_time():
    rng = np.random.default_rng(7)
    sizes = np.unique(np.logspace(3, 6, 10).astype(int))
    times = []
    for m in sizes:
        g = gen.random_connected_multigraph(int(m) // 2, int(m), rng)
        decide_ge2_subdivisions(g)
        times.append(_best_time(g, 5 if m < 10**5 else 3))
    slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
    print(f"decide: {times[-1]:.3f}s at {sizes[-1]} edges, fit exponent {slope:.3f}")
    assert times[-1] < 2.0
    assert slope <= 1.15


# ---------------------------------------------------------------------------
# 4. representation pipeline


def _yes_fixtures():
    fixed = [
        gen.cycle_multigraph(1), gen.cycle_multigraph(2), gen.cycle_multigraph(3),
        gen.cycle_multigraph(5), gen.digon(), gen.theta(3), gen.theta(4), gen.bowtie(),
        gen.complete_bipartite(2, 3), gen.digon_chain(),
        Multigraph(1, [(0, 0), (0, 0)]),
        Multigraph(4, [(0, 1), (1, 2), (2, 3)]),
        Multigraph(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4)]),
        Multigraph(5, [(0, 1), (0, 1), (0, 2), (0, 3), (3, 4), (3, 4), (4, 4)]),
    ]
    rng = np.random.default_rng(11)
    extra = []
    while len(extra) < 16:
        n = int(rng.integers(2, 11))
        g = gen.random_connected_multigraph(n, n - 1 + int(rng.integers(0, 5)), rng)
        if decide_ge2_subdivisions(g).answer:
            extra.append(g)
    return fixed + extra


@pytest.mark.criterion(4)
def test_c4_representation_pipeline():
    start = time.perf_counter()
    fixtures = _yes_fixtures()
    assert len(fixtures) >= 20
    rng = np.random.default_rng(3)
    built = 0
    for g in fixtures:
        for counts in (2, 3, list(rng.integers(2, 4, g.edge_count))):
            rep = build_ge2_subdivision(g, counts)
            assert validate(rep) == [], (g, counts)
            want = subdivide(g, counts).realized
            got = intersection_graph(rep.frames)
            assert got == want
            assert oracles.isomorphic(got, want)
            built += 1
    assert built >= 60
    assert time.perf_counter() - start < 60


# ---------------------------------------------------------------------------
# 5. K4 subdivisions


def _k4_status_reference(profile):
    h = oracles.to_nx(subdivide(Multigraph(4, K4_EDGES), profile).realized)
    typ = sum(1 for c in profile if c)
    if sum(nx.triangles(h).values()):
        return "ContainsTriangle", typ
    if typ <= 3:
        return "RestrictedFrameGraph", typ
    if typ == 4:
        a, b = [K4_EDGES[i] for i, c in enumerate(profile) if c == 0]
        if set(a) & set(b):
            return "RestrictedFrameGraph", typ
    return "NotRestrictedFrameGraph", typ


@pytest.mark.criterion(5)
@pytest.mark.slow
def test_c5_k4_gallery():
    start = time.perf_counter()
    representable = 0
    for profile in itertools.product(range(3), repeat=6):
        st = k4_status(profile)
        assert (st.status, st.type) == _k4_status_reference(profile), profile
        if st.status != "RestrictedFrameGraph":
            continue
        rep = build_k4_subdivision(profile)
        assert validate(rep) == [], profile
        assert intersection_graph(rep.frames) == subdivide(Multigraph(4, K4_EDGES), profile).realized
        representable += 1
    assert representable == 332
    assert time.perf_counter() - start < 300


# ---------------------------------------------------------------------------
# 6. lemma suites on representations


def _random_chandelier(rng, n):
    t = gen.random_tree(n, rng)
    leaves = [v for v in range(n) if t.degree(v) == 1]
    return SimpleGraph(n + 1, t.edges() + [(n, x) for x in leaves]), n


def lemma_fixtures():
    rng = np.random.default_rng(5)
    reps = []
    for n in (1, 2, 5, 9, 15):
        reps.append(build_tree(gen.random_tree(n, rng)))
    for n in range(4, 16):
        reps.append(build_chandelier(gen.cycle_graph(n)))
    for n in (3, 6, 9, 12, 14):
        h, pivot = _random_chandelier(rng, n)
        reps.append(build_chandelier(h, pivot))
    c5 = build_chandelier(gen.cycle_graph(5))
    reps.append(add_twin(c5, 0))
    reps.append(add_twin(build_chandelier(gen.cycle_graph(4)), 1))
    reps.append(glue_chandelier(c5, 2, gen.cycle_graph(5)))
    reps.append(glue_chandelier(glue_chandelier(c5, 0, gen.cycle_graph(4)), 6, gen.cycle_graph(4)))
    reps.append(add_pendant_path(build_chandelier(gen.cycle_graph(6)), 3, 3))
    reps.append(add_pendant_path(add_pendant_path(c5, 1, 2), 1, 2))
    reps.append(insert_path(build_chandelier(gen.cycle_graph(4)), (1, 2), 2))
    for g in (gen.digon(), gen.theta(3), gen.cycle_multigraph(3), gen.digon_chain()):
        rep = build_ge2_subdivision(g, 2)
        if rep.target.vertex_count <= 15:
            reps.append(rep)
    representable = [p for p in itertools.product(range(3), repeat=6)
                     if k4_status(p).status == "RestrictedFrameGraph"]
    for profile in representable[::25]:
        reps.append(build_k4_subdivision(profile))
    return reps


@pytest.mark.criterion(6)
def test_c6_lemma_suites():
    reps = lemma_fixtures()
    assert len(reps) >= 35
    checked_38 = 0
    for rep in reps:
        g = rep.target
        assert g.vertex_count <= 15
        assert validate(rep) == []
        assert path_lemma_violations(rep) == []
        assert path_corollary_violations(rep) == []
        cycles = induced_cycles(g)
        assert cycle_lemma_violations(rep, cycles) == []
        h = oracles.to_nx(g)
        if nx.is_connected(h) and is_triangle_free(g) and not oracles.has_full_star_cutset(h):
            big = big_vertices(rep, cycles)
            assert len(big) <= 2
            assert all(g.has_edge(u, v) for u, v in itertools.combinations(big, 2))
            checked_38 += 1
    assert checked_38 >= 10


# ---------------------------------------------------------------------------
# 7. star-cutset observations


@pytest.fixture(scope="module")
def triangle_free_8():
    graphs = oracles.connected_triangle_free(8)
    assert len(graphs) == 1 + 1 + 1 + 3 + 6 + 19 + 59 + 267
    return graphs


def _small_path(g):
    return is_path(g) and g.vertex_count <= 4


@pytest.mark.criterion(7)
def test_c7_observations(triangle_free_8):
    start = time.perf_counter()
    for g in triangle_free_8:
        h = oracles.to_nx(g)
        no_fsc = not full_star_cutset_centers(g)
        assert no_fsc == (not oracles.has_full_star_cutset(h))
        # trees and chandeliers
        if is_tree(g):
            assert no_fsc == _small_path(g), g
        kinds = {lux for _, lux in chandelier_pivots(g)}
        assert kinds == oracles.chandelier_kinds(h)
        if kinds:
            assert no_fsc == (True in kinds), g
        if not no_fsc:
            continue
        # no cut-vertex of degree >= 3; minimum degree >= 2 off small paths
        for v in nx.articulation_points(h):
            assert h.degree(v) < 3, (g, v)
        if not _small_path(g):
            assert min(d for _, d in h.degree()) >= 2, g
            # subdividing any single edge keeps the property
            base = g.to_multigraph()
            for e in range(base.edge_count):
                counts = [0] * base.edge_count
                counts[e] = 1
                assert not full_star_cutset_centers(subdivide(base, counts).realized), (g, e)
    assert time.perf_counter() - start < 600


# ---------------------------------------------------------------------------
# 8. the NEXT iteration


def _stable_in(g: SimpleGraph, s) -> bool:
    return all(not g.has_edge(a, b) for a, b in itertools.combinations(s, 2))


def _triangle_free_scan(g: SimpleGraph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


@pytest.mark.criterion(8)
@pytest.mark.slow
def test_c8_next_quantities():
    sizes = [next_iterate(k).sizes() for k in range(5)]
    assert sizes[:4] == [(1, 1), (3, 2), (13, 8), (181, 128)]
    assert sizes[4] == (39733, 32768)
    for k in range(4):
        p = next_iterate(k)
        assert all(_stable_in(p.graph, s) for s in p.stable_sets)
    p4 = next_iterate(4)
    assert _triangle_free_scan(p4.graph)
    assert all(_stable_in(p4.graph, s) for s in p4.stable_sets[::97])
    chis = [chromatic_number(next_iterate(k).graph, 10**8) for k in range(4)]
    assert chis == [1, 2, 3, 4]
    assert all(a < b for a, b in zip(chis, chis[1:]))


# ---------------------------------------------------------------------------
# 9. construction certificates


def certificates(k):
    """Every certificate with exactly ``k`` ADD/JOIN nodes (and no INDUCE)."""
    if k == 0:
        yield CertNode.singleton()
        return
    for c in certificates(k - 1):
        p, _ = replay(c)
        for i in range(len(p.stable_sets)):
            yield CertNode.add(c, i)
    for a in range(k):
        for left in certificates(a):
            for right in certificates(k - 1 - a):
                pr, _ = replay(right)
                for i in [None, *range(len(pr.stable_sets))]:
                    yield CertNode.join(left, right, i)


def embedding_ok(small: GraphStableSetPair, big: GraphStableSetPair, emb) -> bool:
    n = small.vertex_count
    if emb is None or sorted(emb) != list(range(n)) or len(set(emb.values())) != n:
        return False
    for a, b in itertools.combinations(range(n), 2):
        if small.graph.has_edge(a, b) != big.graph.has_edge(emb[a], emb[b]):
            return False
    image = set(emb.values())
    restricted = {frozenset(x for x in s if x in image) for s in big.stable_sets}
    return all(frozenset(emb[x] for x in s) in restricted for s in small.stable_sets)


@pytest.mark.criterion(9)
def test_c9_certificates():
    start = time.perf_counter()
    named = {
        "C6": gen.cycle_graph(6),
        "C9": gen.cycle_graph(9),
        "digon-edge-digon": subdivide(gen.digon_chain(), 2).realized,
        "bowtie": subdivide(gen.bowtie(), 2).realized,
        "theta": subdivide(gen.theta(), 2).realized,
    }
    for name, h in named.items():
        cert = construct(h)
        pair, _ = replay(cert)
        assert oracles.isomorphic(pair.graph, h), name
        relabelled = SimpleGraph(h.vertex_count,
                                 [(cert.labels[u], cert.labels[v]) for u, v in pair.graph.edges()])
        assert relabelled == h, name

    big = next_iterate(3)
    total = 0
    for k in range(4):
        for node in certificates(k):
            pair, depth = replay(node)
            assert depth == k
            assert embedding_ok(pair, big, is_induced_subpair(pair, big)), node.to_json()
            total += 1
    assert total == 192
    assert time.perf_counter() - start < 300


# ---------------------------------------------------------------------------
# 10. file formats


def _twice(tmp_path, write, read, obj, name):
    a, b = tmp_path / f"{name}.a", tmp_path / f"{name}.b"
    write(a, obj)
    write(b, read(a))
    return a.read_bytes(), b.read_bytes()


def _random_rep(rng):
    n = int(rng.integers(1, 9))
    frames = []
    for v in range(n):
        x1, y1 = (int(c) for c in rng.integers(-50, 50, 2))
        frames.append(Frame(x1, x1 + int(rng.integers(1, 40)), y1, y1 + int(rng.integers(1, 40)), vertex=v))
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.3]
    return FrameRepresentation(tuple(frames), SimpleGraph(n, edges))


def _random_pair(rng):
    n = int(rng.integers(1, 10))
    g = SimpleGraph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.3])
    sets = []
    for _ in range(int(rng.integers(0, 5))):
        s = []
        for v in rng.permutation(n).tolist():
            if not any(g.has_edge(v, w) for w in s) and rng.random() < 0.5:
                s.append(v)
        sets.append(s)
    return GraphStableSetPair(g, sets)


def _random_node(rng, ops):
    node = CertNode.singleton()
    for _ in range(ops):
        p, _ = replay(node)
        if rng.random() < 0.5:
            node = CertNode.add(node, int(rng.integers(0, len(p.stable_sets))))
        else:
            other = _random_node(rng, int(rng.integers(0, 2)))
            idx = None if rng.random() < 0.3 else int(rng.integers(0, len(p.stable_sets)))
            node = CertNode.join(other, node, idx)
    if rng.random() < 0.3:
        p, _ = replay(node)
        keep = sorted(rng.choice(p.vertex_count, size=max(1, p.vertex_count - 1), replace=False).tolist())
        sets = [[x for x in s if x in keep] for s in p.stable_sets[:2]]
        node = CertNode.induce(node, keep, sets)
    return node


def _random_cert(rng, ops):
    node = _random_node(rng, ops)
    pair, _ = replay(node)
    return ConstructionCertificate(node, pair, tuple(range(pair.vertex_count)))


@pytest.mark.criterion(10)
def test_c10_round_trips(tmp_path):
    rng = np.random.default_rng(10)

    def write_graph(path, g):
        io.write_text(path, format_multigraph(g))

    def read_graph(path):
        return parse_multigraph(io.read_text(path))

    for i in range(1000):
        n = int(rng.integers(1, 12))
        g = gen.random_connected_multigraph(n, n - 1 + int(rng.integers(0, 6)), rng)
        a, b = _twice(tmp_path, write_graph, read_graph, g, "graph")
        assert a == b

        a, b = _twice(tmp_path, io.write_rep, io.read_rep, _random_rep(rng), "rep")
        assert a == b

        a, b = _twice(tmp_path, io.write_pair, io.read_pair, _random_pair(rng), "pair")
        assert a == b

        cert = _random_cert(rng, int(rng.integers(0, 5)))
        a, b = _twice(tmp_path, io.write_cert, io.read_cert, cert, "cert")
        assert a == b
        assert replay(io.read_cert(tmp_path / "cert.a"))[0] == cert.claim


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
