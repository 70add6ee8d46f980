import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from framegraphs import generators as gen
from framegraphs.errors import BudgetExceeded, DomainError, ParseError, SubdivisionError, VertexRangeError
from framegraphs.graph import (
    Multigraph,
    SimpleGraph,
    block_tree,
    components,
    format_multigraph,
    full_star_cutset_centers,
    induced_cycles,
    is_connected,
    is_feedback_vertex,
    is_forest,
    is_induced_subgraph,
    is_triangle_free,
    parse_multigraph,
    recognize_shape,
    subdivide,
    subdivision_base,
)


@st.composite
def multigraphs(draw, max_n=8, max_extra=6, loops=True):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    extra = draw(st.integers(0, max_extra))
    return gen.random_connected_multigraph(n, n - 1 + extra, np.random.default_rng(seed), loops=loops)


def k4_one_subdivision():
    return subdivide(gen.k4(), 1).realized


# parsing


def test_parse_examples():
    g = parse_multigraph("3\n0 1\n1 2\n0 1")
    assert g.vertex_count == 3 and sorted(g.edge_list()) == [(0, 1), (0, 1), (1, 2)]
    assert parse_multigraph("1\n0 0").edge_list() == [(0, 0)]
    assert parse_multigraph("2\n0 1\n0 1\n0 1").edge_count == 3


def test_parse_comments_crlf_and_blank_lines():
    g = parse_multigraph("# header\r\n4\r\n\r\n0 1\r\n# mid\r\n2 3\r\n")
    assert g.vertex_count == 4 and g.edge_list() == [(0, 1), (2, 3)]


@pytest.mark.parametrize("text, line", [("", 1), ("x\n", 1), ("3\n0 1\n1\n", 3), ("2\n0 -1\n", 2)])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_multigraph(text)
    assert exc.value.line == line


def test_parse_out_of_range():
    with pytest.raises(VertexRangeError):
        parse_multigraph("2\n0 2\n")


@given(multigraphs())
def test_format_parse_round_trip(g):
    assert parse_multigraph(format_multigraph(g)) == g


# basic predicates


def test_triangle_free_examples():
    assert is_triangle_free(gen.cycle_graph(5))
    assert not is_triangle_free(gen.complete_graph(4))
    h = k4_one_subdivision()
    assert h.vertex_count == 10 and is_triangle_free(h)


def test_full_star_cutset_examples():
    assert full_star_cutset_centers(gen.path_graph(5)) == {2}
    assert full_star_cutset_centers(gen.path_graph(4)) == set()
    assert full_star_cutset_centers(gen.cycle_graph(6)) == set()
    with pytest.raises(DomainError):
        full_star_cutset_centers(SimpleGraph(2))


@given(multigraphs(max_n=9, loops=False))
def test_full_star_cutsets_match_networkx(g):
    h = SimpleGraph(g.vertex_count, {tuple(sorted(e)) for e in g.edge_list()})
    want = set()
    for u in range(h.vertex_count):
        rest = oracles.to_nx(h)
        rest.remove_nodes_from(h.closed_neighborhood(u))
        if rest.number_of_nodes() and nx.number_connected_components(rest) >= 2:
            want.add(u)
    assert full_star_cutset_centers(h) == want


def test_components_and_connectivity():
    g = SimpleGraph(5, [(0, 1), (3, 4)])
    assert sorted(map(sorted, components(g))) == [[0, 1], [2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(gen.cycle_multigraph(1))


# blocks


def test_block_tree_examples():
    bt = block_tree(gen.bowtie())
    assert len(bt.blocks) == 2 and bt.cut_vertices == (0,)
    assert len(block_tree(gen.k4()).blocks) == 1
    assert block_tree(gen.k4()).cut_vertices == ()
    bt = block_tree(gen.digon_chain())
    assert len(bt.blocks) == 3 and set(bt.cut_vertices) == {1, 2}


def test_loop_is_its_own_block():
    g = Multigraph(2, [(0, 1), (1, 1)])
    bt = block_tree(g)
    assert sorted(len(b.edge_ids) for b in bt.blocks) == [1, 1]
    assert any(b.is_loop for b in bt.blocks)
    assert bt.cut_vertices == (1,)


def test_block_tree_rejects_disconnected():
    with pytest.raises(DomainError):
        block_tree(Multigraph(3, [(0, 1)]))


def test_cut_vertices_exhaustive_atlas():
    # every connected simple graph on at most 7 vertices
    for h in nx.graph_atlas_g()[1:]:
        if not nx.is_connected(h):
            continue
        g = Multigraph(h.number_of_nodes(), list(h.edges))
        assert set(block_tree(g).cut_vertices) == set(nx.articulation_points(h))


@given(multigraphs())
def test_blocks_partition_edges(g):
    bt = block_tree(g)
    ids = sorted(e for b in bt.blocks for e in b.edge_ids)
    assert ids == list(range(g.edge_count))
    # parallel edges share a block
    where = {e: i for i, b in enumerate(bt.blocks) for e in b.edge_ids}
    edges = g.edge_list()
    for a, b in itertools.combinations(range(g.edge_count), 2):
        if sorted(edges[a]) == sorted(edges[b]) and edges[a][0] != edges[a][1]:
            assert where[a] == where[b]


# feedback vertices and forests


def test_feedback_vertex_examples():
    c5 = gen.cycle_multigraph(5)
    assert all(is_feedback_vertex(c5, v) for v in range(5))
    k4 = gen.k4()
    assert not any(is_feedback_vertex(k4, v) for v in range(4))
    k4_minus = Multigraph(4, [e for e in k4.edge_list() if e != (2, 3)])
    assert is_feedback_vertex(k4_minus, 0)
    with pytest.raises(VertexRangeError):
        is_feedback_vertex(c5, 5)


def test_forest_counts_loops_and_parallel_pairs():
    assert is_forest(Multigraph(3, [(0, 1), (1, 2)]))
    assert not is_forest(Multigraph(2, [(0, 1), (0, 1)]))
    assert not is_forest(Multigraph(1, [(0, 0)]))


# subdivisions


def test_subdivide_examples():
    prof = subdivide(gen.digon(), [2, 2])
    assert oracles.isomorphic(prof.realized, gen.cycle_graph(6))
    assert subdivide(gen.k4(), 1).realized.vertex_count == 10
    assert oracles.isomorphic(subdivide(gen.cycle_multigraph(1), [2]).realized, gen.cycle_graph(3))


@pytest.mark.parametrize("g, counts", [
    (gen.digon(), [0, 0]),
    (gen.cycle_multigraph(1), [1]),
    (gen.k4(), [1, 1]),
    (gen.k4(), [-1, 1, 1, 1, 1, 1]),
])
def test_subdivide_rejects(g, counts):
    with pytest.raises(SubdivisionError):
        subdivide(g, counts)


def test_subdivide_path_map():
    prof = subdivide(Multigraph(2, [(0, 1), (1, 0)]), [1, 2])
    assert prof.path_map == ((0, 2, 1), (1, 3, 4, 0))


def test_subdivision_base_examples():
    c9 = subdivision_base(gen.cycle_graph(9))
    assert c9.base.edge_list() == [(0, 0)] and c9.counts == (8,)
    k4s = subdivision_base(k4_one_subdivision())
    assert oracles.multi_isomorphic(k4s.base, gen.k4()) and set(k4s.counts) == {1}
    p5 = subdivision_base(gen.path_graph(5))
    assert p5.base.edge_list() == [(0, 1)] and p5.counts == (3,)


@given(multigraphs(max_n=6), st.integers(0, 2**32 - 1))
def test_subdivision_round_trip(g, seed):
    degrees = [g.degree(v) for v in range(g.vertex_count)]
    if 2 in degrees or g.edge_count == 0:
        return
    counts = np.random.default_rng(seed).integers(2, 4, g.edge_count)
    prof = subdivision_base(subdivide(g, counts).realized)
    assert oracles.multi_isomorphic(prof.base, g)
    assert sorted(prof.counts) == sorted(counts.tolist())


# shapes


def test_recognize_shape_examples():
    assert recognize_shape(gen.cycle_graph(5)).kind == "LuxuryChandelier"
    assert recognize_shape(gen.cycle_graph(4)).kind == "LuxuryChandelier"
    claw_pivot = SimpleGraph(5, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)])
    assert recognize_shape(claw_pivot).kind == "Chandelier"
    assert recognize_shape(gen.path_graph(4)).kind == "PathAtMost4"
    assert recognize_shape(gen.path_graph(5)).kind == "LongerPath"
    assert recognize_shape(gen.petersen_graph()).kind == "Other"
    assert str(recognize_shape(gen.cycle_graph(5))).startswith("LuxuryChandelier(")


def test_triangle_is_smallest_chandelier():
    assert recognize_shape(gen.cycle_graph(3)).kind == "Chandelier"
    assert recognize_shape(SimpleGraph(2, [(0, 1)])).kind == "PathAtMost4"


# search


def test_induced_subgraph_examples():
    assert is_induced_subgraph(gen.path_graph(3), gen.cycle_graph(5)) is not None
    assert is_induced_subgraph(gen.complete_graph(3), gen.cycle_graph(5)) is None
    assert is_induced_subgraph(gen.cycle_graph(4), k4_one_subdivision()) is None


def test_induced_subgraph_budget():
    with pytest.raises(BudgetExceeded):
        is_induced_subgraph(gen.cycle_graph(7), gen.petersen_graph(), budget=5)


@given(st.integers(0, 2**32 - 1))
def test_induced_subgraph_embeddings_are_induced(seed):
    rng = np.random.default_rng(seed)
    big = SimpleGraph(9, [e for e in itertools.combinations(range(9), 2) if rng.random() < 0.35])
    keep = sorted(rng.choice(9, size=int(rng.integers(1, 6)), replace=False).tolist())
    small, _ = big.induced(keep)
    emb = is_induced_subgraph(small, big)
    assert emb is not None
    for a, b in itertools.combinations(range(small.vertex_count), 2):
        assert small.has_edge(a, b) == big.has_edge(emb[a], emb[b])


def test_induced_cycles_counts():
    assert len(induced_cycles(gen.cycle_graph(6))) == 1
    assert len(induced_cycles(gen.complete_graph(4))) == 4
    assert len(induced_cycles(gen.petersen_graph())) == sum(
        1 for c in nx.simple_cycles(nx.petersen_graph().to_directed())
        if len(c) > 2 and nx.petersen_graph().subgraph(c).number_of_edges() == len(c)) // 2
