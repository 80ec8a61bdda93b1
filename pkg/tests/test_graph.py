import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerdom.graph import (
    GraphError,
    VertexSet,
    build_graph,
    complete_graph,
    connected_components,
    cut_vertices,
    cycle_graph,
    disjoint_union,
    from_adjacency,
    induced_subgraph,
    is_complete_on,
    path_graph,
)


@st.composite
def edge_lists(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return n, draw(st.lists(pairs, max_size=3 * n))


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g == complete_graph(3)


def test_edgeless_keeps_isolated_vertices():
    g = build_graph(4, [])
    assert g.n == 4 and g.m == 0
    assert all(g.degree(v) == 0 for v in range(4))


def test_duplicates_collapse():
    assert build_graph(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("edge", [(0, 3), (-1, 0), (2, 2)])
def test_bad_edges_rejected(edge):
    with pytest.raises(GraphError, match=str(edge[0])):
        build_graph(3, [edge])


def test_from_adjacency_rejects_asymmetry():
    with pytest.raises(GraphError):
        from_adjacency([0b10, 0])


@given(edge_lists())
def test_symmetric_loop_free(data):
    n, edges = data
    g = build_graph(n, edges)
    for v in range(n):
        assert not g.adj[v] >> v & 1
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert 2 * g.m == sum(g.degree(v) for v in range(n))


def test_induced_subgraph_examples(g2):
    sub, old = induced_subgraph(complete_graph(4), VertexSet.of([0, 1, 2]))
    assert sub == complete_graph(3) and old == [0, 1, 2]
    sub, _ = induced_subgraph(path_graph(4), [0, 3])
    assert sub.n == 2 and sub.m == 0
    g, w = g2
    tri, _ = induced_subgraph(g, [w.spokes[0], *w.triangles[0]])
    assert tri == complete_graph(3)


def test_induced_subgraph_out_of_range():
    with pytest.raises(GraphError):
        induced_subgraph(path_graph(3), [0, 5])


@given(edge_lists())
def test_induced_on_everything_is_identity(data):
    g = build_graph(*data)
    sub, old = induced_subgraph(g, range(g.n))
    assert sub == g and old == list(range(g.n))


def test_is_complete_on_examples():
    assert is_complete_on(complete_graph(4), [1, 2, 3])
    assert not is_complete_on(cycle_graph(4), [0, 1, 2])
    assert is_complete_on(path_graph(5), [3])
    assert is_complete_on(path_graph(5), [])


@settings(max_examples=200)
@given(edge_lists(8), st.data())
def test_complete_iff_edge_count(data, draw):
    g = build_graph(*data)
    s = draw.draw(st.sets(st.integers(0, g.n - 1)))
    sub, _ = induced_subgraph(g, s)
    assert is_complete_on(g, s) == (sub.m == len(s) * (len(s) - 1) // 2)


def test_components():
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert sorted(len(c) for c in connected_components(two)) == [3, 3]
    assert [len(c) for c in connected_components(path_graph(4))] == [4]
    assert [c.sorted() for c in connected_components(build_graph(3, []))] == [[0], [1], [2]]


def test_cut_vertices():
    assert list(VertexSet(cut_vertices(path_graph(5)))) == [1, 2, 3]
    assert cut_vertices(cycle_graph(5)) == 0


def test_vertex_set_ops():
    a, b = VertexSet.of([0, 2, 5]), VertexSet.of([2, 3])
    assert (a | b).sorted() == [0, 2, 3, 5]
    assert (a & b).sorted() == [2]
    assert (a - b).sorted() == [0, 5]
    assert len(a) == 3 and 5 in a and 4 not in a
