import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycleforge.constructors import generalized_petersen, k4
from cycleforge.errors import DuplicateEdge, IndexOutOfRange, MalformedGraph6, MalformedInput, SelfLoop
from cycleforge.graph import (
    complete_graph,
    components,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edgelist,
    from_graph6,
    is_cubic,
    new_graph,
    to_edgelist,
    to_graph6,
)

TRIANGLE = new_graph(3, [(0, 1), (1, 2), (0, 2)])


def test_triangle_and_k4():
    assert TRIANGLE.m == 3
    assert TRIANGLE.adjacency == ((1, 2), (0, 2), (0, 1))
    g = new_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert g == complete_graph(4)
    assert g.degrees() == [3, 3, 3, 3]


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(0, 0)], SelfLoop),
        (3, [(0, 3)], IndexOutOfRange),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(-1, 1)], IndexOutOfRange),
    ],
)
def test_new_graph_rejects(n, edges, exc):
    with pytest.raises(exc):
        new_graph(n, edges)


def test_delete_vertex():
    for v in range(4):
        g, remap = delete_vertex(k4(), v)
        assert g == TRIANGLE
        assert remap[v] is None
    g, _ = delete_vertex(TRIANGLE, 1)
    assert g == new_graph(2, [(0, 1)])
    gp = generalized_petersen(9, 2)
    for v in range(gp.n):
        g, remap = delete_vertex(gp, v)
        g.check()
        assert (g.n, g.m) == (17, 24)
        for x in gp.neighbors(v):
            assert g.degree(remap[x]) == gp.degree(x) - 1
    with pytest.raises(IndexOutOfRange):
        delete_vertex(TRIANGLE, 3)


def test_disjoint_union():
    g = disjoint_union(TRIANGLE, TRIANGLE)
    assert (g.n, g.m, len(components(g))) == (6, 6, 2)
    assert disjoint_union(empty_graph(0), k4()) == k4()
    g = disjoint_union(generalized_petersen(9, 2), k4())
    assert (g.n, g.m) == (22, 33)
    assert g.degrees() == generalized_petersen(9, 2).degrees() + k4().degrees()


def test_is_cubic():
    assert is_cubic(k4())
    assert not is_cubic(TRIANGLE)
    assert is_cubic(generalized_petersen(9, 2))


def test_graph6_known_values():
    assert to_graph6(TRIANGLE) == b"Bw"
    assert from_graph6(b"Bw") == TRIANGLE
    assert from_graph6(to_graph6(k4())) == k4()
    assert from_graph6(b">>graph6<<Bw\n") == TRIANGLE
    with pytest.raises(MalformedGraph6):
        from_graph6(b"")
    with pytest.raises(MalformedGraph6):
        from_graph6(b"Bww")
    with pytest.raises(MalformedGraph6):
        from_graph6(b"Bx")  # padding bit set


def test_graph6_agrees_with_networkx():
    for g in [generalized_petersen(9, 2), complete_graph(7), empty_graph(5)]:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).strip()


def test_graph6_large_order():
    g = new_graph(100, [(i, i + 1) for i in range(99)])
    data = to_graph6(g)
    assert data[0] == 126
    assert from_graph6(data) == g


@st.composite
def labelled_graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@settings(max_examples=300, deadline=None)
@given(labelled_graphs())
def test_graph6_roundtrip_property(g):
    g.check()
    assert from_graph6(to_graph6(g)) == g
    assert from_edgelist(to_edgelist(g)) == g


@settings(max_examples=100, deadline=None)
@given(labelled_graphs(max_n=9), st.data())
def test_delete_vertex_drops_one_degree_per_neighbour(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    h, remap = delete_vertex(g, v)
    h.check()
    for x in range(g.n):
        if x != v:
            assert h.degree(remap[x]) == g.degree(x) - (1 if g.has_edge(x, v) else 0)


def test_edgelist_format():
    text = "# triangle\n3 3\n0 1\n1 2  # comment\n0 2\n"
    assert from_edgelist(text) == TRIANGLE
    assert to_edgelist(TRIANGLE) == "3 3\n0 1\n0 2\n1 2\n"
    with pytest.raises(MalformedInput):
        from_edgelist("3 2\n0 1\n")
    with pytest.raises(MalformedInput):
        from_edgelist("")
