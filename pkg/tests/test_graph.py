import pickle

import pytest
from hypothesis import given, strategies as st

from factorkit import (
    Factor,
    FormatError,
    Graph,
    components,
    degree,
    degree_sum,
    edge_boundary,
    factor_degrees,
    format_edge_list,
    format_factor,
    mask_of,
    parse_edge_list,
    vertices_of,
)
from helpers import complete, cycle, path, two_disjoint_edges


def test_graph_normalizes_and_validates_edges():
    g = Graph(3, [(2, 0), (0, 1)])
    assert g.edges == frozenset({(0, 2), (0, 1)})
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_graph_is_immutable_hashable_picklable():
    g = cycle(4)
    with pytest.raises(AttributeError):
        g.n = 5
    assert g == Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert hash(g) == hash(Graph(4, g.edges))
    assert g != Graph(5, g.edges)
    assert pickle.loads(pickle.dumps(g)) == g


def test_adjacency_masks():
    g = path(3)
    assert g.adj == (0b010, 0b101, 0b010)
    assert g.edge_count == 2


def test_mask_roundtrip():
    assert mask_of([0, 2, 5]) == 0b100101
    assert vertices_of(0b100101) == (0, 2, 5)
    assert vertices_of(mask_of([])) == ()


class TestComponents:
    def test_edgeless_three_vertices(self):
        assert len(components(Graph(3))) == 3

    def test_connected_whole(self):
        assert components(cycle(5)) == [0b11111]

    def test_cut_vertex(self):
        # removing the middle of a path leaves the two ends apart
        assert len(components(path(3), removed=0b010)) == 2

    def test_masks_partition_survivors(self):
        g = two_disjoint_edges()
        comps = components(g)
        assert len(comps) == 2
        assert sum(comps) == 0b1111
        with pytest.raises(ValueError):
            components(g, removed=1 << 4)


def test_degree():
    k4 = complete(4)
    assert degree(k4, 0) == 3
    assert degree(k4, 0, removed=mask_of([1, 2])) == 1
    assert degree(Graph(1), 0) == 0
    with pytest.raises(ValueError):
        degree(k4, 4)
    with pytest.raises(ValueError):
        degree(k4, 1, removed=0b010)


def test_degree_sum():
    k4 = complete(4)
    assert degree_sum(k4, mask_of([0]), removed=mask_of([1])) == 2
    assert degree_sum(k4, 0) == 0
    # an edge inside s counts from both ends
    assert degree_sum(Graph(2, [(0, 1)]), 0b11) == 2
    with pytest.raises(ValueError):
        degree_sum(k4, 0b01, removed=0b01)


def test_edge_boundary():
    k4 = complete(4)
    assert edge_boundary(k4, 0b0001, 0b1110) == 3
    assert edge_boundary(two_disjoint_edges(), 0b0011, 0b1100) == 0
    with pytest.raises(ValueError):
        edge_boundary(k4, 0b0011, 0b0010)


def test_factor_degrees():
    k4 = complete(4)
    pm = Factor(k4, [(0, 1), (2, 3)])
    assert factor_degrees(pm) == (1, 1, 1, 1)
    assert factor_degrees(Factor(k4)) == (0, 0, 0, 0)
    c4 = cycle(4)
    assert factor_degrees(Factor(c4, c4.edges)) == (2, 2, 2, 2)
    with pytest.raises(ValueError):
        Factor(c4, [(0, 2)])


def test_parse_format_roundtrip():
    g = cycle(4)
    assert parse_edge_list(format_edge_list(g)) == g
    assert format_edge_list(Graph(2)) == "2 0\n"
    text = format_factor(Factor(g, [(0, 1)]))
    assert text == "4 1\n0 1\n"
    # the factor text is itself a valid graph on the host's vertex count
    assert parse_edge_list(text) == Graph(4, [(0, 1)])


@pytest.mark.parametrize("bad", [
    "",
    "2 1\r\n0 1\n",
    "2 1\n1 0\n",
    "2 1\n0 1\n0 1\n",
    "2 2\n0 1\n",
    "2 1\n0  1\n",
    "02 0\n",
    "2 a\n",
    "3 1\n0 3\n",
])
def test_parse_rejects_malformed(bad):
    with pytest.raises(FormatError):
        parse_edge_list(bad)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, picked)


@given(graphs())
def test_format_parse_identity(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(graphs(), st.integers(min_value=0))
def test_components_partition(g, seed):
    removed = seed % (1 << g.n) if g.n else 0
    comps = components(g, removed=removed)
    combined = 0
    for c in comps:
        assert c and not (c & combined)
        combined |= c
    assert combined == ((1 << g.n) - 1) & ~removed
