import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, random_weighted_graph
from graphsimplex import (
    ConnectivityError,
    EdgeListParseError,
    GraphValidationError,
    SubsetError,
    VertexSubset,
    WeightedGraph,
    cut_intersection_size,
    cut_size,
    degree_vector,
    format_edge_list,
    laplacian,
    parse_edge_list,
    read_edge_list,
)
from graphsimplex.graph import as_subset, cut_sizes, indicator_matrix, is_connected, subset_masks


class TestParse:
    def test_p4(self, p4):
        assert p4.n_nodes == 4
        assert p4.n_edges == 3
        assert p4.is_unweighted
        assert p4.edges == ((0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0))

    def test_weighted_k2(self):
        g = parse_edge_list("0 1 2.5")
        assert g.n_nodes == 2
        assert g.weight(0, 1) == 2.5
        assert g.weight(1, 0) == 2.5
        assert not g.is_unweighted

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a path\n\n0 1   # first edge\n  1 2\n")
        assert g.n_nodes == 3 and g.n_edges == 2

    def test_stream_input(self):
        g = parse_edge_list(io.StringIO("1 0\n"))
        assert g.edges == ((0, 1, 1.0),)

    def test_duplicate_rejected(self):
        with pytest.raises(GraphValidationError, match="duplicate"):
            parse_edge_list("0 1\n0 1")

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(GraphValidationError):
            parse_edge_list("0 1\n1 0")

    @pytest.mark.parametrize(
        "text",
        ["0", "0 1 2 3", "a b", "0 1 x", "0 1.5", "-1 0", ""],
    )
    def test_malformed(self, text):
        with pytest.raises((EdgeListParseError, GraphValidationError)):
            parse_edge_list(text)

    def test_parse_error_carries_line_number(self):
        with pytest.raises(EdgeListParseError) as info:
            parse_edge_list("0 1\n1 2\nbogus\n")
        assert info.value.lineno == 3

    def test_self_loop(self):
        with pytest.raises(GraphValidationError):
            parse_edge_list("0 1\n1 1")

    @pytest.mark.parametrize("w", ["0", "-1", "nan", "inf"])
    def test_bad_weight(self, w):
        with pytest.raises(GraphValidationError):
            parse_edge_list(f"0 1 {w}")

    def test_disconnected(self):
        with pytest.raises(ConnectivityError):
            parse_edge_list("0 1\n2 3")

    def test_isolated_gap_node_is_disconnected(self):
        # node 1 never appears, so it is isolated
        with pytest.raises(ConnectivityError):
            parse_edge_list("0 2")

    def test_round_trip(self, tmp_path):
        g = WeightedGraph(3, ((0, 1, 0.5), (1, 2, 3.0), (0, 2, 1.0)))
        path = tmp_path / "g.txt"
        path.write_text(format_edge_list(g))
        assert read_edge_list(path) == g


class TestWeightedGraph:
    def test_single_node_rejected(self):
        with pytest.raises(GraphValidationError):
            WeightedGraph(1, ())

    def test_out_of_range(self):
        with pytest.raises(GraphValidationError):
            WeightedGraph(2, ((0, 2, 1.0),))

    def test_edges_normalized(self):
        g = WeightedGraph(3, ((2, 1, 1.0), (1, 0, 2.0)))
        assert g.edges == ((0, 1, 2.0), (1, 2, 1.0))
        assert g.has_edge(2, 1) and not g.has_edge(0, 2)
        assert g.weight(0, 2) == 0.0

    def test_adjacency_round_trip(self, p4):
        assert WeightedGraph.from_adjacency(p4.adjacency()) == p4

    def test_relabel(self, p4):
        h = p4.relabel([3, 2, 1, 0])
        assert h == p4
        h = p4.relabel([1, 0, 2, 3])
        assert h.has_edge(0, 2) and h.has_edge(2, 3) and not h.has_edge(1, 2)


def test_is_connected():
    assert is_connected(3, [(0, 1), (1, 2)])
    assert not is_connected(3, [(0, 1)])


class TestVertexSubset:
    def test_basic(self):
        v = VertexSubset(frozenset({0, 2}), 4)
        assert v.size == 2
        assert v.mask == 0b101
        assert v.complement().sorted_members() == [1, 3]
        np.testing.assert_array_equal(v.indicator, [1, 0, 1, 0])
        assert VertexSubset.from_mask(5, 4) == v
        assert list(v) == [0, 2] and len(v) == 2

    @pytest.mark.parametrize("members", [set(), {0, 1, 2}, {3}, {-1}])
    def test_invalid(self, members):
        with pytest.raises(SubsetError):
            VertexSubset(frozenset(members), 3)

    def test_as_subset(self):
        assert as_subset([1], 3) == VertexSubset(frozenset({1}), 3)
        v = VertexSubset(frozenset({1}), 3)
        assert as_subset(v, 3) is v
        with pytest.raises(SubsetError):
            as_subset(v, 4)


class TestLaplacian:
    def test_p4(self, p4):
        expected = np.array([[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]], dtype=float)
        np.testing.assert_array_equal(laplacian(p4), expected)

    def test_k2(self, k2):
        np.testing.assert_array_equal(laplacian(k2), [[1, -1], [-1, 1]])

    def test_k4(self, k4):
        np.testing.assert_array_equal(laplacian(k4), 4 * np.eye(4) - np.ones((4, 4)))

    def test_degrees(self, p4, k4):
        np.testing.assert_array_equal(degree_vector(p4), [1, 2, 2, 1])
        np.testing.assert_array_equal(degree_vector(k4), [3, 3, 3, 3])
        np.testing.assert_array_equal(degree_vector(parse_edge_list("0 1 2.5")), [2.5, 2.5])


class TestCuts:
    @pytest.mark.parametrize("members, expected", [({0, 1}, 1), ({0, 2}, 3), ({0}, 1)])
    def test_p4(self, p4, members, expected):
        assert cut_size(p4, members) == expected

    def test_intersection(self, p4, k4):
        assert cut_intersection_size(p4, {0}, {1}) == 1
        assert cut_intersection_size(p4, {0}, {2}) == 0
        assert cut_intersection_size(k4, {0, 1}, {2, 3}) == 4

    def test_intersection_overlap(self, p4):
        with pytest.raises(SubsetError):
            cut_intersection_size(p4, {0, 1}, {1, 2})

    def test_subset_masks(self):
        assert subset_masks(3).tolist() == [1, 2, 3, 4, 5, 6]
        assert subset_masks(3, complement_free=True).tolist() == [1, 3, 5]
        np.testing.assert_array_equal(indicator_matrix([5], 3), [[1, 0, 1]])


@st.composite
def graphs(draw, max_nodes=7):
    n = draw(st.integers(2, max_nodes))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_weighted_graph(np.random.default_rng(seed), n, p=draw(st.floats(0, 1)))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_cut_properties(g):
    n = g.n_nodes
    q = laplacian(g)
    np.testing.assert_allclose(q.sum(axis=1), 0, atol=1e-12)
    assert np.array_equal(q, q.T)
    assert np.isclose(degree_vector(g).sum(), 2 * sum(w for _, _, w in g.edges))
    masks = subset_masks(n)
    u = indicator_matrix(masks, n)
    quad = np.einsum("ij,jk,ik->i", u, q, u)
    batch = cut_sizes(g, masks)
    np.testing.assert_allclose(batch, quad, atol=1e-12)
    full = (1 << n) - 1
    for mask, value in zip(masks[:20], batch[:20]):
        v = VertexSubset.from_mask(int(mask), n)
        assert cut_size(g, v) == pytest.approx(value, abs=1e-12)
        assert cut_size(g, v) == cut_size(g, VertexSubset.from_mask(full ^ int(mask), n))
    for i in range(n):
        for j in range(i + 1, n):
            assert cut_intersection_size(g, {i}, {j}) == g.weight(i, j)


def test_complete_graph_cut_counts():
    g = complete_graph(5)
    for mask in subset_masks(5):
        k = bin(int(mask)).count("1")
        assert cut_size(g, VertexSubset.from_mask(int(mask), 5)) == k * (5 - k)
