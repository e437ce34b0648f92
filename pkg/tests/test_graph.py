from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conormal.errors import GraphError, InvalidFamilyError, InvalidPairError
from conormal.graph import (
    Graph,
    TwinStatus,
    complement,
    complete,
    cycle,
    dominating_vertices,
    empty,
    graph_from_mask,
    has_false_twins,
    is_connected,
    is_spanning_subgraph,
    make_family,
    neighborhood,
    parse_family,
    path,
    remove_vertex,
    star,
    twin_classes,
    twin_status,
)
from conormal.symmetry import are_isomorphic

from oracles import all_labeled_graphs, naive_isomorphic, naive_twin_classes


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


class TestConstruction:
    def test_edges_are_normalised(self):
        g = Graph(3, [(2, 1), (1, 0), (0, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g == Graph(3, [(0, 1), (1, 2)])

    @pytest.mark.parametrize("n, edges", [(0, []), (2, [(0, 0)]), (2, [(0, 2)]), (-1, [])])
    def test_invalid_graphs_rejected(self, n, edges):
        with pytest.raises(GraphError):
            Graph(n, edges)

    def test_value_equality_is_not_isomorphism(self):
        a, b = Graph(3, [(0, 1)]), Graph(3, [(1, 2)])
        assert a != b
        assert are_isomorphic(a, b)

    def test_matrix_roundtrip(self):
        g = cycle(5)
        assert Graph.from_matrix(g.matrix) == g
        assert not g.matrix.flags.writeable

    @given(graphs())
    def test_adjacency_and_edge_list_agree(self, g):
        from_adj = {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adjacent(u, v)}
        assert from_adj == set(g.edges)
        assert all(g.degree(v) == len(neighborhood(g, v)) for v in range(g.n))


class TestFamilies:
    def test_path_edges(self):
        assert make_family("path", 3).edges == ((0, 1), (1, 2))

    def test_c3_is_k3(self):
        assert make_family("cycle", 3) == make_family("complete", 3)

    def test_k4_edge_count(self):
        assert make_family("complete", 4).m == 6

    @pytest.mark.parametrize("n", range(1, 9))
    def test_edge_counts(self, n):
        assert path(n).m == n - 1
        assert complete(n).m == n * (n - 1) // 2
        if n >= 3:
            assert cycle(n).m == n

    @pytest.mark.parametrize("n", [1, 2])
    def test_short_cycle_rejected(self, n):
        with pytest.raises(InvalidFamilyError):
            make_family("cycle", n)

    def test_unknown_family(self):
        with pytest.raises(InvalidFamilyError):
            make_family("wheel", 5)

    @pytest.mark.parametrize(
        "name, expected",
        [("P4", path(4)), ("C5", cycle(5)), ("K3", complete(3)), ("K1,3", star(3)), ("E4", empty(4)), ("k2", complete(2))],
    )
    def test_parse_family(self, name, expected):
        assert parse_family(name) == expected

    @pytest.mark.parametrize("name", ["Dhc", "X4", "K2,3", "P", "hello"])
    def test_parse_family_rejects(self, name):
        assert parse_family(name) is None


class TestComplement:
    def test_complement_of_complete(self):
        assert complement(complete(4)) == empty(4)

    def test_involution_on_p4(self):
        assert complement(complement(path(4))) == path(4)

    def test_c5_self_complementary(self):
        assert naive_isomorphic(cycle(5), complement(cycle(5)))
        assert are_isomorphic(cycle(5), complement(cycle(5)))

    @given(graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestNeighbourhoodsAndTwins:
    def test_neighbourhoods(self):
        assert neighborhood(path(3), 1) == {0, 2}
        assert neighborhood(path(3), 1, closed=True) == {0, 1, 2}
        assert neighborhood(complete(4), 0) == {1, 2, 3}

    def test_out_of_range_vertex(self):
        with pytest.raises(IndexError):
            neighborhood(path(3), 3)

    def test_twin_status_examples(self):
        assert twin_status(complete(3), 0, 1) is TwinStatus.TRUE_TWINS
        assert twin_status(path(4), 0, 3) is TwinStatus.NOT_TWINS
        assert twin_status(star(3), 1, 2) is TwinStatus.FALSE_TWINS

    def test_twin_status_same_vertex(self):
        with pytest.raises(InvalidPairError):
            twin_status(path(3), 1, 1)

    @given(graphs(6), st.data())
    def test_twin_status_symmetric(self, g, data):
        if g.n < 2:
            return
        u = data.draw(st.integers(0, g.n - 1))
        v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
        assert twin_status(g, u, v) == twin_status(g, v, u)
        s = twin_status(g, u, v)
        if s is TwinStatus.FALSE_TWINS:
            assert not g.adjacent(u, v)
        if s is TwinStatus.TRUE_TWINS:
            assert g.adjacent(u, v)

    def test_false_twins_and_dominating(self):
        assert not has_false_twins(path(4)) and dominating_vertices(path(4)) == []
        assert has_false_twins(star(3)) and dominating_vertices(star(3)) == [0]
        assert dominating_vertices(complete(4)) == [0, 1, 2, 3]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_twin_classes_match_oracle(self, n):
        for g in all_labeled_graphs(n):
            assert sorted(map(sorted, naive_twin_classes(g))) == twin_classes(g)


class TestConnectivityAndSpanning:
    def test_examples(self):
        assert is_connected(path(5))
        assert is_spanning_subgraph(path(4), Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
        assert not is_spanning_subgraph(cycle(4), path(4))

    def test_disconnected(self):
        assert not is_connected(empty(2))
        assert is_connected(empty(1))

    def test_remove_vertex(self):
        assert remove_vertex(cycle(5), 0) == path(4)

    def test_mask_order(self):
        assert graph_from_mask(3, 0b001) == Graph(3, [(0, 1)])
        assert graph_from_mask(3, 0b100) == Graph(3, [(1, 2)])
        assert graph_from_mask(3, 0b111) == complete(3)
