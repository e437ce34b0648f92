from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from conormal.errors import GraphError
from conormal.graph import Graph, complete, cycle, empty, is_connected, is_spanning_subgraph, path
from conormal.products import ProductIndexMap, cartesian, conormal, conormal_power, power_index
from conormal.symmetry import are_isomorphic

from oracles import all_labeled_graphs, naive_cartesian_edges, naive_conormal_edges
from test_graph import graphs


def small_graphs(max_n):
    return [g for n in range(1, max_n + 1) for g in all_labeled_graphs(n)]


class TestIndexMap:
    def test_bijection(self):
        im = ProductIndexMap(3, 4)
        seen = {im.index(g, h) for g in range(3) for h in range(4)}
        assert seen == set(range(12))
        assert all(im.decode(im.index(g, h)) == (g, h) for g in range(3) for h in range(4))

    def test_row_major(self):
        assert ProductIndexMap(3, 4).index(2, 1) == 9

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            ProductIndexMap(2, 2).index(2, 0)
        with pytest.raises(IndexError):
            ProductIndexMap(2, 2).decode(4)


class TestConormal:
    def test_k2_k2_is_k4(self):
        assert conormal(complete(2), complete(2)) == complete(4)

    def test_k3_k2_is_k6(self):
        assert conormal(complete(3), complete(2)) == complete(6)

    def test_p3_p2_matches_definition(self):
        g, h = path(3), path(2)
        assert set(conormal(g, h).edges) == naive_conormal_edges(g, h)

    def test_matches_definition_on_all_small_pairs(self):
        gs = small_graphs(3)
        for g, h in itertools.product(gs, gs):
            assert set(conormal(g, h).edges) == naive_conormal_edges(g, h)

    @given(graphs(5), graphs(5))
    @settings(max_examples=60)
    def test_degree_identity(self, g, h):
        p = conormal(g, h)
        im = ProductIndexMap.of(g, h)
        for a in range(g.n):
            for b in range(h.n):
                da, db = g.degree(a), h.degree(b)
                assert p.degree(im.index(a, b)) == da * h.n + db * g.n - da * db

    def test_k1_is_identity(self):
        for g in small_graphs(4):
            assert conormal(g, empty(1)) == g

    @given(graphs(4), graphs(4))
    @settings(max_examples=40)
    def test_commutative_up_to_isomorphism(self, g, h):
        assert are_isomorphic(conormal(g, h), conormal(h, g))

    def test_associative_as_equality(self):
        gs = small_graphs(2) + [path(3), complete(3), Graph(3, [(0, 1)])]
        for f, g, h in itertools.product(gs, repeat=3):
            assert conormal(conormal(f, g), h) == conormal(f, conormal(g, h))


class TestCartesian:
    def test_k2_k2_is_c4(self):
        p = cartesian(complete(2), complete(2))
        assert p.n == 4 and p.m == 4 and all(d == 2 for d in p.degrees())
        assert set(p.edges) == naive_cartesian_edges(complete(2), complete(2))

    def test_k1_is_identity(self):
        assert cartesian(cycle(5), empty(1)) == cycle(5)

    def test_p2_p3_counts(self):
        p = cartesian(path(2), path(3))
        assert (p.n, p.m) == (6, 7)

    @given(graphs(5), graphs(5))
    @settings(max_examples=60)
    def test_matches_definition(self, g, h):
        p = cartesian(g, h)
        assert set(p.edges) == naive_cartesian_edges(g, h)
        assert p.m == g.m * h.n + h.m * g.n

    def test_spanning_subgraph_of_conormal(self):
        conn = [g for g in small_graphs(5) if g.n >= 2 and is_connected(g)]
        reps = []
        for g in conn:
            if not any(g.n == r.n and are_isomorphic(g, r) for r in reps):
                reps.append(g)
        for g, h in itertools.product(reps, repeat=2):
            assert is_spanning_subgraph(cartesian(g, h), conormal(g, h))


class TestPower:
    def test_k2_cubed_is_k8(self):
        assert conormal_power(complete(2), 3) == complete(8)

    def test_first_power(self):
        assert conormal_power(cycle(5), 1) == cycle(5)

    def test_square_is_product(self):
        assert conormal_power(path(3), 2) == conormal(path(3), path(3))

    def test_order(self):
        assert conormal_power(path(4), 3).n == 64

    def test_zero_power_rejected(self):
        with pytest.raises(GraphError):
            conormal_power(path(3), 0)

    def test_power_index(self):
        assert power_index(4, 3, (1, 2, 3)) == 1 * 16 + 2 * 4 + 3
        with pytest.raises(IndexError):
            power_index(4, 2, (1, 2, 3))
