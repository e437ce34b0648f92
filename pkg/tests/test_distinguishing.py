from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from conormal.budget import Budget
from conormal.distinguishing import (
    EdgeLabeling,
    VertexLabeling,
    clear_results,
    construct_l1,
    construct_l2,
    distinguishing_index,
    distinguishing_number,
    edge_kernel_element,
    fixes_only_identity,
    is_distinguishing,
    is_traceable,
    lift_edge_labeling,
)
from conormal.errors import BudgetExceeded, GraphError, NoEdgesError, NonFaithfulActionError, PreconditionError
from conormal.graph import Graph, complete, cycle, empty, path, relabel, star
from conormal.products import cartesian, conormal
from conormal.symmetry import automorphisms

from oracles import (
    all_labeled_graphs,
    labeling_is_distinguishing,
    naive_distinguishing_index,
    naive_distinguishing_number,
    naive_hamiltonian_path,
)
from test_graph import graphs

RIGID6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (1, 4)])


class TestLabelings:
    def test_label_range_checked(self):
        with pytest.raises(GraphError):
            VertexLabeling((1, 3), 2)
        with pytest.raises(GraphError):
            EdgeLabeling((0,), 1)

    def test_examples(self):
        assert is_distinguishing(path(3), automorphisms(path(3)), VertexLabeling((1, 1, 2), 2))
        assert is_distinguishing(RIGID6, automorphisms(RIGID6), VertexLabeling((1,) * 6, 1))
        assert not is_distinguishing(cycle(4), automorphisms(cycle(4)), VertexLabeling((1,) * 4, 1))

    def test_length_checked(self):
        with pytest.raises(GraphError):
            is_distinguishing(path(3), automorphisms(path(3)), VertexLabeling((1, 2), 2))
        with pytest.raises(GraphError):
            fixes_only_identity(path(3), VertexLabeling((1, 2), 2))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_both_checks_match_oracle(self, n):
        rng = random.Random(n)
        for g in all_labeled_graphs(n):
            grp = automorphisms(g)
            lab = tuple(rng.randint(1, 2) for _ in range(n))
            want = labeling_is_distinguishing(g, lab)
            assert is_distinguishing(g, grp, VertexLabeling(lab, 2)) == want
            assert fixes_only_identity(g, VertexLabeling(lab, 2)) == want
            if g.m:
                elab = tuple(rng.randint(1, 2) for _ in range(g.m))
                ewant = labeling_is_distinguishing(g, elab, "edge")
                assert is_distinguishing(g, grp, EdgeLabeling(elab, 2)) == ewant
                assert fixes_only_identity(g, EdgeLabeling(elab, 2)) == ewant


class TestDistinguishingNumber:
    @pytest.mark.parametrize(
        "g, value", [(path(4), 2), (cycle(5), 3), (cycle(7), 2), (complete(4), 4), (RIGID6, 1), (star(3), 3), (empty(3), 3)]
    )
    def test_examples(self, g, value):
        res = distinguishing_number(g)
        assert res.value == value and res.exact
        assert fixes_only_identity(g, res.witness)
        assert res.witness.d == value

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_enumeration(self, n):
        graphs_n = list(all_labeled_graphs(n))
        if n == 5:
            graphs_n = random.Random(1).sample(graphs_n, 120)
        for g in graphs_n:
            res = distinguishing_number(g)
            assert res.value == naive_distinguishing_number(g), g.edges
            assert labeling_is_distinguishing(g, res.witness.labels)

    def test_twin_heavy_products_against_enumeration(self):
        # large twin classes exercise the quotient reduction
        for g in [conormal(complete(2), star(2)), conormal(star(2), empty(2)), conormal(path(3), complete(2))]:
            assert distinguishing_number(g).value == naive_distinguishing_number(g)

    def test_k3_join_of_paths(self):
        # three copies of P4 joined completely: two labels already separate the copies
        g = conormal(complete(3), path(4))
        assert distinguishing_number(g).value == 2

    def test_large_group_uses_twin_quotient(self):
        # complement of a perfect matching on 8 pairs: group order 2^8 * 8!
        res = distinguishing_number(conormal(cycle(4), complete(4)))
        assert res.value == 5 and res.exact
        assert fixes_only_identity(conormal(cycle(4), complete(4)), res.witness)

    def test_certificate_mode(self):
        res = distinguishing_number(cycle(5), mode="certificate")
        assert res.value == 3 and res.witness.d == 3
        assert res.lower_bound <= res.value
        two = distinguishing_number(cycle(8), mode="certificate")
        assert two.value == 2 and two.exact
        assert distinguishing_number(RIGID6, mode="certificate").lower_bound_basis == "rigid"

    def test_twin_class_bound_is_exact_in_certificate_mode(self):
        res = distinguishing_number(complete(5), mode="certificate")
        assert res.value == 5 and res.exact and res.lower_bound_basis in ("twin_classes", "exhaustive")

    def test_seed_determinism(self):
        g = cycle(9)
        clear_results()
        a = distinguishing_number(g, seed=3)
        clear_results()
        b = distinguishing_number(g, seed=3)
        assert a == b

    def test_isomorphic_inputs_share_results_with_transported_witness(self):
        g = conormal(path(3), cycle(4))
        perm = list(range(g.n))
        random.Random(2).shuffle(perm)
        h = relabel(g, perm)
        a, b = distinguishing_number(g), distinguishing_number(h)
        assert a.value == b.value
        assert fixes_only_identity(h, b.witness)

    def test_budget_exhaustion(self):
        clear_results()
        with pytest.raises(BudgetExceeded):
            distinguishing_number(cycle(5), budget=Budget(node_limit=3, retries=1))
        clear_results()

    @given(graphs(6))
    @settings(max_examples=40, deadline=None)
    def test_witness_always_verifies(self, g):
        res = distinguishing_number(g)
        assert fixes_only_identity(g, res.witness)
        assert max(res.witness.labels) <= res.value


class TestDistinguishingIndex:
    @pytest.mark.parametrize("g, value", [(path(4), 2), (cycle(6), 2), (complete(4), 3), (cycle(5), 3), (star(3), 3)])
    def test_examples(self, g, value):
        res = distinguishing_index(g)
        assert res.value == value and res.exact
        assert fixes_only_identity(g, res.witness)

    def test_undefined(self):
        with pytest.raises(NonFaithfulActionError):
            distinguishing_index(complete(2))
        with pytest.raises(NoEdgesError):
            distinguishing_index(empty(3))
        with pytest.raises(NonFaithfulActionError):
            distinguishing_index(Graph(5, [(0, 1), (1, 2)]))

    def test_kernel_element(self):
        assert edge_kernel_element(path(4)) is None
        assert edge_kernel_element(Graph(4, [(0, 1), (2, 3)])) == (1, 0, 2, 3)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_enumeration(self, n):
        graphs_n = list(all_labeled_graphs(n))
        if n == 5:
            graphs_n = random.Random(2).sample(graphs_n, 60)
        for g in graphs_n:
            want = naive_distinguishing_index(g)
            if want is None:
                with pytest.raises((NoEdgesError, NonFaithfulActionError)):
                    distinguishing_index(g)
            else:
                res = distinguishing_index(g)
                assert res.value == want, g.edges
                assert labeling_is_distinguishing(g, res.witness.labels, "edge")

    def test_k2_k2_exception(self):
        assert distinguishing_index(conormal(complete(2), complete(2))).value == 3
        assert distinguishing_index(conormal(path(3), complete(2))).value == 2


class TestProductLabelings:
    def test_l1_on_p3_p2(self):
        c = VertexLabeling((1, 1, 2), 2)
        lab = construct_l1(path(3), path(2), c)
        prod = conormal(path(3), path(2))
        assert lab.d == 4
        assert len(set(lab.labels)) <= 4
        assert is_distinguishing(prod, automorphisms(prod), lab)
        assert labeling_is_distinguishing(prod, lab.labels)

    def test_l1_with_trivial_left_factor(self):
        lab = construct_l1(empty(1), path(3), VertexLabeling((1,), 1))
        assert lab.labels == (1, 2, 3)
        assert fixes_only_identity(conormal(empty(1), path(3)), lab)

    def test_l1_with_trivial_right_factor(self):
        c = VertexLabeling((1, 1, 2), 2)
        assert construct_l1(path(3), empty(1), c).labels == c.labels

    def test_l2_mirror(self):
        c = VertexLabeling((1, 1, 2), 2)
        lab = construct_l2(path(2), path(3), c)
        assert lab.d == 4
        assert fixes_only_identity(conormal(path(2), path(3)), lab)

    def test_requires_distinguishing_input(self):
        with pytest.raises(PreconditionError):
            construct_l1(path(3), path(2), VertexLabeling((1, 1, 1), 1))
        with pytest.raises(GraphError):
            construct_l2(path(3), path(2), VertexLabeling((1, 1, 2), 2))

    @pytest.mark.parametrize("g, h", [(cycle(5), path(3)), (star(3), complete(2)), (path(4), cycle(4))])
    def test_product_labelings_distinguish(self, g, h):
        dg, dh = distinguishing_number(g), distinguishing_number(h)
        prod = conormal(g, h)
        assert fixes_only_identity(prod, construct_l1(g, h, dg.witness))
        assert fixes_only_identity(prod, construct_l2(g, h, dh.witness))


class TestLift:
    def test_identity_lift(self):
        lab = distinguishing_index(path(4)).witness
        assert lift_edge_labeling(path(4), path(4), lab) == lab

    def test_conormal_over_cartesian(self):
        g, h = conormal(path(4), cycle(5)), cartesian(path(4), cycle(5))
        lab = distinguishing_index(h).witness
        out = lift_edge_labeling(g, h, lab)
        assert out.d == 2 and len(out.labels) == g.m
        assert fixes_only_identity(g, out)

    def test_subgroup_precondition(self):
        with pytest.raises(PreconditionError):
            lift_edge_labeling(cycle(4), path(4), distinguishing_index(path(4)).witness)

    def test_spanning_precondition(self):
        with pytest.raises(PreconditionError):
            lift_edge_labeling(path(4), cycle(4), EdgeLabeling((1, 1, 2, 2), 2))


class TestTraceable:
    def test_examples(self):
        assert is_traceable(path(7))
        assert not is_traceable(star(3))
        assert is_traceable(conormal(cycle(4), path(3)))
        assert is_traceable(empty(1))
        assert not is_traceable(empty(2))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_factorial_search(self, n):
        for g in itertools.islice(all_labeled_graphs(n), 0, None, 3):
            assert is_traceable(g) == naive_hamiltonian_path(g)

    def test_order_limit(self):
        with pytest.raises(BudgetExceeded):
            is_traceable(path(30))
