import random

import pytest

from models.partition import Composition, Partition
from models.permutation import Permutation, avoiders_of
from models.poset import Graph, Poset
from models.scalar import ONE, q
from services.posets_graphs import PosetGraphService as PG
from utils.error_handler import DomainError, ValidationError


def two_plus_two():
    return Poset.from_relations(4, [(1, 2), (3, 4)])


def three_plus_one():
    return Poset.from_relations(4, [(1, 2), (2, 3)])


class TestPosetModel:
    def test_transitive_closure(self, poset_p):
        assert poset_p.lt(1, 5)
        assert poset_p.incomparable(1, 2)
        assert len(poset_p.relations) == 6

    def test_cycle_rejected(self):
        with pytest.raises(ValidationError):
            Poset.from_relations(3, [(1, 2), (2, 3), (3, 1)])
        with pytest.raises(ValidationError):
            Poset.from_relations(2, [(1, 3)])

    def test_induced_relabels(self, poset_p):
        assert PG.induced(poset_p, [1, 3, 5]) == Poset.chain(3)

    def test_relabel_requires_bijection(self, poset_p):
        with pytest.raises(ValidationError):
            poset_p.relabel({1: 1, 2: 1, 3: 3, 4: 4, 5: 5})

    def test_incomparability_graph_and_ngr(self):
        chain = Poset.chain(3)
        assert chain.incomparability_graph() == Graph.edgeless(3)
        assert Poset.antichain(3).incomparability_graph() == Graph.complete(3)
        ngr = PG.ngr(Poset.chain(2))
        assert ngr.has_arc(1, 1) and ngr.has_arc(1, 2)
        assert not ngr.has_arc(2, 1)

    def test_height_and_width(self, poset_p):
        assert PG.height(poset_p) == 3
        assert PG.height(Poset.antichain(4)) == 1
        assert PG.width(Poset.antichain(4)) == 4
        assert PG.width(Poset.chain(4)) == 1


class TestColorings:
    def test_triangle_needs_three_colors(self):
        k3 = Graph.complete(3)
        assert PG.count_colorings(k3, Composition((1, 1, 1))) == 6
        assert PG.count_colorings(k3, Composition((2, 1))) == 0
        assert PG.total_proper_colorings(k3, 3) == 6

    def test_chromatic_polynomial_of_path(self):
        path = Graph.path(3)
        # k(k-1)^2
        assert PG.total_proper_colorings(path, 2) == 2
        assert PG.total_proper_colorings(path, 3) == 12

    def test_q_count_on_an_edge(self):
        assert PG.count_colorings_q(Graph.complete(2), Composition((1, 1))) == ONE + q

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            PG.count_colorings(Graph.path(3), Composition((1, 1)))


class TestFreenessAndUnitIntervalOrders:
    def test_ab_freeness(self):
        assert not PG.is_ab_free(two_plus_two(), 2, 2)
        assert PG.is_ab_free(two_plus_two(), 3, 1)
        assert not PG.is_ab_free(three_plus_one(), 3, 1)
        assert not PG.is_unit_interval_order(three_plus_one())
        with pytest.raises(ValidationError):
            PG.is_ab_free(two_plus_two(), 0, 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_unit_interval_orders_are_catalan_many(self, n):
        orders = PG.all_unit_interval_orders(n)
        assert len(orders) == len(avoiders_of(n))
        for poset in orders:
            assert PG.is_unit_interval_order(poset)
            assert PG.is_canonically_labeled(poset)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_bijection_round_trip(self, n):
        for w in avoiders_of(n):
            assert PG.uio_to_312_avoiding(PG.uio_from_312_avoiding(w)) == w

    def test_extreme_posets(self):
        assert PG.uio_to_312_avoiding(Poset.chain(4)) == Permutation.identity(4)
        assert PG.uio_to_312_avoiding(Poset.antichain(4)) == Permutation.longest(4)

    def test_natural_unit_interval_orders(self):
        for k in range(0, 4):
            assert PG.is_unit_interval_order(Poset.natural_unit_interval(5, k))

    def test_relabeled_input_is_canonicalized(self):
        poset = Poset.from_relations(3, [(2, 1)])
        assert not poset.is_naturally_labeled()
        w = PG.uio_to_312_avoiding(poset)
        assert PG.are_isomorphic(PG.uio_from_312_avoiding(w), poset)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            PG.uio_to_312_avoiding(three_plus_one())
        with pytest.raises(ValidationError):
            PG.uio_from_312_avoiding(Permutation.parse("312"))


class TestOrientationsAndCovers:
    def test_acyclic_orientation_counts(self):
        assert len(PG.acyclic_orientations(Graph.path(5))) == 16
        assert len(PG.acyclic_orientations(Graph.complete(3))) == 6
        for orientation in PG.acyclic_orientations(Graph.cycle(4)):
            assert orientation.is_acyclic()

    def test_orientations_by_sources(self):
        assert PG.count_orientations_by_sources(Graph.path(3)) == {1: 3, 2: 1}

    def test_ordered_set_partitions(self):
        blocks = PG.ordered_set_partitions(3, (2, 1))
        assert blocks == [((1, 2), (3,)), ((1, 3), (2,)), ((2, 3), (1,))]
        with pytest.raises(ValidationError):
            PG.ordered_set_partitions(3, (2, 2))

    def test_induced_subgraph_partitions(self):
        pieces = PG.ordered_induced_subgraph_partitions(Graph.path(3), (2, 1))
        assert len(pieces) == 3
        assert pieces[0][1][0] == Graph.path(2)

    def test_cycle_covers_of_small_ngr(self):
        chain = PG.ngr(Poset.chain(2))
        assert PG.ordered_disjoint_cycle_covers(chain, Partition((1, 1))) == 2
        assert PG.ordered_disjoint_cycle_covers(chain, Partition((2,))) == 0
        complete = PG.ngr(Poset.antichain(3))
        assert PG.ordered_disjoint_cycle_covers(complete, Partition((3,))) == 2
        assert PG.ordered_disjoint_cycle_covers(complete, Partition((3,)), rooted=True) == 6
        assert PG.disjoint_cycle_cover_sets(complete, Partition((1, 1, 1))) == 1


class TestEnumeration:
    def test_poset_counts_up_to_isomorphism(self):
        assert [len(PG.all_posets(n)) for n in range(0, 6)] == [1, 1, 2, 5, 16, 63]

    def test_enumerated_posets_are_naturally_labeled(self):
        for poset in PG.all_posets(4):
            assert poset.is_naturally_labeled()

    def test_random_poset_is_seeded(self, rng):
        first = PG.random_poset(6, random.Random(3))
        second = PG.random_poset(6, random.Random(3))
        assert first == second
        assert PG.random_poset(6, rng).is_naturally_labeled()
