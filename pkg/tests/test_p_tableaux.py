import pytest

from models.partition import DescentSet, Partition
from models.permutation import permutations_of
from models.poset import Poset
from models.scalar import q, q_factorial
from models.tableau import PPermutation, PTableau
from services.p_tableaux import PTableauService as T
from services.posets_graphs import PosetGraphService
from utils.error_handler import ValidationError


class TestTableauModel:
    def test_content_must_be_a_permutation(self):
        P = Poset.natural_unit_interval(5)
        with pytest.raises(ValidationError):
            PTableau(P, ((1, 2), (3, 4)))
        with pytest.raises(ValidationError):
            PTableau(P, ((1,), (2, 3, 4, 5)))

    def test_shape_and_columns(self):
        U = PTableau(Poset.natural_unit_interval(5), ((1, 3, 2), (4, 5)))
        assert U.shape == Partition((3, 2))
        assert U.columns() == [(1, 4), (3, 5), (2,)]
        assert U.sorted_row(1) == (1, 2, 3)

    def test_from_dict_checks_declared_shape(self):
        P = Poset.chain(3)
        assert PTableau.from_dict(P, {'rows': [[1, 2], [3]]}).shape == Partition((2, 1))
        with pytest.raises(ValidationError):
            PTableau.from_dict(P, {'shape': [3], 'rows': [[1, 2], [3]]})


class TestStatistics:
    def test_statistics_of_a_small_tableau(self):
        U = PTableau(Poset.natural_unit_interval(5), ((1, 3, 2), (4, 5)))
        stats = T.statistics(U)
        assert stats == {'des': 0, 'exc': 0, 'records': 3, 'pinv': 1, 'inv': 1}
        assert T.nontrivial_records(U) == 1

    def test_single_row_carries_permutation_statistics(self):
        w = PPermutation(Poset.chain(3), (3, 1, 2))
        stats = T.statistics(w)
        assert stats['pdes'] == 1
        assert stats['pasc'] == 1
        assert stats['pexc'] == 1
        assert stats['paexc'] == 2

    def test_descent_set(self):
        w = PPermutation(Poset.chain(4), (2, 1, 4, 3))
        assert T.descent_set(w) == DescentSet(4, (1, 3))
        with pytest.raises(ValidationError):
            T.descent_set(PTableau(Poset.chain(3), ((1, 2), (3,))))


class TestEnumeration:
    def test_counterexample_counts(self, poset_p):
        shape = Partition((3, 2))
        assert T.enumerate(poset_p, shape, 'standard_and_cyclic') == 4
        assert T.enumerate(poset_p, shape, 'standard_and_record_free') == 5

    def test_antichain_and_chain(self):
        assert T.enumerate(Poset.antichain(3), Partition((3,)), 'descent_free') == 6
        assert T.enumerate(Poset.antichain(3), Partition((1, 1, 1)), 'column_strict') == 0
        assert T.enumerate(Poset.chain(3), Partition((1, 1, 1)), 'column_strict') == 1
        assert T.enumerate(Poset.chain(3), Partition((3,)), 'descent_free') == 1

    def test_predicates_match_filtering(self, poset_p):
        for predicate in ('standard', 'excedance_free', 'cyclically_row_semistrict', 'record_free'):
            everything = T.iter_tableaux(poset_p, Partition((3, 2)), 'any')
            filtered = sum(1 for U in everything if T.satisfies(U, predicate))
            assert filtered == T.enumerate(poset_p, Partition((3, 2)), predicate)

    def test_mahonian_q_count(self):
        assert T.q_count(Poset.antichain(3), Partition((3,)), 'any', 'inv') == q_factorial(3)
        assert T.q_count(Poset.chain(3), Partition((3,)), 'descent_free', 'pinv') == q ** 0

    def test_bad_arguments(self, poset_p):
        with pytest.raises(ValidationError):
            T.enumerate(poset_p, Partition((3, 2)), 'sorted')
        with pytest.raises(ValidationError):
            T.enumerate(poset_p, Partition((3, 1)), 'standard')
        with pytest.raises(ValidationError):
            T.q_count(poset_p, Partition((3, 2)), 'standard', 'maj')


class TestDescentFreeBijection:
    @pytest.mark.parametrize("shape", [(3, 2), (2, 2, 1), (5,)])
    def test_round_trip(self, poset_p, shape):
        for U in T.iter_tableaux(poset_p, Partition(shape), 'descent_free'):
            blocks, orientations = T.tableau_to_orientation(U)
            assert T.orientation_to_tableau(poset_p, blocks, orientations) == U

    def test_count_matches_orientations(self):
        poset = Poset.natural_unit_interval(4)
        graph = poset.incomparability_graph()
        for shape in [(4,), (2, 2), (3, 1), (2, 1, 1)]:
            expected = 0
            for _, pieces in PosetGraphService.ordered_induced_subgraph_partitions(graph, shape):
                product = 1
                for piece in pieces:
                    product *= len(PosetGraphService.acyclic_orientations(piece))
                expected += product
            assert T.enumerate(poset, Partition(shape), 'descent_free') == expected


class TestPermutationStatistics:
    def test_descent_set_census_of_chain(self):
        census = T.descent_set_census(Poset.chain(3))
        assert census == {
            DescentSet(3, ()): 1,
            DescentSet(3, (1,)): 2,
            DescentSet(3, (2,)): 2,
            DescentSet(3, (1, 2)): 1,
        }
        assert sum(T.descent_set_census(Poset.natural_unit_interval(4)).values()) == 24

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_four_statistics_equidistributed(self, n):
        for poset in PosetGraphService.all_posets(n):
            histograms = T.equidistribution_check(poset)
            assert histograms['pdes'] == histograms['pasc'] == histograms['pexc'] == histograms['paexc']

    def test_sigma_bridge(self, poset_p):
        for poset in (poset_p, Poset.natural_unit_interval(4, 2)):
            for w in permutations_of(poset.n):
                assert T.sigma_bridge_holds(poset, w)
