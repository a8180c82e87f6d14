import math

import pytest

from models.partition import Composition, DescentSet, Partition, partitions_of
from models.poset import Graph, Poset
from models.scalar import ONE, ZERO, at_q_one
from models.symfunc import BasisTag, SymFunc
from models.trace import TraceBasis
from services.chromatic import ChromaticService as C
from services.posets_graphs import PosetGraphService
from services.sn_algebra import TraceService
from services.symmetric_functions import SymmetricFunctionService
from utils.error_handler import DomainError, SymmetryError

COUNTEREXAMPLE_PHI = {
    (5,): 5, (4, 1): 3, (3, 2): 7, (2, 2, 1): 1, (3, 1, 1): 0, (2, 1, 1, 1): 0, (1, 1, 1, 1, 1): 0,
}


@pytest.fixture(autouse=True)
def fresh_cache():
    C.clear_cache()
    yield
    C.clear_cache()


class TestExpansions:
    def test_triangle(self):
        X = C.expansion(Graph.complete(3), 'e')
        assert X == SymFunc(3, BasisTag.ELEMENTARY, {Partition((3,)): 6 * ONE})

    def test_path_on_three_vertices(self):
        X = C.expansion(Graph.path(3), BasisTag.ELEMENTARY)
        assert X == SymFunc(3, BasisTag.ELEMENTARY, {Partition((3,)): 3 * ONE, Partition((2, 1)): ONE})

    def test_edgeless_graph_is_p1_power(self):
        X = C.expansion(Graph.edgeless(3), BasisTag.POWER)
        assert X == SymFunc.basis_element(BasisTag.POWER, Partition((1, 1, 1)))

    def test_monomial_coefficients_count_colorings(self, poset_p):
        graph = poset_p.incomparability_graph()
        X = C.chromatic_symfunc(graph)
        for lam in partitions_of(5):
            assert X.coefficient(lam) == PosetGraphService.count_colorings(graph, Composition(lam.parts))

    def test_all_bases_describe_the_same_function(self, poset_p):
        graph = poset_p.incomparability_graph()
        monomial = C.chromatic_symfunc(graph)
        for f in C.expansions(graph).values():
            assert SymmetricFunctionService.convert(f, BasisTag.MONOMIAL) == monomial

    def test_q_expansion_specializes(self):
        graph = Poset.natural_unit_interval(4).incomparability_graph()
        X_q = C.expansion(graph, BasisTag.ELEMENTARY, use_q=True)
        X = C.expansion(graph, BasisTag.ELEMENTARY)
        assert {lam: at_q_one(c) for lam, c in X_q.items()} == dict(X.items())

    def test_non_symmetric_q_function(self):
        # 中间顶点标号最大时 X_{G,q} 不对称
        graph = Graph.from_edges(3, [(1, 3), (2, 3)])
        with pytest.raises(SymmetryError) as excinfo:
            C.chromatic_symfunc_q(graph)
        assert excinfo.value.witness is not None


class TestTraceTables:
    def test_counterexample_monomial_traces(self, poset_p):
        table = C.poset_trace_table(poset_p, TraceBasis.PHI)
        assert {lam.parts: value for lam, value in table.items()} == COUNTEREXAMPLE_PHI

    def test_triangle_traces(self):
        graph = Graph.complete(3)
        assert C.trace_value(graph, 'phi', Partition((3,))) == 6
        assert C.trace_value(graph, 'epsilon', Partition((1, 1, 1))) == 6
        assert C.trace_value(graph, 'epsilon', Partition((2, 1))) == 0
        assert C.trace_value(graph, 'chi', Partition((3,))) == 6
        assert C.trace_value(graph, 'chi', Partition((1, 1, 1))) == 0

    @pytest.mark.parametrize("basis", list(TraceBasis))
    def test_reading_agrees_with_trace_pairing(self, poset_p, basis):
        graph = poset_p.incomparability_graph()
        for lam in partitions_of(5):
            theta = TraceService.trace_basis(5, basis, lam)
            assert C.trace_of_graph(theta, graph) == C.trace_value(graph, basis, lam)

    def test_realization_route(self):
        graph = Graph.path(4)
        for lam in partitions_of(4):
            theta = TraceService.trace_basis(4, TraceBasis.CHI, lam)
            assert C.trace_of_graph_by_realization(theta, graph) == C.trace_of_graph(theta, graph)

    def test_factorization_through_induced_product(self, rng):
        graph = Graph.path(4)
        left = TraceService.random_trace(2, rng)
        right = TraceService.random_trace(2, rng)
        induced = C.induced_product(left, right)
        assert C.trace_of_graph(induced, graph) == C.trace_factorization(left, right, graph)

    def test_q_table_requires_canonical_uio(self):
        three_plus_one = Poset.from_relations(4, [(1, 2), (2, 3)])
        with pytest.raises(DomainError):
            C.poset_trace_table(three_plus_one, TraceBasis.PHI, use_q=True)
        with pytest.raises(DomainError):
            C.poset_trace_table(Poset.from_relations(3, [(2, 1)]), TraceBasis.PHI, use_q=True)


class TestFundamentalCoefficients:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_census_sums_to_factorial(self, n):
        for poset in PosetGraphService.all_posets(n):
            xi = C.fundamental_coefficients(poset)
            assert sum(xi.values(), ZERO) == math.factorial(n)

    def test_chain_is_descent_counting(self):
        xi = C.fundamental_coefficients(Poset.chain(3))
        assert xi == {
            DescentSet(3, ()): ONE,
            DescentSet(3, (1,)): 2 * ONE,
            DescentSet(3, (2,)): 2 * ONE,
            DescentSet(3, (1, 2)): ONE,
        }


class TestIdentities:
    @pytest.mark.parametrize("graph", [Graph.path(4), Graph.complete(3), Graph.cycle(4), Graph.edgeless(3)])
    def test_trace_identities(self, graph):
        assert C.verify_trace_identities(graph).passed

    def test_sources_and_records(self, poset_p):
        assert C.k_source_check(poset_p.incomparability_graph()).passed
        assert C.k_source_check(Graph.cycle(4)).passed
        assert C.k_record_check(poset_p).passed

    def test_monomial_special_cases(self, poset_p):
        assert C.monomial_special_cases(poset_p).passed
        for poset in PosetGraphService.all_unit_interval_orders(4):
            report = C.monomial_special_cases(poset)
            assert report.passed, report.failures

    def test_unit_interval_orders_match_kl_elements(self):
        for n in range(1, 5):
            for poset in PosetGraphService.all_unit_interval_orders(n):
                assert C.uio_kl_consistency(poset)

    def test_q_sums_agree(self, poset_p):
        for poset in (Poset.natural_unit_interval(4), poset_p):
            sums = C.q_trace_sums(poset)
            totals = list(sums['totals'].values())
            assert all(total == totals[0] for total in totals)
            by_k = sums['by_k']
            assert by_k['monomial'] == by_k['orientations'] == by_k['descent_free']

    def test_bruhat_interval_is_excedance_free(self):
        for poset in PosetGraphService.all_unit_interval_orders(4):
            assert C.bruhat_excedance_check(poset)
