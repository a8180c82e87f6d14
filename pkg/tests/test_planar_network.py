import random

import pytest

from models.network import NetworkEdge, Path, PlanarNetwork, Skeleton
from models.partition import Partition, partitions_of
from models.permutation import Permutation
from models.scalar import ONE, scalar
from models.trace import TraceBasis
from services.immanants import ImmanantService
from services.planar_network import PlanarNetworkService, staircase_network
from services.sn_algebra import TraceService
from utils.config_service import ConfigService
from utils.error_handler import SizeLimitError, ValidationError


@pytest.fixture
def service():
    return PlanarNetworkService()


@pytest.fixture
def pool():
    return ImmanantService.parse_weight_pool("0,1,2,1/2,3")


def parallel_paths(a, b):
    return PlanarNetwork(
        vertices=('s1', 'x', 'y', 't1'),
        edges=(
            NetworkEdge('s1', 'x', scalar(a)), NetworkEdge('x', 't1', ONE),
            NetworkEdge('s1', 'y', scalar(b)), NetworkEdge('y', 't1', ONE),
        ),
        sources=('s1',),
        sinks=('t1',),
    )


class TestPathMatrix:
    def test_staircase(self, network_d, matrix_a):
        assert PlanarNetworkService.path_matrix(network_d) == matrix_a

    def test_parallel_paths_add(self):
        A = PlanarNetworkService.path_matrix(parallel_paths(2, 3))
        assert A(1, 1) == 5

    def test_json_round_trip(self, network_d):
        again = PlanarNetwork.from_dict(network_d.to_dict())
        assert PlanarNetworkService.path_matrix(again) == PlanarNetworkService.path_matrix(network_d)

    def test_default_weights(self):
        edge = NetworkEdge('s1', 't1')
        assert edge.weight == ONE
        assert Skeleton((1, 2)).weight == ONE
        assert Path(1, 1, (0,), ('s1', 't1')).weight == ONE

    def test_cycle_rejected(self):
        with pytest.raises(ValidationError):
            PlanarNetwork.from_dict({
                'sources': ['s1'], 'sinks': ['t1'],
                'edges': [{'u': 's1', 'v': 'a'}, {'u': 'a', 'v': 'b'}, {'u': 'b', 'v': 'a'}, {'u': 'b', 'v': 't1'}],
            })


class TestFamilies:
    def test_staircase_family_count(self, service, network_d):
        families = service.enumerate_families(network_d)
        assert len(families) == 16
        identity = service.enumerate_families(network_d, Permutation.identity(5))
        assert len(identity) == 1

    def test_identity_family_poset(self, service, network_d, poset_p):
        family = service.enumerate_families(network_d, Permutation.identity(5))[0]
        assert service.poset_of_family(family) == poset_p

    def test_skeletons_partition_the_families(self, service, network_d):
        skeletons = service.skeletons(network_d)
        assert sum(len(families) for families in skeletons.values()) == 16
        for families in skeletons.values():
            z = service.z_of_skeleton(families)
            assert sum(z.terms.values(), 0 * ONE) == len(families)

    def test_family_statistics(self, service, network_d):
        stats = service.family_statistics(service.enumerate_families(network_d))
        assert sum(stats.values()) == 16
        assert stats[Permutation.identity(5).compact()] == 1

    def test_family_limit(self, network_d):
        config = ConfigService(overrides={'max_families': 3})
        with pytest.raises(SizeLimitError):
            PlanarNetworkService(config).enumerate_families(network_d)


class TestInterpretations:
    def test_lindstrom_on_staircase(self, service, network_d):
        assert service.verify_lindstrom(network_d).passed

    def test_lindstrom_on_random_networks(self, service, pool):
        rng = random.Random(7)
        for _ in range(5):
            network = PlanarNetworkService.random_network(3, rng, pool)
            assert service.verify_lindstrom(network).passed

    def test_skeleton_decomposition_phi_32(self, service, network_d):
        theta = TraceService.trace_basis(5, TraceBasis.PHI, Partition((3, 2)))
        report = service.skeleton_decomposition_check(network_d, theta)
        assert report.passed
        assert report.cases[-1].actual == 7

    def test_hook_and_permanent(self, service, network_d):
        assert service.hook_immanant_check(network_d).passed
        assert service.permanent_check(network_d).passed

    def test_eta_power_epsilon_on_random_networks(self, service, pool):
        rng = random.Random(11)
        network = PlanarNetworkService.random_network(4, rng, pool, gaps=2)
        for lam in partitions_of(4):
            assert service.eta_immanant_check(network, lam).passed
            assert service.power_immanant_check(network, lam).passed
            assert service.epsilon_immanant_check(network, lam).passed

    def test_rectangular_formula(self, service, pool):
        rng = random.Random(3)
        for _ in range(3):
            network = PlanarNetworkService.random_network(4, rng, pool, gaps=2)
            assert service.stembridge_rectangular_check(network, Partition((2, 2))).passed

    def test_non_rectangular_counterexample(self, service, network_d):
        shape = Partition((3, 2))
        assert service.pi_tableau_counts(network_d, shape, 'column_strict_cylindrical') == 4
        report = service.stembridge_rectangular_check(network_d, shape)
        case = report.cases[0]
        assert case.expected_divergence
        assert (case.expected, case.actual) == (7, 4)

    def test_unknown_pi_predicate(self, service, network_d):
        family = service.enumerate_families(network_d)[0]
        with pytest.raises(ValidationError):
            service.pi_tableaux(family, Partition((5,)), 'row_strict')


class TestRandomNetworks:
    def test_seeded(self, pool):
        first = PlanarNetworkService.random_network(3, random.Random(9), pool)
        second = PlanarNetworkService.random_network(3, random.Random(9), pool)
        assert PlanarNetworkService.path_matrix(first) == PlanarNetworkService.path_matrix(second)
        assert first.to_dict() == second.to_dict()

    def test_path_matrices_are_totally_nonnegative(self, pool):
        rng = random.Random(5)
        for _ in range(3):
            A = PlanarNetworkService.path_matrix(PlanarNetworkService.random_network(3, rng, pool))
            assert ImmanantService.is_totally_nonnegative(A)

    def test_staircase_builder(self):
        assert staircase_network().n == 5

    def test_implication_suite(self, service):
        assert service.tnn_implication_suite(3, random.Random(7), trials=2).passed
