import random

import pytest

from models.matrix import Matrix
from models.partition import Partition, partitions_of
from models.scalar import ONE, ZERO, q, rational
from models.trace import TraceBasis
from services.immanants import ImmanantService as I
from services.sn_algebra import TraceService
from utils.error_handler import DomainError, ValidationError

STAIRCASE_PHI = {
    (5,): 5, (4, 1): 3, (3, 2): 7, (2, 2, 1): 1, (3, 1, 1): 0, (2, 1, 1, 1): 0, (1, 1, 1, 1, 1): 0,
}


class TestMatrixFunctions:
    def test_staircase_matrix(self, matrix_a):
        assert I.perm(matrix_a) == 16
        assert I.det(matrix_a) == 0
        assert I.minor(matrix_a, (1, 2), (1, 2)) == 0
        assert I.minor(matrix_a, (1, 3), (1, 3)) == 1

    def test_small_values(self):
        assert I.det(Matrix.identity(4)) == 1
        assert I.perm(Matrix.ones(3)) == 6
        assert I.det(Matrix.ones(3)) == 0
        assert I.det(Matrix.from_rows([["1/2", "1"], ["1", "3"]])) == rational(1, 2)

    def test_polynomial_entries(self):
        A = Matrix.from_rows([[ONE, q], [q, ONE]])
        assert I.det(A) == 1 - q ** 2
        assert I.perm(A) == 1 + q ** 2

    def test_total_nonnegativity(self, matrix_a):
        assert I.is_totally_nonnegative(matrix_a)
        assert not I.is_totally_nonnegative(Matrix.from_rows([[0, 1], [1, 0]]))
        with pytest.raises(DomainError):
            I.is_totally_nonnegative(Matrix.from_rows([[q]]))

    def test_non_square_rejected(self):
        with pytest.raises(ValidationError):
            Matrix.from_rows([[1, 2], [3]])


class TestImmanants:
    def test_epsilon_and_eta_rows_are_det_and_perm(self, matrix_a):
        assert I.basis_immanant(TraceBasis.EPSILON, Partition((5,)), matrix_a) == I.det(matrix_a)
        assert I.basis_immanant(TraceBasis.ETA, Partition((5,)), matrix_a) == I.perm(matrix_a)
        assert I.basis_immanant('epsilon', Partition((3,)), Matrix.identity(3)) == 1

    def test_monomial_immanants_of_staircase(self, matrix_a):
        for lam in partitions_of(5):
            assert I.basis_immanant(TraceBasis.PHI, lam, matrix_a) == STAIRCASE_PHI[lam.parts]

    def test_power_immanant_by_cycle_type(self, rng):
        pool = I.parse_weight_pool("0,1,2,1/2,3")
        A = I.random_matrix(4, rng, pool)
        for lam in partitions_of(4):
            assert I.power_immanant_by_cycle_type(lam, A) == I.basis_immanant(TraceBasis.PSI, lam, A)

    def test_size_mismatch(self, matrix_a):
        with pytest.raises(ValidationError):
            I.immanant(TraceService.trace_basis(4, TraceBasis.CHI, Partition((4,))), matrix_a)


class TestIdentities:
    def test_lmw_on_random_matrices(self, rng):
        pool = I.parse_weight_pool("0,1,2,1/2,3")
        for _ in range(3):
            A = I.random_matrix(4, rng, pool)
            for lam in partitions_of(4):
                assert I.verify_lmw(A, lam).passed

    def test_muir(self, rng, matrix_a):
        pool = I.parse_weight_pool("0,1,2,1/2,3")
        assert I.verify_muir(I.random_matrix(4, rng, pool)).passed
        assert I.verify_muir(matrix_a).passed
        assert I.verify_muir(Matrix(())).passed

    def test_factorization(self, rng):
        pool = I.parse_weight_pool("0,1,2,1/2,3")
        A = I.random_matrix(4, rng, pool)
        left = TraceService.random_trace(1, rng)
        right = TraceService.random_trace(3, rng)
        assert I.verify_factorization(left, right, A).passed


class TestWeightPool:
    def test_parse(self):
        assert I.parse_weight_pool("0, 1, 1/2") == [ZERO, ONE, rational(1, 2)]

    @pytest.mark.parametrize("text", ["", "1,x", " , "])
    def test_errors(self, text):
        with pytest.raises(ValidationError):
            I.parse_weight_pool(text)

    def test_random_matrix_is_seeded(self):
        pool = I.parse_weight_pool("1,2,3")
        assert I.random_matrix(3, random.Random(5), pool) == I.random_matrix(3, random.Random(5), pool)
