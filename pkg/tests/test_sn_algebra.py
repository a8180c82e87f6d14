import random

import pytest

from models.partition import Partition, partitions_of
from models.permutation import Permutation, avoiders_of, permutations_of
from models.scalar import ONE, ZERO, rational
from models.symfunc import BasisTag, SymFunc
from models.trace import GroupAlgebraElement, TraceBasis
from services.sn_algebra import SymmetricGroupService as G
from services.sn_algebra import TraceService as T
from services.symmetric_functions import SymmetricFunctionService
from utils.error_handler import DomainError, ValidationError


class TestPermutations:
    def test_cycle_type_and_sigma(self):
        w = Permutation.parse("5243761")
        assert w.cycle_type() == Partition((3, 2, 1, 1))
        assert str(w.sigma_flatten()) == "2,4,3,6,7,1,5"

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_sigma_is_a_bijection(self, n):
        for w in permutations_of(n):
            assert w.sigma_flatten().sigma_unflatten() == w

    def test_parse_rejects_non_bijection(self):
        with pytest.raises(ValidationError):
            Permutation.parse("1,1,2")

    def test_catalan_many_312_avoiders(self):
        assert [len(avoiders_of(n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]

    def test_smoothness(self):
        assert not Permutation.parse("3412").is_smooth()
        assert not Permutation.parse("4231").is_smooth()
        assert Permutation.parse("4321").is_smooth()


class TestBruhat:
    def test_identity_is_bottom_and_longest_is_top(self):
        for w in permutations_of(4):
            assert G.bruhat_leq(Permutation.identity(4), w)
            assert G.bruhat_leq(w, Permutation.longest(4))

    def test_lower_interval_sizes(self):
        assert len(G.bruhat_lower_interval(Permutation.longest(3))) == 6
        assert len(G.bruhat_lower_interval(Permutation.parse("213"))) == 2
        assert len(G.bruhat_lower_interval(Permutation.parse("231"))) == 4

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            G.bruhat_leq(Permutation.identity(2), Permutation.identity(3))

    def test_kl_element_requires_smooth(self):
        with pytest.raises(DomainError):
            G.kl_basis_element_q1(Permutation.parse("3412"))
        element = G.kl_basis_element_q1(Permutation.longest(3))
        assert element == GroupAlgebraElement.sum_of(3, permutations_of(3))

    def test_young_subgroup_order(self):
        assert len(G.young_subgroup(Partition((2, 2, 1)))) == 4


class TestTraces:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_two_routes_to_every_basis(self, n):
        for basis in TraceBasis:
            for lam in partitions_of(n):
                assert T.trace_basis(n, basis, lam) == T.trace_basis_via_frobenius(n, basis, lam)

    def test_psi_direct(self):
        for lam in partitions_of(4):
            assert T.psi_direct(lam) == T.trace_basis(4, TraceBasis.PSI, lam)

    def test_sign_and_trivial_characters(self):
        sign = T.trace_basis(3, 'epsilon', Partition((3,)))
        trivial = T.trace_basis(3, 'eta', Partition((3,)))
        assert sign(Partition((2, 1))) == -1
        assert sign(Partition((3,))) == 1
        assert all(trivial(lam) == 1 for lam in partitions_of(3))

    def test_frobenius_sends_chi_to_schur(self):
        for lam in partitions_of(4):
            image = T.frobenius(T.trace_basis(4, TraceBasis.CHI, lam))
            assert SymmetricFunctionService.convert(image, BasisTag.SCHUR) == SymFunc.basis_element(BasisTag.SCHUR, lam)

    def test_frobenius_round_trip(self, rng):
        for n in range(1, 6):
            theta = T.random_trace(n, rng)
            assert T.frobenius_inverse(T.frobenius(theta)) == theta

    def test_parse_trace(self):
        assert T.parse_trace("phi:3,2") == T.trace_basis(5, TraceBasis.PHI, Partition((3, 2)))
        with pytest.raises(ValidationError):
            T.parse_trace("phi32")
        with pytest.raises(ValidationError):
            T.parse_trace("phi:3,2", n=4)

    def test_evaluate_on_class_sum(self):
        chi = T.trace_basis(3, TraceBasis.CHI, Partition((2, 1)))
        assert T.evaluate(chi, T.class_sum(Partition((1, 1, 1)))) == 2
        assert T.evaluate(chi, T.class_sum(Partition((3,)))) == -2


class TestY:
    def test_y_of_identity_is_p1_power(self):
        for n in range(1, 5):
            y = T.y_of(GroupAlgebraElement.identity(n))
            p = SymmetricFunctionService.convert(y, BasisTag.POWER)
            assert p == SymFunc.basis_element(BasisTag.POWER, Partition((1,) * n))

    def test_six_expansions_agree(self, rng):
        for n in range(1, 5):
            g = T.random_group_element(n, rng)
            y = T.y_of(g)
            for f in T.y_expansions(g).values():
                assert SymmetricFunctionService.convert(f, BasisTag.MONOMIAL) == y
            omega_y = SymmetricFunctionService.convert(SymmetricFunctionService.omega(y), BasisTag.MONOMIAL)
            for f in T.omega_y_expansions(g).values():
                assert SymmetricFunctionService.convert(f, BasisTag.MONOMIAL) == omega_y

    def test_realize_symfunc_round_trip(self):
        f = SymFunc(4, BasisTag.SCHUR, {Partition((2, 2)): rational(3, 2), Partition((3, 1)): -ONE})
        assert T.y_of(T.realize_symfunc(f)) == SymmetricFunctionService.convert(f, BasisTag.MONOMIAL)

    def test_zero_element(self):
        y = T.y_of(GroupAlgebraElement.zero(3))
        assert y.is_zero()
        assert T.evaluate(T.trace_basis(3, TraceBasis.CHI, Partition((3,))), GroupAlgebraElement.zero(3)) == ZERO

    def test_random_elements_are_seeded(self):
        first = T.random_group_element(4, random.Random(11))
        second = T.random_group_element(4, random.Random(11))
        assert first == second
