import pytest

from models.partition import DescentSet, Partition, partitions_of
from models.scalar import ONE, rational
from models.symfunc import BasisTag, QSymKind, SymFunc
from services.symmetric_functions import SymmetricFunctionService as S
from utils.error_handler import ValidationError


def e(*parts):
    return Partition(parts)


class TestTransitions:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_kostka_times_inverse_is_identity(self, n):
        assert S.kostka(n).compose(S.inverse_kostka(n)).is_identity()

    def test_kostka_numbers(self):
        assert S.kostka_number(e(2, 1), e(1, 1, 1)) == 2
        assert S.kostka_number(e(3, 2), e(2, 2, 1)) == 2
        assert S.kostka_number(e(2, 2), e(3, 1)) == 0
        with pytest.raises(ValidationError):
            S.kostka_number(e(2), e(1, 1, 1))

    def test_schur_3111_in_elementary_two_routes(self):
        expected = SymFunc(6, BasisTag.ELEMENTARY, {
            e(4, 1, 1): ONE, e(4, 2): -ONE, e(5, 1): -ONE, e(6): ONE,
        })
        s3111 = SymFunc.basis_element(BasisTag.SCHUR, e(3, 1, 1, 1))
        assert S.convert(s3111, BasisTag.ELEMENTARY) == expected
        assert S.ribbon_expansion(e(3, 1, 1, 1)) == {e(4, 1, 1): 1, e(4, 2): -1, e(5, 1): -1, e(6): 1}

    def test_power_sum_in_elementary(self):
        p3 = SymFunc.basis_element(BasisTag.POWER, e(3))
        assert S.convert(p3, BasisTag.ELEMENTARY) == SymFunc(3, BasisTag.ELEMENTARY, {
            e(3): 3 * ONE, e(2, 1): -3 * ONE, e(1, 1, 1): ONE,
        })

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_round_trip_through_every_basis(self, n):
        f = SymFunc(n, BasisTag.MONOMIAL, {lam: rational(i + 1, 2) for i, lam in enumerate(partitions_of(n))})
        for tag in BasisTag:
            assert S.convert(S.convert(f, tag), BasisTag.MONOMIAL) == f

    def test_monomial_oracle_of_elementary(self):
        # e_2 在三个变量中是 x1x2 + x1x3 + x2x3
        terms = S.monomial_oracle(BasisTag.ELEMENTARY, e(2), 3)
        assert sorted(terms) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
        with pytest.raises(ValidationError):
            S.monomial_oracle(BasisTag.ELEMENTARY, e(2, 1), 2)


class TestCharacters:
    def test_small_character_values(self):
        assert S.character(e(2, 1), e(1, 1, 1)) == 2
        assert S.character(e(2, 1), e(2, 1)) == 0
        assert S.character(e(2, 1), e(3)) == -1
        assert S.character(e(1, 1, 1), e(2, 1)) == -1

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_murnaghan_nakayama_agrees_with_table(self, n):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                assert S.murnaghan_nakayama(mu, lam) == S.character(mu, lam)

    def test_row_orthogonality(self):
        for mu in partitions_of(4):
            total = sum((S.character(mu, lam) ** 2 * rational(1, lam.z()) for lam in partitions_of(4)), 0 * ONE)
            assert total == ONE


class TestOmegaAndProducts:
    def test_omega_two_ways(self):
        for lam in partitions_of(4):
            f = SymFunc.basis_element(BasisTag.SCHUR, lam)
            direct = S.convert(S.omega(f), BasisTag.SCHUR)
            assert direct == SymFunc.basis_element(BasisTag.SCHUR, lam.transpose())
            assert S.omega_by_generator_swap(f) == direct

    def test_multiply_elementary(self):
        e1 = SymFunc.basis_element(BasisTag.ELEMENTARY, e(1))
        e2 = SymFunc.basis_element(BasisTag.ELEMENTARY, e(2))
        assert S.multiply(e2, e1) == SymFunc.basis_element(BasisTag.ELEMENTARY, e(2, 1))

    def test_cycle_removal_coefficients(self):
        assert S.cycle_removal_coeff(e(3)) == 3
        assert S.cycle_removal_coeff(e(2, 1)) == 3
        assert S.cycle_removal_coeff(e(1, 1, 1)) == 1
        for n in range(1, 6):
            via_cycles = SymFunc(n, BasisTag.ELEMENTARY, {
                mu: S.cycle_removal_coeff(mu) * mu.sign() for mu in partitions_of(n)
            })
            p_n = SymFunc.basis_element(BasisTag.POWER, e(n))
            assert S.convert(p_n, BasisTag.ELEMENTARY) == via_cycles


class TestQuasisymmetric:
    def test_schur_21_fundamental_expansion(self):
        s21 = SymFunc.basis_element(BasisTag.SCHUR, e(2, 1))
        g = S.to_fundamental(s21)
        assert g.kind == QSymKind.FUNDAMENTAL
        assert g.coeffs == {DescentSet(3, (1,)): ONE, DescentSet(3, (2,)): ONE}

    def test_b_statistic_counts_standard_tableaux(self):
        assert sum(S.b_statistic(e(2, 1), D) for D in (DescentSet(3, ()), DescentSet(3, (1,)),
                                                        DescentSet(3, (2,)), DescentSet(3, (1, 2)))) == 2

    def test_qsym_round_trips(self):
        for lam in partitions_of(4):
            f = SymFunc.basis_element(BasisTag.HOMOGENEOUS, lam)
            g = S.symmetric_to_qsym(f)
            assert S.rearrangement_witness(g) is None
            assert S.qsym_m_to_f(g) == S.to_fundamental(f)
            assert S.qsym_f_to_m(S.qsym_m_to_f(g)) == g
            assert S.qsym_to_symmetric(g) == S.convert(f, BasisTag.MONOMIAL)


def hall_inner_product(f: SymFunc, g: SymFunc):
    """Hall 内积：Schur 基是正交归一基"""
    left = S.convert(f, BasisTag.SCHUR)
    right = S.convert(g, BasisTag.SCHUR)
    return sum((c * right.coefficient(lam) for lam, c in left.items()), 0 * ONE)


class TestHallInnerProduct:
    def test_homogeneous_and_monomial_are_dual(self):
        for lam in partitions_of(4):
            h = SymFunc.basis_element(BasisTag.HOMOGENEOUS, lam)
            for mu in partitions_of(4):
                m = SymFunc.basis_element(BasisTag.MONOMIAL, mu)
                assert hall_inner_product(h, m) == (ONE if lam == mu else 0 * ONE)

    def test_power_sums_are_orthogonal(self):
        for lam in partitions_of(4):
            p = SymFunc.basis_element(BasisTag.POWER, lam)
            assert hall_inner_product(p, p) == lam.z()
            other = SymFunc.basis_element(BasisTag.POWER, e(4) if lam != e(4) else e(1, 1, 1, 1))
            assert hall_inner_product(p, other) == 0

    def test_omega_is_an_isometry(self):
        f = SymFunc.basis_element(BasisTag.ELEMENTARY, e(2, 1))
        g = SymFunc.basis_element(BasisTag.POWER, e(3))
        assert hall_inner_product(S.omega(f), S.omega(g)) == hall_inner_product(f, g)
