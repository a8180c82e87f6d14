import pytest

from models.partition import (
    Composition,
    DescentSet,
    Partition,
    compositions_of,
    descent_sets_of,
    multinomial,
    partitions_of,
    rearrangements,
)
from models.scalar import (
    ONE,
    ZERO,
    at_q_one,
    format_scalar,
    has_nonnegative_coefficients,
    is_nonnegative,
    parse_scalar,
    q,
    q_factorial,
    q_int,
    rational,
)
from utils.error_handler import DomainError, ValidationError


class TestScalar:
    def test_format_rational_and_polynomial(self):
        assert format_scalar(rational(-1, 2)) == "-1/2"
        assert format_scalar(ZERO) == "0"
        assert format_scalar(q ** 2 + 2 * q + 1) == "q^2 + 2*q + 1"
        assert format_scalar(rational(3, 2) * q ** 2 - 1) == "3/2*q^2 - 1"

    def test_parse_inverts_format(self):
        value = rational(3, 2) * q ** 2 - q + rational(1, 6)
        assert parse_scalar(format_scalar(value)) == value
        assert parse_scalar("−1") == -ONE

    def test_parse_garbage_raises(self):
        with pytest.raises(ValidationError):
            parse_scalar("q +* 1")
        with pytest.raises(ValidationError):
            parse_scalar("")

    def test_q_integers(self):
        assert q_int(0) == ZERO
        assert q_int(3) == 1 + q + q ** 2
        assert q_factorial(3) == (1 + q) * (1 + q + q ** 2)
        assert at_q_one(q_factorial(4)) == 24
        with pytest.raises(ValidationError):
            q_int(-1)

    def test_nonnegativity(self):
        assert is_nonnegative(rational(1, 3))
        assert not is_nonnegative(rational(-1, 3))
        assert has_nonnegative_coefficients(q ** 2 + 3)
        with pytest.raises(DomainError):
            is_nonnegative(q - 1)


class TestPartition:
    @pytest.mark.parametrize("text", ["3,1,1", "311", "31^2"])
    def test_parse_forms(self, text):
        assert Partition.parse(text) == Partition((3, 1, 1))

    def test_parse_exponential_with_spaces(self):
        assert Partition.parse("4^2 1^6") == Partition((4, 4, 1, 1, 1, 1, 1, 1))

    def test_parse_parts_of_ten_or_more(self):
        assert Partition.parse("10") == Partition((10,))
        assert Partition.parse("10,2") == Partition((10, 2))
        assert Partition.parse("20 1") == Partition((20, 1))
        assert Partition.parse("21") == Partition((2, 1))

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValidationError):
            Partition((1, 2))
        with pytest.raises(ValidationError):
            Partition.parse("3,x")

    def test_basic_statistics(self):
        lam = Partition((3, 1, 1))
        assert lam.n == 5
        assert lam.ell == 3
        assert lam.transpose() == Partition((3, 1, 1))
        assert Partition((4, 2)).transpose() == Partition((2, 2, 1, 1))
        assert lam.z() == 6
        assert lam.sign() == 1
        assert Partition((2, 1)).sign() == -1
        assert lam.is_hook() and not lam.is_rectangle()
        assert Partition((2, 2)).is_rectangle()
        assert Partition.hook(5, 3) == lam

    def test_partition_counts_and_order(self):
        assert [len(partitions_of(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]
        assert partitions_of(4)[0] == Partition((4,))
        assert partitions_of(4)[-1] == Partition((1, 1, 1, 1))

    def test_class_sizes_sum_to_factorial(self):
        assert sum(lam.class_size() for lam in partitions_of(5)) == 120


class TestCompositionsAndDescentSets:
    def test_descent_set_composition_bijection(self):
        for n in range(1, 6):
            assert len(descent_sets_of(n)) == 2 ** (n - 1)
            assert [S.composition().descent_set() for S in descent_sets_of(n)] == list(descent_sets_of(n))
            assert len(compositions_of(n)) == 2 ** (n - 1)

    def test_complement_and_parse(self):
        S = DescentSet.parse(5, "{1,3}")
        assert S.elements == (1, 3)
        assert S.complement() == DescentSet(5, (2, 4))
        assert S.composition() == Composition((1, 2, 2))
        with pytest.raises(ValidationError):
            DescentSet(3, (3,))

    def test_rearrangements(self):
        assert len(rearrangements(Partition((2, 1, 1)))) == 3
        assert multinomial([2, 1, 1]) == 12
        assert Composition((1, 3, 1)).rearrangement_class() == Partition((3, 1, 1))
