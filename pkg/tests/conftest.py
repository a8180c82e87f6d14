"""共用夹具：五元反例偏序集、阶梯网络及其路径矩阵、固定种子的随机源"""
import random

import pytest

from models.matrix import Matrix
from models.poset import Poset
from services.planar_network import staircase_network
from services.verification_suites import STAIRCASE_MATRIX, counterexample_poset


@pytest.fixture
def poset_p() -> Poset:
    return counterexample_poset()


@pytest.fixture
def network_d():
    return staircase_network()


@pytest.fixture
def matrix_a() -> Matrix:
    return Matrix.from_rows(STAIRCASE_MATRIX)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(7)
