"""对称函数服务

Λn 的六组基、过渡矩阵、Kostka 数与逆 Kostka 数（特殊带状图）、
特征标表（Murnaghan–Nakayama 作为独立校验）、ω 对合、乘法、
轮换去边系数，以及拟对称函数的 M/F 两组基。

所有过渡矩阵都以 n 元单项式展开为唯一基准，经精确线性求解得到，
并按 n 缓存（整个进程内只计算一次）。
"""
import threading
from collections import defaultdict
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring
from sympy.utilities.iterables import multiset_permutations

from models.partition import (
    Composition, DescentSet, Partition, compositions_of, descent_sets_of, partition_index, partitions_of,
)
from models.scalar import ONE, ZERO, Scalar, ScalarRing, constant_term
from models.symfunc import BasisTag, QSymFunc, QSymKind, SymFunc, TransitionMatrix
from utils.error_handler import ValidationError
from utils.logger import logger

Entries = Tuple[Tuple[Scalar, ...], ...]


def _matmul(left: Entries, right: Entries) -> Entries:
    size = len(left)
    return tuple(
        tuple(sum((left[i][k] * right[k][j] for k in range(size) if left[i][k]), ZERO) for j in range(size))
        for i in range(size)
    )


def _invert(entries: Entries) -> Entries:
    """QQ 上的精确求逆"""
    size = len(entries)
    matrix = DomainMatrix([[constant_term(c) for c in row] for row in entries], (size, size), QQ)
    inverse = matrix.inv().to_Matrix()
    return tuple(tuple(ScalarRing(QQ.from_sympy(inverse[i, j])) for j in range(size)) for i in range(size))


def _identity(size: int) -> Entries:
    return tuple(tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size))


@lru_cache(maxsize=None)
def semistandard_tableaux(shape: Tuple[int, ...], max_entry: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """
    形状 shape、元素不超过 max_entry 的半标准 Young 表

    行内弱增，列内（自下而上）严格增；rows[0] 为最下方一行。
    """
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    results = []
    filling: Dict[Tuple[int, int], int] = {}

    def place(k: int) -> None:
        if k == len(cells):
            results.append(tuple(tuple(filling[(r, c)] for c in range(length)) for r, length in enumerate(shape)))
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = max(low, filling[(r, c - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        for value in range(low, max_entry + 1):
            filling[(r, c)] = value
            place(k + 1)
        filling.pop((r, c), None)

    place(0)
    return tuple(results)


@lru_cache(maxsize=None)
def standard_tableaux(shape: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """形状 shape 的标准 Young 表（法式，rows[0] 最下方）"""
    n = sum(shape)
    results = []
    rows: List[List[int]] = [[] for _ in shape]

    def place(k: int) -> None:
        if k > n:
            results.append(tuple(tuple(row) for row in rows))
            return
        for r, length in enumerate(shape):
            if len(rows[r]) < length and (r == 0 or len(rows[r]) < len(rows[r - 1])):
                rows[r].append(k)
                place(k + 1)
                rows[r].pop()

    place(1)
    return tuple(results)


def inverse_descent_set(tableau: Tuple[Tuple[int, ...], ...]) -> DescentSet:
    """iDES(T) = {i | i+1 位于比 i 严格更高的行}"""
    row_of = {value: r for r, row in enumerate(tableau) for value in row}
    n = len(row_of)
    return DescentSet(n, tuple(i for i in range(1, n) if row_of[i + 1] > row_of[i]))


@lru_cache(maxsize=None)
def _kostka_count(shape: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    """形状 shape、内容 content 的半标准表个数：逐个剥去最大元素构成的水平带"""
    if not content:
        return 1 if not shape else 0
    size = content[-1]
    rest = content[:-1]
    total = 0

    def strips(r: int, remaining: int, inner: List[int]) -> None:
        nonlocal total
        if r == len(shape):
            if remaining == 0:
                trimmed = tuple(x for x in inner if x > 0)
                total += _kostka_count(trimmed, rest)
            return
        upper_neighbor = shape[r + 1] if r + 1 < len(shape) else 0
        for keep in range(max(upper_neighbor, shape[r] - remaining), shape[r] + 1):
            inner.append(keep)
            strips(r + 1, remaining - (shape[r] - keep), inner)
            inner.pop()

    strips(0, size, [])
    return total


def _shape_of_cells(cells) -> Optional[Tuple[int, ...]]:
    """若格子集合构成法式 Young 图则返回行长，否则返回 None"""
    if not cells:
        return ()
    rows: Dict[int, List[int]] = defaultdict(list)
    for r, c in cells:
        rows[r].append(c)
    height = max(rows) + 1
    lengths = []
    for r in range(height):
        columns = sorted(rows.get(r, []))
        if columns != list(range(len(columns))) or not columns:
            return None
        lengths.append(len(columns))
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return None
    return tuple(lengths)


@lru_cache(maxsize=None)
def _ribbon_expansion(shape: Tuple[int, ...]) -> Dict[Partition, int]:
    """
    形状 shape 的特殊带状图按类型的带号计数

    每一步从第一行末格出发沿外边缘（能向上则向上，否则向左）剥去一段前缀，
    剩余部分必须仍是 Young 图；带的符号为 (-1)^(格数-所占行数)。
    """
    if not shape:
        return {Partition(()): 1}
    cells = {(r, c) for r, length in enumerate(shape) for c in range(length)}
    result: Dict[Partition, int] = defaultdict(int)
    r, c = 0, shape[0] - 1
    strip: List[Tuple[int, int]] = []
    while c >= 0:
        strip.append((r, c))
        remainder = _shape_of_cells(cells - set(strip))
        if remainder is not None:
            sign = -1 if (len(strip) - len({row for row, _ in strip})) % 2 else 1
            for inner_type, count in _ribbon_expansion(remainder).items():
                result[Partition.of(inner_type.parts + (len(strip),))] += sign * count
        if (r + 1, c) in cells:
            r += 1
        else:
            c -= 1
    return {lam: count for lam, count in result.items() if count}


@lru_cache(maxsize=None)
def _mn_character(beta: Tuple[int, ...], cycle: Tuple[int, ...]) -> int:
    """β-集（算盘）上的 Murnaghan–Nakayama 递推"""
    if not cycle:
        return 1 if sorted(beta) == list(range(len(beta))) else 0
    r, rest = cycle[0], cycle[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        height = sum(1 for x in beta if target < x < b)
        moved = tuple(sorted((beads - {b}) | {target}))
        total += (-1) ** height * _mn_character(moved, rest)
    return total


class SymmetricFunctionService:
    """对称函数服务（过渡矩阵按 n 缓存）"""

    _lock = threading.RLock()
    _to_monomial: Dict[Tuple[int, BasisTag], Entries] = {}
    _from_monomial: Dict[Tuple[int, BasisTag], Entries] = {}

    # ==================== 单项式展开基准 ====================

    @staticmethod
    def monomial_oracle(tag: BasisTag, lam: Partition, n_vars: int) -> Dict[Tuple[int, ...], Scalar]:
        """
        基元素在 n_vars 个变量中的多项式截断

        Args:
            tag: 基
            lam: 分拆
            n_vars: 变量个数（要求 ≥ |λ|）

        Returns:
            指数向量到系数的映射

        Raises:
            ValidationError: n_vars < |λ|（会丢失信息）
        """
        tag = BasisTag.parse(tag)
        n = lam.n
        if n_vars < n:
            raise ValidationError(f"变量个数 {n_vars} 小于次数 {n}，截断会丢失信息")
        if n_vars == 0:
            return {(): ONE}
        polynomial = SymmetricFunctionService._oracle_polynomial(tag, lam, n_vars)
        return {monomial: ScalarRing(c) for monomial, c in polynomial.terms()}

    @staticmethod
    def _oracle_polynomial(tag: BasisTag, lam: Partition, n_vars: int):
        poly_ring, *xs = ring([f"x{i}" for i in range(1, n_vars + 1)], QQ)

        def product(factors) -> object:
            result = poly_ring.one
            for factor in factors:
                result *= factor
            return result

        def monomial(exponents) -> object:
            return product(x ** e for x, e in zip(xs, exponents) if e)

        if tag == BasisTag.MONOMIAL:
            padded = list(lam.parts) + [0] * (n_vars - lam.ell)
            return sum((monomial(p) for p in multiset_permutations(padded)), poly_ring.zero)
        if tag == BasisTag.ELEMENTARY:
            return product(
                sum((product(c) for c in combinations(xs, k)), poly_ring.zero) for k in lam.parts
            )
        if tag == BasisTag.HOMOGENEOUS:
            return product(
                sum((product(c) for c in combinations_with_replacement(xs, k)), poly_ring.zero) for k in lam.parts
            )
        if tag == BasisTag.POWER:
            return product(sum((x ** k for x in xs), poly_ring.zero) for k in lam.parts)
        if tag == BasisTag.SCHUR:
            total = poly_ring.zero
            for tableau in semistandard_tableaux(lam.parts, n_vars):
                total += product(xs[v - 1] for row in tableau for v in row)
            return total
        # f_λ = Σ_μ c_{λμ} h_μ，其中 m_λ = Σ_μ c_{λμ} e_μ
        m_to_e = SymmetricFunctionService.transition(lam.n, BasisTag.MONOMIAL, BasisTag.ELEMENTARY)
        total = poly_ring.zero
        for mu, c in m_to_e.apply({lam: ONE}).items():
            h_mu = SymmetricFunctionService._oracle_polynomial(BasisTag.HOMOGENEOUS, mu, n_vars)
            total += h_mu * constant_term(c)
        return total

    # ==================== 过渡矩阵 ====================

    @classmethod
    def _basis_to_monomial(cls, n: int, tag: BasisTag) -> Entries:
        key = (n, tag)
        with cls._lock:
            if key in cls._to_monomial:
                return cls._to_monomial[key]
            index = partitions_of(n)
            if n == 0 or tag == BasisTag.MONOMIAL:
                entries = _identity(len(index))
            elif tag == BasisTag.FORGOTTEN:
                entries = _matmul(cls._monomial_to_basis(n, BasisTag.ELEMENTARY),
                                  cls._basis_to_monomial(n, BasisTag.HOMOGENEOUS))
            else:
                rows = []
                for lam in index:
                    # m_μ 中 x^μ 的系数为 1，故 b_λ 的 m-系数就是 x^μ 的系数
                    terms = dict(cls._oracle_polynomial(tag, lam, n).terms())
                    rows.append(tuple(
                        ScalarRing(terms.get(tuple(mu.parts) + (0,) * (n - mu.ell), QQ.zero)) for mu in index
                    ))
                entries = tuple(rows)
            cls._to_monomial[key] = entries
            logger.debug(f"过渡矩阵 {tag.value}→m (n={n}) 已缓存")
            return entries

    @classmethod
    def _monomial_to_basis(cls, n: int, tag: BasisTag) -> Entries:
        key = (n, tag)
        with cls._lock:
            if key not in cls._from_monomial:
                cls._from_monomial[key] = _invert(cls._basis_to_monomial(n, tag))
                logger.debug(f"过渡矩阵 m→{tag.value} (n={n}) 已缓存")
            return cls._from_monomial[key]

    @classmethod
    def transition(cls, n: int, source: BasisTag, target: BasisTag) -> TransitionMatrix:
        """
        过渡矩阵 source → target

        entries[i][j] 为 source_{λ_i} 在 target 基下 λ_j 处的系数
        """
        source, target = BasisTag.parse(source), BasisTag.parse(target)
        if source == target:
            entries = _identity(len(partitions_of(n)))
        elif target == BasisTag.MONOMIAL:
            entries = cls._basis_to_monomial(n, source)
        elif source == BasisTag.MONOMIAL:
            entries = cls._monomial_to_basis(n, target)
        else:
            entries = _matmul(cls._basis_to_monomial(n, source), cls._monomial_to_basis(n, target))
        return TransitionMatrix(n, source, target, entries)

    @classmethod
    def clear_cache(cls) -> None:
        with cls._lock:
            cls._to_monomial.clear()
            cls._from_monomial.clear()

    @staticmethod
    def convert(f: SymFunc, target: BasisTag) -> SymFunc:
        """把 f 改写到目标基"""
        target = BasisTag.parse(target)
        if f.basis == target:
            return f
        matrix = SymmetricFunctionService.transition(f.n, f.basis, target)
        return SymFunc(f.n, target, matrix.apply(f.coeffs))

    @staticmethod
    def expand_all(f: SymFunc) -> Dict[BasisTag, SymFunc]:
        """f 在全部六组基下的展开"""
        return {tag: SymmetricFunctionService.convert(f, tag) for tag in BasisTag}

    # ==================== Kostka 与逆 Kostka ====================

    @staticmethod
    def kostka_number(lam: Partition, mu: Partition) -> int:
        """K_{λ,μ}：形状 λ、内容 μ 的半标准表个数"""
        if lam.n != mu.n:
            raise ValidationError(f"Kostka 数要求 |λ| = |μ|，收到 {lam.n} 与 {mu.n}")
        return _kostka_count(lam.parts, mu.parts)

    @staticmethod
    def kostka(n: int) -> TransitionMatrix:
        """Kostka 矩阵（即 s→m 过渡矩阵），按半标准表直接计数"""
        index = partitions_of(n)
        entries = tuple(
            tuple(ScalarRing(SymmetricFunctionService.kostka_number(lam, mu)) for mu in index) for lam in index
        )
        return TransitionMatrix(n, BasisTag.SCHUR, BasisTag.MONOMIAL, entries)

    @staticmethod
    def ribbon_expansion(mu: Partition) -> Dict[Partition, int]:
        """s_μ 的 e-展开系数：按类型对形状 μ 的特殊带状图做带号计数"""
        return dict(_ribbon_expansion(mu.parts))

    @staticmethod
    def inverse_kostka_ribbon(lam: Partition, mu: Partition) -> Scalar:
        """
        K⁻¹_{λ,μ^tr} = Σ_Q sgn(Q)，Q 取遍形状 μ、类型 λ 的特殊带状图

        Raises:
            ValidationError: |λ| ≠ |μ|
        """
        if lam.n != mu.n:
            raise ValidationError(f"逆 Kostka 数要求 |λ| = |μ|，收到 {lam.n} 与 {mu.n}")
        return ScalarRing(_ribbon_expansion(mu.parts).get(lam, 0))

    @staticmethod
    def inverse_kostka(n: int) -> TransitionMatrix:
        """由特殊带状图构造的 K⁻¹（m→s 过渡矩阵）"""
        index = partitions_of(n)
        entries = tuple(
            tuple(SymmetricFunctionService.inverse_kostka_ribbon(lam, nu.transpose()) for nu in index)
            for lam in index
        )
        return TransitionMatrix(n, BasisTag.MONOMIAL, BasisTag.SCHUR, entries)

    # ==================== 特征标 ====================

    @staticmethod
    def character_table(n: int) -> TransitionMatrix:
        """p→s 过渡矩阵：entries[λ][μ] = χ^μ(λ)"""
        return SymmetricFunctionService.transition(n, BasisTag.POWER, BasisTag.SCHUR)

    @staticmethod
    def character(mu: Partition, lam: Partition) -> Scalar:
        """χ^μ(λ)，取自特征标表"""
        return SymmetricFunctionService.character_table(mu.n).entry(lam, mu)

    @staticmethod
    def murnaghan_nakayama(mu: Partition, lam: Partition) -> int:
        """χ^μ(λ) 的 Murnaghan–Nakayama 递推（独立于过渡矩阵）"""
        if mu.n != lam.n:
            raise ValidationError(f"特征标要求 |μ| = |λ|，收到 {mu.n} 与 {lam.n}")
        ell = mu.ell
        beta = tuple(sorted(mu.parts[i] + (ell - 1 - i) for i in range(ell)))
        return _mn_character(beta, lam.parts)

    # ==================== ω 与乘法 ====================

    @staticmethod
    def omega(f: SymFunc) -> SymFunc:
        """
        逐基作用的 ω：e↔h，m↔f，s_λ→s_{λ^tr}，p_λ→(-1)^{n-ℓ(λ)}p_λ

        结果落在"对偶"的基中（e 的像在 h 基下，等等）
        """
        swap = {
            BasisTag.ELEMENTARY: BasisTag.HOMOGENEOUS,
            BasisTag.HOMOGENEOUS: BasisTag.ELEMENTARY,
            BasisTag.MONOMIAL: BasisTag.FORGOTTEN,
            BasisTag.FORGOTTEN: BasisTag.MONOMIAL,
        }
        if f.basis in swap:
            return SymFunc(f.n, swap[f.basis], dict(f.coeffs))
        if f.basis == BasisTag.SCHUR:
            return SymFunc(f.n, BasisTag.SCHUR, {lam.transpose(): c for lam, c in f.coeffs.items()})
        return SymFunc(f.n, BasisTag.POWER, {lam: c * lam.sign() for lam, c in f.coeffs.items()})

    @staticmethod
    def omega_by_generator_swap(f: SymFunc) -> SymFunc:
        """经 e-展开再把 e 换成 h 得到 ω(f)，并写回 f 原来的基"""
        in_e = SymmetricFunctionService.convert(f, BasisTag.ELEMENTARY)
        swapped = SymFunc(f.n, BasisTag.HOMOGENEOUS, dict(in_e.coeffs))
        return SymmetricFunctionService.convert(swapped, f.basis)

    @staticmethod
    def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
        """乘积：在 p 基下拼接分拆，再改写回 f 的基"""
        fp = SymmetricFunctionService.convert(f, BasisTag.POWER)
        gp = SymmetricFunctionService.convert(g, BasisTag.POWER)
        result: Dict[Partition, Scalar] = {}
        for lam, a in fp.coeffs.items():
            for mu, b in gp.coeffs.items():
                nu = Partition.of(lam.parts + mu.parts)
                result[nu] = result.get(nu, ZERO) + a * b
        product = SymFunc(f.n + g.n, BasisTag.POWER, result)
        return SymmetricFunctionService.convert(product, f.basis)

    # ==================== 轮换去边系数 ====================

    @staticmethod
    def cycle_removal_coeff(mu: Partition) -> Scalar:
        """
        c_μ：从 n 圈 Cn 的 n 条边中删去非空子集，剩余路径的大小构成 μ 的方法数

        n=1 时唯一的边是自环，n=2 时两条平行边。
        """
        n = mu.n
        if n == 0:
            return ZERO
        count = 0
        for size in range(1, n + 1):
            for removed in combinations(range(n), size):
                gaps = [removed[i + 1] - removed[i] for i in range(size - 1)]
                gaps.append(n - removed[-1] + removed[0])
                if Partition.of(gaps) == mu:
                    count += 1
        return ScalarRing(count)

    # ==================== 拟对称函数 ====================

    @staticmethod
    def b_statistic(lam: Partition, descent_set: DescentSet) -> int:
        """b(λ,S)：iDES = S 的形状 λ 标准 Young 表个数"""
        if descent_set.n != lam.n:
            raise ValidationError(f"下降集规模 {descent_set.n} 与 |λ|={lam.n} 不一致")
        return sum(1 for T in standard_tableaux(lam.parts) if inverse_descent_set(T) == descent_set)

    @staticmethod
    def to_fundamental(f: SymFunc) -> QSymFunc:
        """基本拟对称展开：d_S = Σ_λ b(λ,S)·c_λ，c_λ 为 Schur 系数"""
        in_s = SymmetricFunctionService.convert(f, BasisTag.SCHUR)
        result: Dict[DescentSet, Scalar] = {}
        for lam, c in in_s.coeffs.items():
            for T in standard_tableaux(lam.parts):
                S = inverse_descent_set(T)
                result[S] = result.get(S, ZERO) + c
        return QSymFunc(f.n, QSymKind.FUNDAMENTAL, result)

    @staticmethod
    def symmetric_to_qsym(f: SymFunc) -> QSymFunc:
        """m_λ = Σ_{α~λ} M_α"""
        in_m = SymmetricFunctionService.convert(f, BasisTag.MONOMIAL)
        result: Dict[Composition, Scalar] = {}
        for lam, c in in_m.coeffs.items():
            for alpha in multiset_permutations(list(lam.parts)):
                result[Composition(tuple(alpha))] = c
        return QSymFunc(f.n, QSymKind.MONOMIAL, result)

    @staticmethod
    def qsym_m_to_f(g: QSymFunc) -> QSymFunc:
        """M_{comp(S)} = Σ_{T⊇S} (-1)^{|T-S|} F_T"""
        if g.kind == QSymKind.FUNDAMENTAL:
            return g
        result: Dict[DescentSet, Scalar] = {}
        for alpha, c in g.coeffs.items():
            S = alpha.descent_set()
            for T in descent_sets_of(g.n):
                if S.is_subset(T):
                    sign = -1 if (len(T) - len(S)) % 2 else 1
                    result[T] = result.get(T, ZERO) + c * sign
        return QSymFunc(g.n, QSymKind.FUNDAMENTAL, result)

    @staticmethod
    def qsym_f_to_m(g: QSymFunc) -> QSymFunc:
        """F_S = Σ_{T⊇S} M_{comp(T)}"""
        if g.kind == QSymKind.MONOMIAL:
            return g
        result: Dict[Composition, Scalar] = {}
        for S, c in g.coeffs.items():
            for T in descent_sets_of(g.n):
                if S.is_subset(T):
                    alpha = T.composition()
                    result[alpha] = result.get(alpha, ZERO) + c
        return QSymFunc(g.n, QSymKind.MONOMIAL, result)

    @staticmethod
    def rearrangement_witness(g: QSymFunc) -> Optional[Tuple[Composition, Composition]]:
        """M-系数在重排类上不为常数时返回一对见证组合，否则返回 None"""
        g = SymmetricFunctionService.qsym_f_to_m(g)
        representative: Dict[Partition, Composition] = {}
        for alpha in compositions_of(g.n):
            lam = alpha.rearrangement_class()
            if lam not in representative:
                representative[lam] = alpha
            elif g.coefficient(alpha) != g.coefficient(representative[lam]):
                return representative[lam], alpha
        return None

    @staticmethod
    def qsym_to_symmetric(g: QSymFunc) -> SymFunc:
        """对称的拟对称函数读回 m-展开（调用前应先检查对称性）"""
        g = SymmetricFunctionService.qsym_f_to_m(g)
        coeffs = {}
        for lam in partitions_of(g.n):
            coeffs[lam] = g.coefficient(Composition(lam.parts))
        return SymFunc(g.n, BasisTag.MONOMIAL, coeffs)
