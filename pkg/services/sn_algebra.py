"""对称群代数服务

- SymmetricGroupService: 置换统计量、σ 映射、Bruhat 序、光滑置换的 KL 基元素（q=1）
- TraceService: 迹空间六组基、求值、Frobenius 对应、Y(g) 及其展开
"""
import threading
from typing import Dict, List, Tuple

from models.partition import Partition, partitions_of
from models.permutation import PATTERN_312, Permutation, permutations_of
from models.scalar import ONE, ZERO, Scalar, ScalarRing, rational
from models.symfunc import BasisTag, SymFunc
from models.trace import GroupAlgebraElement, Trace, TraceBasis
from utils.error_handler import DomainError, ErrorHandler, ValidationError
from utils.logger import logger

from .symmetric_functions import SymmetricFunctionService

# 迹基与对称函数基在 Frobenius 映射下的对应
FROBENIUS_PARTNER = {
    TraceBasis.EPSILON: BasisTag.ELEMENTARY,
    TraceBasis.ETA: BasisTag.HOMOGENEOUS,
    TraceBasis.CHI: BasisTag.SCHUR,
    TraceBasis.PSI: BasisTag.POWER,
    TraceBasis.PHI: BasisTag.MONOMIAL,
    TraceBasis.GAMMA: BasisTag.FORGOTTEN,
}


class SymmetricGroupService:
    """Sn 上的组合运算"""

    @staticmethod
    def cycle_type(w: Permutation) -> Partition:
        return w.cycle_type()

    @staticmethod
    def length(w: Permutation) -> int:
        return w.length()

    @staticmethod
    def avoids(w: Permutation, pattern: Permutation) -> bool:
        return w.avoids(pattern)

    @staticmethod
    def sigma_flatten(w: Permutation) -> Permutation:
        """σ(w)：擦去标准轮换记号中的括号"""
        return w.sigma_flatten()

    @staticmethod
    def sigma_unflatten(u: Permutation) -> Permutation:
        """σ 的逆"""
        return u.sigma_unflatten()

    @staticmethod
    def bruhat_leq(v: Permutation, w: Permutation) -> bool:
        """
        Bruhat 序比较（秩矩阵判别法）

        v ≤ w 当且仅当对所有 i, j 有 r_v(i,j) ≤ r_w(i,j)

        Raises:
            ValidationError: 规模不一致
        """
        ErrorHandler.validate_same_size(v.n, w.n, "置换")
        rv, rw = v.rank_matrix(), w.rank_matrix()
        return all(a <= b for row_v, row_w in zip(rv, rw) for a, b in zip(row_v, row_w))

    @staticmethod
    def bruhat_lower_interval(w: Permutation) -> List[Permutation]:
        """{v | v ≤ w}"""
        return [v for v in permutations_of(w.n) if SymmetricGroupService.bruhat_leq(v, w)]

    @staticmethod
    def kl_basis_element_q1(w: Permutation) -> GroupAlgebraElement:
        """
        光滑置换 w 的 KL 基元素在 q=1 处的值 Σ_{v≤w} v

        Raises:
            DomainError: w 含 4231 或 3412 模式
        """
        if not w.is_smooth():
            raise DomainError(
                f"置换 {w} 不光滑（含 4231 或 3412），一般 Kazhdan–Lusztig 多项式不在实现范围内",
                ["只对避开 4231 与 3412 的置换求 KL 基元素"],
            )
        return GroupAlgebraElement.sum_of(w.n, SymmetricGroupService.bruhat_lower_interval(w))

    @staticmethod
    def young_subgroup(mu: Partition) -> List[Permutation]:
        """Young 子群 S_μ（按连续块）"""
        blocks = []
        start = 1
        for part in mu.parts:
            blocks.append(range(start, start + part))
            start += part
        block_of = {x: b for b, block in enumerate(blocks) for x in block}
        return [w for w in permutations_of(mu.n) if all(block_of[w(i)] == block_of[i] for i in range(1, mu.n + 1))]

    @staticmethod
    def smooth_312_avoiders(n: int) -> List[Permutation]:
        """Sn 中的 312-避免置换（都是光滑的）"""
        return [w for w in permutations_of(n) if w.avoids(PATTERN_312)]


class TraceService:
    """迹空间服务（标准基按 (n, 基, λ) 缓存）"""

    _lock = threading.RLock()
    _basis_cache: Dict[Tuple[int, TraceBasis, Partition], Trace] = {}

    @classmethod
    def trace_basis(cls, n: int, name, lam: Partition) -> Trace:
        """
        标准基迹，由特征标表与 (逆) Kostka 矩阵组合得到

        χ^λ 取特征标表的列；η^λ = Σ_μ K_{μλ}χ^μ；ε^λ = Σ_μ K_{μ^tr,λ}χ^μ；
        ψ^λ = Σ_μ χ^μ(λ)χ^μ；φ^λ = Σ_μ K⁻¹_{λμ}χ^μ；γ^λ = Σ_μ K⁻¹_{λ,μ^tr}χ^μ

        Raises:
            ValidationError: λ 不是 n 的分拆
        """
        basis = TraceBasis.parse(name)
        if lam.n != n:
            raise ValidationError(f"分拆 {lam} 不是 {n} 的分拆")
        key = (n, basis, lam)
        with cls._lock:
            if key in cls._basis_cache:
                return cls._basis_cache[key]
            index = partitions_of(n)
            chi = SymmetricFunctionService.character_table(n)
            if basis == TraceBasis.CHI:
                combination = {lam: ONE}
            elif basis == TraceBasis.ETA:
                kostka = SymmetricFunctionService.kostka(n)
                combination = {mu: kostka.entry(mu, lam) for mu in index}
            elif basis == TraceBasis.EPSILON:
                kostka = SymmetricFunctionService.kostka(n)
                combination = {mu: kostka.entry(mu.transpose(), lam) for mu in index}
            elif basis == TraceBasis.PSI:
                combination = {mu: chi.entry(lam, mu) for mu in index}
            else:
                inverse = SymmetricFunctionService.transition(n, BasisTag.MONOMIAL, BasisTag.SCHUR)
                if basis == TraceBasis.PHI:
                    combination = {mu: inverse.entry(lam, mu) for mu in index}
                else:
                    combination = {mu: inverse.entry(lam, mu.transpose()) for mu in index}
            values = {
                nu: sum((c * chi.entry(nu, mu) for mu, c in combination.items() if c), ZERO) for nu in index
            }
            trace = Trace(n, values)
            cls._basis_cache[key] = trace
            logger.debug(f"迹基 {basis.value}^{lam} 已缓存")
            return trace

    @staticmethod
    def trace_basis_via_frobenius(n: int, name, lam: Partition) -> Trace:
        """经 Frobenius 逆映射得到的标准基迹（独立路线）"""
        basis = TraceBasis.parse(name)
        return TraceService.frobenius_inverse(SymFunc.basis_element(FROBENIUS_PARTNER[basis], lam))

    @staticmethod
    def psi_direct(lam: Partition) -> Trace:
        """ψ^λ(w) = z_λ（若 ctype(w)=λ），否则为 0"""
        return Trace(lam.n, {lam: lam.z_scalar()})

    @staticmethod
    def parse_trace(text: str, n: int = None) -> Trace:
        """解析 "phi:3,2" 形式的迹描述"""
        if ":" not in str(text):
            raise ValidationError(f"迹描述应为 名称:分拆，收到 {text!r}", ["例如 phi:3,2 或 eta:5"])
        name, partition_text = str(text).split(":", 1)
        lam = Partition.parse(partition_text)
        if n is not None and lam.n != n:
            raise ValidationError(f"迹 {text} 的规模 {lam.n} 与对象规模 {n} 不一致")
        return TraceService.trace_basis(lam.n, name, lam)

    @staticmethod
    def evaluate(theta: Trace, g: GroupAlgebraElement) -> Scalar:
        """θ(g) = Σ_w g(w)·θ(ctype(w))"""
        ErrorHandler.validate_same_size(theta.n, g.n, "迹与群代数元素")
        return sum((c * theta.at(w) for w, c in g.terms.items()), ZERO)

    @staticmethod
    def frobenius(theta: Trace) -> SymFunc:
        """Frob(θ) = Σ_λ θ(λ)/z_λ · p_λ"""
        return SymFunc(theta.n, BasisTag.POWER, {
            lam: value * rational(1, lam.z()) for lam, value in theta.values.items()
        })

    @staticmethod
    def frobenius_inverse(f: SymFunc) -> Trace:
        """从 p-系数读回迹：θ(λ) = z_λ·[p_λ]f"""
        in_p = SymmetricFunctionService.convert(f, BasisTag.POWER)
        return Trace(f.n, {lam: c * lam.z() for lam, c in in_p.coeffs.items()})

    @staticmethod
    def y_of(g: GroupAlgebraElement) -> SymFunc:
        """Y(g) = Σ_λ ε^λ(g)·m_λ"""
        return SymFunc(g.n, BasisTag.MONOMIAL, {
            lam: TraceService.evaluate(TraceService.trace_basis(g.n, TraceBasis.EPSILON, lam), g)
            for lam in partitions_of(g.n)
        })

    @staticmethod
    def _expansion_table(g: GroupAlgebraElement, pairs) -> Dict[BasisTag, SymFunc]:
        n = g.n
        result = {}
        for tag, basis, transform in pairs:
            coeffs = {}
            for lam in partitions_of(n):
                source = lam.transpose() if basis == TraceBasis.CHI and transform == 'transpose' else lam
                value = TraceService.evaluate(TraceService.trace_basis(n, basis, source), g)
                if basis == TraceBasis.PSI:
                    value = value * rational(lam.sign() if transform == 'sign' else 1, lam.z())
                coeffs[lam] = value
            result[tag] = SymFunc(n, tag, coeffs)
        return result

    @staticmethod
    def y_expansions(g: GroupAlgebraElement) -> Dict[BasisTag, SymFunc]:
        """
        Y(g) 的六种展开

        m: ε^λ(g)，f: η^λ(g)，p: (-1)^{n-ℓ(λ)}ψ^λ(g)/z_λ，s: χ^{λ^tr}(g)，e: φ^λ(g)，h: γ^λ(g)
        """
        return TraceService._expansion_table(g, [
            (BasisTag.MONOMIAL, TraceBasis.EPSILON, None),
            (BasisTag.FORGOTTEN, TraceBasis.ETA, None),
            (BasisTag.POWER, TraceBasis.PSI, 'sign'),
            (BasisTag.SCHUR, TraceBasis.CHI, 'transpose'),
            (BasisTag.ELEMENTARY, TraceBasis.PHI, None),
            (BasisTag.HOMOGENEOUS, TraceBasis.GAMMA, None),
        ])

    @staticmethod
    def omega_y_expansions(g: GroupAlgebraElement) -> Dict[BasisTag, SymFunc]:
        """
        ωY(g) 的六种展开

        f: ε^λ(g)，m: η^λ(g)，p: ψ^λ(g)/z_λ，s: χ^λ(g)，h: φ^λ(g)，e: γ^λ(g)
        """
        return TraceService._expansion_table(g, [
            (BasisTag.FORGOTTEN, TraceBasis.EPSILON, None),
            (BasisTag.MONOMIAL, TraceBasis.ETA, None),
            (BasisTag.POWER, TraceBasis.PSI, None),
            (BasisTag.SCHUR, TraceBasis.CHI, None),
            (BasisTag.HOMOGENEOUS, TraceBasis.PHI, None),
            (BasisTag.ELEMENTARY, TraceBasis.GAMMA, None),
        ])

    @staticmethod
    def realize_symfunc(f: SymFunc) -> GroupAlgebraElement:
        """
        构造 g 使 Y(g) = f

        g = Σ_μ a_μ/(μ_1!⋯μ_ℓ!) · C'_{w_μ}(1)，a_μ 为 f 的 e-系数
        """
        in_e = SymmetricFunctionService.convert(f, BasisTag.ELEMENTARY)
        result = GroupAlgebraElement.zero(f.n)
        for mu, a in in_e.items():
            element = SymmetricGroupService.kl_basis_element_q1(Permutation.young_longest(mu))
            result = result + element.scale(a * rational(1, mu.factorial_product()))
        return result

    @staticmethod
    def class_sum(lam: Partition) -> GroupAlgebraElement:
        """Σ_{ctype(w)=λ} w"""
        return GroupAlgebraElement.sum_of(lam.n, [w for w in permutations_of(lam.n) if w.cycle_type() == lam])

    @staticmethod
    def random_trace(n: int, rng) -> Trace:
        """小整数取值的随机迹（用于往返测试）"""
        return Trace(n, {lam: ScalarRing(rng.randint(-3, 3)) for lam in partitions_of(n)})

    @staticmethod
    def random_group_element(n: int, rng, terms: int = 4) -> GroupAlgebraElement:
        """随机群代数元素"""
        pool = permutations_of(n)
        return GroupAlgebraElement(n, {
            pool[rng.randrange(len(pool))]: rational(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(terms)
        })
