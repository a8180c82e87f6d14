"""矩阵与内积式服务

行列式、积和式、子式、完全非负性检查、按定义求和的内积式（全部检查的基准），
以及 Littlewood–Merris–Watkins 恒等式、分解推论与 Muir 恒等式的验证。
"""
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence

from models.matrix import Matrix
from models.partition import Partition
from models.permutation import permutations_of
from models.report import VerificationReport
from models.scalar import ONE, ZERO, Scalar, is_rational, scalar, to_fraction
from models.trace import Trace, TraceBasis
from utils.error_handler import DomainError, ErrorHandler, ValidationError
from utils.logger import logger

from .posets_graphs import PosetGraphService
from .sn_algebra import TraceService
from .symmetric_functions import SymmetricFunctionService


class ImmanantService:
    """精确矩阵函数"""

    # ==================== 行列式与积和式 ====================

    @staticmethod
    def det(A: Matrix) -> Scalar:
        """行列式（sympy DomainMatrix，精确）"""
        if A.n == 0:
            return ONE
        return A.to_domain_matrix().det()

    @staticmethod
    def perm(A: Matrix) -> Scalar:
        """积和式：按已用列集合做状态压缩 DP"""
        n = A.n
        table = {0: ONE}
        for i in range(n):
            nxt = {}
            for mask, value in table.items():
                for j in range(n):
                    if mask & (1 << j):
                        continue
                    entry = A.rows[i][j]
                    if not entry:
                        continue
                    key = mask | (1 << j)
                    nxt[key] = nxt.get(key, ZERO) + value * entry
            table = nxt
        return table.get((1 << n) - 1, ZERO)

    @staticmethod
    def minor(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Scalar:
        """det(A_{I,J})"""
        return ImmanantService.det(A.submatrix(rows, cols))

    @staticmethod
    def is_totally_nonnegative(A: Matrix) -> bool:
        """
        全部子式非负（按全部 (I, J) 穷举）

        Raises:
            DomainError: 矩阵含 q
        """
        if not A.is_rational():
            raise DomainError("完全非负性只对有理矩阵定义", ["在 q=1 处特化后再检查"])
        for size in range(1, A.n + 1):
            for I in combinations(range(1, A.n + 1), size):
                for J in combinations(range(1, A.n + 1), size):
                    if to_fraction(ImmanantService.minor(A, I, J)) < 0:
                        logger.debug(f"负子式 I={I} J={J}")
                        return False
        return True

    # ==================== 内积式 ====================

    @staticmethod
    def immanant(theta: Trace, A: Matrix) -> Scalar:
        """Imm_θ(A) = Σ_w θ(w)·a_{1,w_1}⋯a_{n,w_n}"""
        ErrorHandler.validate_same_size(theta.n, A.n, "迹与矩阵")
        total = ZERO
        for w in permutations_of(A.n):
            value = theta.at(w)
            if not value:
                continue
            product = ONE
            for i in range(1, A.n + 1):
                product *= A(i, w(i))
                if not product:
                    break
            total += value * product
        return total

    @staticmethod
    def basis_immanant(basis, lam: Partition, A: Matrix) -> Scalar:
        return ImmanantService.immanant(TraceService.trace_basis(lam.n, basis, lam), A)

    @staticmethod
    def power_immanant_by_cycle_type(lam: Partition, A: Matrix) -> Scalar:
        """Imm_{ψ^λ}(A) = z_λ Σ_{ctype(w)=λ} Π a_{i,w_i}"""
        ErrorHandler.validate_same_size(lam.n, A.n, "分拆与矩阵")
        total = ZERO
        for w in permutations_of(A.n):
            if w.cycle_type() != lam:
                continue
            product = ONE
            for i in range(1, A.n + 1):
                product *= A(i, w(i))
            total += product
        return total * lam.z()

    # ==================== 恒等式 ====================

    @staticmethod
    def _block_products(A: Matrix, lam: Partition, function) -> Scalar:
        total = ZERO
        for blocks in PosetGraphService.ordered_set_partitions(A.n, lam):
            product = ONE
            for block in blocks:
                product *= function(A.submatrix(block, block))
                if not product:
                    break
            total += product
        return total

    @staticmethod
    def verify_lmw(A: Matrix, lam: Partition) -> VerificationReport:
        """
        Imm_{ε^λ}(A) = Σ Π det(A_{I_j,I_j})，Imm_{η^λ}(A) = Σ Π perm(A_{I_j,I_j})，
        求和取遍类型为 λ 的有序集合划分
        """
        ErrorHandler.validate_same_size(lam.n, A.n, "分拆与矩阵")
        report = VerificationReport('lmw', parameters={'lambda': str(lam), 'n': A.n})
        report.check(
            f"epsilon^{lam}",
            ImmanantService.basis_immanant(TraceBasis.EPSILON, lam, A),
            ImmanantService._block_products(A, lam, ImmanantService.det),
        )
        report.check(
            f"eta^{lam}",
            ImmanantService.basis_immanant(TraceBasis.ETA, lam, A),
            ImmanantService._block_products(A, lam, ImmanantService.perm),
        )
        return report

    @staticmethod
    def immanant_factorization(theta1: Trace, theta2: Trace, A: Matrix) -> Scalar:
        """Σ_{|J|=k} Imm_{θ1}(A_{J,J})·Imm_{θ2}(A_{J̄,J̄})"""
        ErrorHandler.validate_same_size(theta1.n + theta2.n, A.n, "迹与矩阵")
        total = ZERO
        everything = range(1, A.n + 1)
        for J in combinations(everything, theta1.n):
            rest = [i for i in everything if i not in J]
            total += ImmanantService.immanant(theta1, A.submatrix(J, J)) * \
                ImmanantService.immanant(theta2, A.submatrix(rest, rest))
        return total

    @staticmethod
    def verify_factorization(theta1: Trace, theta2: Trace, A: Matrix) -> VerificationReport:
        """分解推论：与诱导迹的直接内积式比对"""
        product = SymmetricFunctionService.multiply(TraceService.frobenius(theta1), TraceService.frobenius(theta2))
        theta = TraceService.frobenius_inverse(product)
        report = VerificationReport('factorization', parameters={'k': theta1.n, 'n': A.n})
        report.check('induced product', ImmanantService.immanant(theta, A),
                     ImmanantService.immanant_factorization(theta1, theta2, A))
        return report

    @staticmethod
    def _row_immanant(basis: TraceBasis, A: Matrix) -> Scalar:
        if A.n == 0:
            return ONE
        return ImmanantService.basis_immanant(basis, Partition((A.n,)), A)

    @staticmethod
    def verify_muir(A: Matrix) -> VerificationReport:
        """
        n·perm(A) = Σ_J Imm_{ψ^{|J|}}(A_{J,J})·perm(A_{J̄,J̄})，
        n·det(A) = Σ_J (-1)^{|J|-1} Imm_{ψ^{|J|}}(A_{J,J})·det(A_{J̄,J̄})，
        Σ_J (-1)^{|J|} det(A_{J,J})·perm(A_{J̄,J̄}) = 0
        """
        n = A.n
        report = VerificationReport('muir', parameters={'n': n})
        everything = range(1, n + 1)
        perm_sum = det_sum = alternating = ZERO
        for size in range(n + 1):
            for J in combinations(everything, size):
                rest = [i for i in everything if i not in J]
                inside, outside = A.submatrix(J, J), A.submatrix(rest, rest)
                sign = -1 if size % 2 else 1
                alternating += sign * ImmanantService.det(inside) * ImmanantService.perm(outside)
                if size == 0:
                    continue
                psi = ImmanantService._row_immanant(TraceBasis.PSI, inside)
                perm_sum += psi * ImmanantService.perm(outside)
                det_sum += -sign * psi * ImmanantService.det(outside)
        if n == 0:
            return report
        report.check('n·perm', n * ImmanantService.perm(A), perm_sum)
        report.check('n·det', n * ImmanantService.det(A), det_sum)
        report.check('alternating det/perm', ZERO, alternating)
        return report

    # ==================== 随机矩阵 ====================

    @staticmethod
    def parse_weight_pool(text: str) -> List[Scalar]:
        """解析 "0,1,2,1/2,3" 形式的权重池"""
        try:
            pool = [scalar(Fraction(piece.strip())) for piece in str(text).split(',') if piece.strip()]
        except ValueError as e:
            raise ValidationError(f"权重池格式错误: {text!r} ({e})")
        if not pool:
            raise ValidationError("权重池为空")
        if not all(is_rational(w) for w in pool):
            raise ValidationError("权重池只能包含有理数")
        return pool

    @staticmethod
    def random_matrix(n: int, rng, pool: Sequence[Scalar]) -> Matrix:
        """元素取自权重池（可带符号）的随机矩阵"""
        return Matrix(tuple(
            tuple(pool[rng.randrange(len(pool))] * rng.choice((1, -1)) for _ in range(n)) for _ in range(n)
        ))

