"""
实对称矩阵的循环Jacobi特征值算法

每一轮（sweep）按行优先顺序对所有(p, q), p < q做一次Jacobi旋转消去a_pq，
直到非对角元的Frobenius范数 <= tol * 矩阵Frobenius范数，最多max_sweeps轮。
"""

from typing import Optional
import numpy as np
from src.core.config import settings
from src.core.exceptions import NumericalError, ParameterError
from src.core.logger import LoggerMixin
from src.core.models import Spectrum


class SymmetricMatrix:
    """实对称矩阵（构造时校验对称性）"""

    __slots__ = ("values",)

    def __init__(self, values):
        values = np.array(values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ParameterError(f"需要方阵，实际形状{values.shape}")
        if not np.array_equal(values, values.T):
            raise ParameterError("矩阵不对称")
        self.values = values

    @classmethod
    def from_path_matrix(cls, matrix) -> "SymmetricMatrix":
        return cls(matrix.entries)

    @property
    def order(self) -> int:
        return int(self.values.shape[0])


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


class JacobiEigenSolver(LoggerMixin):
    """循环Jacobi特征值求解器"""

    def __init__(self, tol: Optional[float] = None, max_sweeps: Optional[int] = None):
        super().__init__()
        self.tol = settings.eigen_tolerance if tol is None else tol
        self.max_sweeps = settings.eigen_max_sweeps if max_sweeps is None else max_sweeps
        if self.tol <= 0:
            raise ParameterError(f"tol必须为正: {self.tol}")

    @staticmethod
    def _rotate(a: np.ndarray, p: int, q: int) -> None:
        apq = a[p, q]
        tau = (a[q, q] - a[p, p]) / (2.0 * apq)
        if abs(tau) > 1e150:
            t = 0.5 / tau
        else:
            t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
        c = 1.0 / np.sqrt(1.0 + t * t)
        s = t * c

        row_p = a[p, :].copy()
        row_q = a[q, :].copy()
        a[p, :] = c * row_p - s * row_q
        a[q, :] = s * row_p + c * row_q
        col_p = a[:, p].copy()
        col_q = a[:, q].copy()
        a[:, p] = c * col_p - s * col_q
        a[:, q] = s * col_p + c * col_q
        a[p, q] = a[q, p] = 0.0

    def solve(self, m: SymmetricMatrix) -> Spectrum:
        a = m.values.copy()
        n = m.order
        threshold = self.tol * float(np.linalg.norm(a))
        sweeps = 0
        while _off_diagonal_norm(a) > threshold:
            if sweeps == self.max_sweeps:
                raise NumericalError(
                    f"Jacobi在{self.max_sweeps}轮后未收敛（n={n}，非对角范数{_off_diagonal_norm(a):.3e}）"
                )
            for p in range(n - 1):
                for q in range(p + 1, n):
                    if a[p, q] != 0.0:
                        self._rotate(a, p, q)
            sweeps += 1

        self.log_debug("Jacobi收敛", n=n, sweeps=sweeps)
        return Spectrum(eigenvalues=np.diag(a).tolist())


def eigenvalues(m: SymmetricMatrix, tol: Optional[float] = None,
                max_sweeps: Optional[int] = None) -> Spectrum:
    """全部特征值，非增排列"""
    return JacobiEigenSolver(tol=tol, max_sweeps=max_sweeps).solve(m)
