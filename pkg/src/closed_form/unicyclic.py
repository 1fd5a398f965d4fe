"""
单圈图U(n,k)路径矩阵的闭式谱与能量

适当标号后P(U(n,k)) = [[2J_k, 1], [1, J_{n-k}]]，其谱为
(-2)^{k-1}, (-1)^{n-k-1}, ρ2, ρ1，其中
ρ1,2 = (n+k-3 ± sqrt((n+k-3)^2 + 4(k^2-nk+2n-2))) / 2。
k = n时U(n,n) = C_n，P = 2J_n，谱为(-2)^{n-1}, 2(n-1)。
"""

import math
from typing import List, Tuple
import numpy as np
from src.core.exceptions import NumericalError, ParameterError
from src.core.models import Spectrum, UnicyclicSpectrum


def _check_range(n: int, k: int, allow_cycle: bool) -> None:
    upper = n if allow_cycle else n - 1
    if not 3 <= k <= upper:
        raise ParameterError(f"需要3 <= k <= {'n' if allow_cycle else 'n-1'}，实际n={n}, k={k}")


def sign_polynomial(n: int, k: int) -> int:
    """g(k) = k^2 - nk + 2n - 2；ρ2 > 0当且仅当g(k) < 0"""
    return k * k - n * k + 2 * n - 2


def discriminant(n: int, k: int) -> float:
    value = float((n + k - 3) ** 2 + 4 * sign_polynomial(n, k))
    if value < 0:
        raise NumericalError(f"判别式为负: n={n}, k={k}, D={value}")
    return value


def unicyclic_rho12(n: int, k: int) -> Tuple[float, float]:
    """两个非平凡特征值(ρ1, ρ2)，ρ1 >= ρ2"""
    _check_range(n, k, allow_cycle=False)
    root = math.sqrt(discriminant(n, k))
    return (n + k - 3 + root) / 2.0, (n + k - 3 - root) / 2.0


def cycle_spectrum(n: int) -> Spectrum:
    if n < 3:
        raise ParameterError(f"圈至少需要3个顶点: n={n}")
    return Spectrum(eigenvalues=[2.0 * (n - 1)] + [-2.0] * (n - 1))


def unicyclic_spectrum_parts(n: int, k: int) -> UnicyclicSpectrum:
    rho1, rho2 = unicyclic_rho12(n, k)
    return UnicyclicSpectrum(
        n=n,
        k=k,
        rho1=rho1,
        rho2=rho2,
        minus_two_multiplicity=k - 1,
        minus_one_multiplicity=n - k - 1,
    )


def unicyclic_spectrum_closed(n: int, k: int) -> Spectrum:
    """U(n,k)的闭式谱，3 <= k <= n"""
    _check_range(n, k, allow_cycle=True)
    if k == n:
        return cycle_spectrum(n)
    return unicyclic_spectrum_parts(n, k).to_spectrum()


def unicyclic_spectral_radius(n: int, k: int) -> float:
    _check_range(n, k, allow_cycle=True)
    if k == n:
        return 2.0 * (n - 1)
    return unicyclic_rho12(n, k)[0]


def rho2_positive(n: int, k: int) -> bool:
    """直接由符号多项式判断ρ2 > 0"""
    _check_range(n, k, allow_cycle=False)
    return sign_polynomial(n, k) < 0


def stated_rho2_positive(n: int, k: int) -> bool:
    """文献中的区间表述：n >= 7且3 <= k <= n-3"""
    _check_range(n, k, allow_cycle=False)
    return n >= 7 and 3 <= k <= n - 3


def unicyclic_energy_closed(n: int, k: int) -> float:
    """分段闭式路径能量；按ρ2的符号分支，ρ2 = 0时两个分支取值相同"""
    _check_range(n, k, allow_cycle=True)
    if k == n:
        return 4.0 * (n - 1)
    if rho2_positive(n, k):
        return 2.0 * (n + k - 3)
    return 2.0 * unicyclic_rho12(n, k)[0]


def unicyclic_energy_profile(n: int) -> List[Tuple[int, float]]:
    """固定n时各圈长k = 3..n的路径能量"""
    return [(k, unicyclic_energy_closed(n, k)) for k in range(3, n + 1)]


def unicyclic_trace_square(n: int, k: int) -> int:
    """tr(P^2) = 4(k^2-k) + (n^2-k^2-(n-k))"""
    _check_range(n, k, allow_cycle=True)
    return 4 * (k * k - k) + (n * n - k * k - (n - k))


def rho12_square_sum(n: int, k: int) -> int:
    """ρ1^2 + ρ2^2 = tr(P^2) - 4(k-1) - (n-k-1)"""
    _check_range(n, k, allow_cycle=False)
    return unicyclic_trace_square(n, k) - 4 * (k - 1) - (n - k - 1)


def unicyclic_block_matrix(n: int, k: int) -> np.ndarray:
    """标号为圈顶点在前、树顶点在后的路径矩阵[[2J_k, 1], [1, J_{n-k}]]"""
    _check_range(n, k, allow_cycle=True)
    matrix = np.ones((n, n), dtype=np.int64)
    matrix[:k, :k] = 2
    np.fill_diagonal(matrix, 0)
    return matrix
