from typing import Optional
from src.core.config import settings
from src.core.exceptions import ParameterError
from src.core.logger import get_logger
from src.core.models import Spectrum

logger = get_logger(__name__)


def spectral_radius(spec: Spectrum) -> float:
    """最大特征值ρ1"""
    if not spec.eigenvalues:
        raise ParameterError("谱为空，没有谱半径")
    return spec.eigenvalues[0]


def path_energy(spec: Spectrum, tol: Optional[float] = None) -> float:
    """路径能量：特征值绝对值之和"""
    tol = settings.eigen_tolerance if tol is None else tol
    energy = sum(abs(x) for x in spec.eigenvalues)
    # 迹为0，所以能量也等于正特征值之和的两倍
    doubled = 2.0 * sum(x for x in spec.eigenvalues if x > 0)
    scale = max(1.0, abs(spec.eigenvalues[0])) if spec.eigenvalues else 1.0
    if abs(energy - doubled) > 2.0 * tol * spec.order * scale:
        logger.warning("能量与正特征值两倍之和不一致", energy=energy, doubled=doubled)
    return energy


def trace_residual(spec: Spectrum) -> float:
    """|Σρ_i|，路径矩阵的迹为0"""
    return abs(sum(spec.eigenvalues))


def frobenius_residual(spec: Spectrum, square_sum: float) -> float:
    """|Σρ_i^2 - Σp_ij^2|"""
    return abs(sum(x * x for x in spec.eigenvalues) - square_sum)
