import math
from typing import Tuple
from src.core.exceptions import ParameterError
from src.core.models import EnergyBounds, UnicyclicExtremes


def spectral_radius_bounds(n: int) -> Tuple[float, float]:
    """连通图的谱半径界 (n-1, (n-1)^2)，分别在树和完全图处取等"""
    if n < 1:
        raise ParameterError(f"n必须为正: {n}")
    return float(n - 1), float((n - 1) ** 2)


def general_energy_bounds(n: int) -> Tuple[float, float]:
    """连通图的路径能量界 (2(n-1), 2(n-1)^2)"""
    if n < 1:
        raise ParameterError(f"n必须为正: {n}")
    return 2.0 * (n - 1), 2.0 * (n - 1) ** 2


def unicyclic_stated_min(n: int) -> float:
    """n + sqrt(n^2 - 4n + 28)"""
    return n + math.sqrt(n * n - 4 * n + 28)


def unicyclic_min_spectral_radius(n: int) -> float:
    """单圈图中最小的谱半径 (n + sqrt(n^2 - 4n + 28)) / 2，在k = 3处取到"""
    if n < 3:
        raise ParameterError(f"单圈图至少需要3个顶点: n={n}")
    return unicyclic_stated_min(n) / 2.0


def energy_bounds(n: int) -> EnergyBounds:
    lower, upper = general_energy_bounds(n)
    return EnergyBounds(
        n=n,
        general_lower=lower,
        general_upper=upper,
        unicyclic_upper=4.0 * (n - 1),
        unicyclic_stated_lower=unicyclic_stated_min(n),
    )


def unicyclic_extremes(n: int) -> UnicyclicExtremes:
    """文献给出的单圈图能量极值：最小值在k = 3，最大值在C_n"""
    if n < 3:
        raise ParameterError(f"单圈图至少需要3个顶点: n={n}")
    return UnicyclicExtremes(
        n=n,
        stated_min=unicyclic_stated_min(n),
        max=4.0 * (n - 1),
        argmin_k=3,
        argmax_is_cycle=True,
    )


def trace_square_bound(n: int, max_degree: int) -> int:
    """tr(P^2) <= n(n-1)Δ^2"""
    return n * (n - 1) * max_degree * max_degree


def energy_cauchy_schwarz_bound(n: int, rho: float, trace_square: float) -> float:
    """PE <= ρ + sqrt((n-1)(tr(P^2) - ρ^2))"""
    return rho + math.sqrt(max((n - 1) * (trace_square - rho * rho), 0.0))
