# 特征值、谱半径与路径能量
from src.spectral.jacobi import JacobiEigenSolver, SymmetricMatrix, eigenvalues
from src.spectral.energy import frobenius_residual, path_energy, spectral_radius, trace_residual

__all__ = [
    "JacobiEigenSolver",
    "SymmetricMatrix",
    "eigenvalues",
    "frobenius_residual",
    "path_energy",
    "spectral_radius",
    "trace_residual",
]
