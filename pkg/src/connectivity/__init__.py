# 顶点拆分最大流与路径矩阵
from src.connectivity.flow import FlowNetwork, max_disjoint_paths, max_flow_unit, split_transform
from src.connectivity.biconnected import (
    BiconnectedComponent,
    BiconnectedDecomposition,
    biconnected_components,
)
from src.connectivity.path_matrix import PathMatrix, PathMatrixBuilder, path_matrix

__all__ = [
    "BiconnectedComponent",
    "BiconnectedDecomposition",
    "FlowNetwork",
    "PathMatrix",
    "PathMatrixBuilder",
    "biconnected_components",
    "max_disjoint_paths",
    "max_flow_unit",
    "path_matrix",
    "split_transform",
]
