# 图表示、格式与生成器
from src.graphs.graph import (
    Graph,
    component_labels,
    connected_components,
    cycle_vertices,
    degree,
    is_complete,
    is_connected,
    is_tree,
    max_degree,
    unicyclic_cycle_length,
)
from src.graphs.graph6 import looks_like_graph6, parse_graph6, read_graph6_stream, write_graph6
from src.graphs.edgelist import parse_edge_list, write_edge_list
from src.graphs.generators import generate

__all__ = [
    "Graph",
    "component_labels",
    "connected_components",
    "cycle_vertices",
    "degree",
    "generate",
    "is_complete",
    "is_connected",
    "is_tree",
    "looks_like_graph6",
    "max_degree",
    "parse_edge_list",
    "parse_graph6",
    "read_graph6_stream",
    "unicyclic_cycle_length",
    "write_edge_list",
    "write_graph6",
]
