import networkx as nx
import pytest
from hypothesis import strategies as st
from src.graphs.generators import complete, cycle, path, petersen, star, unicyclic
from src.graphs.graph import Graph
from src.core.models import AttachmentShape


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, connected: bool = False):
    """随机简单图；connected为True时先放一棵随机生成树"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        for v in range(1, n):
            parent = draw(st.integers(min_value=0, max_value=v - 1))
            edges.add((parent, v))
    return Graph(n, edges)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.sorted_edges())
    return h


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def p5() -> Graph:
    return path(5)


@pytest.fixture
def star5() -> Graph:
    return star(5)


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()


@pytest.fixture
def u53() -> Graph:
    return unicyclic(5, 3, AttachmentShape.PENDANT_PATH)


@pytest.fixture
def bowtie() -> Graph:
    """两个三角形共用顶点2"""
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
