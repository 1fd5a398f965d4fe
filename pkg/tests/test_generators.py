import pytest
from src.core.exceptions import ParameterError
from src.core.models import AttachmentShape, FamilyKind, GraphFamily
from src.graphs.generators import (
    complete,
    cycle,
    generate,
    path,
    petersen,
    random_connected,
    star,
    triangle_chain,
    unicyclic,
)
from src.graphs.graph import is_connected, is_tree, max_degree, unicyclic_cycle_length


def test_basic_families():
    assert path(4).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(5).edge_count == 5
    assert complete(5).edge_count == 10
    assert is_tree(star(6)) and max_degree(star(6)) == 5
    assert star(1).edge_count == 0


def test_petersen_is_cubic():
    g = petersen()
    assert g.n == 10 and g.edge_count == 15
    assert all(len(g.neighbors(v)) == 3 for v in range(10))


def test_triangle_chain():
    g = triangle_chain(50)
    assert g.n == 101
    assert g.edge_count == 150
    assert is_connected(g)


@pytest.mark.parametrize("shape", list(AttachmentShape))
def test_unicyclic_every_order_and_cycle_length(shape):
    for n in range(3, 31):
        for k in range(3, n + 1):
            g = unicyclic(n, k, shape, seed=n * 100 + k)
            assert g.n == n and g.edge_count == n
            assert is_connected(g)
            assert unicyclic_cycle_length(g) == k


def test_cycle_is_two_regular_and_connected():
    for n in range(3, 31):
        g = cycle(n)
        assert all(len(g.neighbors(v)) == 2 for v in range(n))
        assert is_connected(g)


def test_unicyclic_random_tree_is_seeded():
    a = unicyclic(15, 4, AttachmentShape.RANDOM_TREE, seed=3)
    b = unicyclic(15, 4, AttachmentShape.RANDOM_TREE, seed=3)
    assert a == b


@pytest.mark.parametrize("n, k", [(5, 2), (5, 6)])
def test_unicyclic_range(n, k):
    with pytest.raises(ParameterError):
        unicyclic(n, k)


def test_random_connected():
    g = random_connected(30, 60, seed=11)
    assert g.edge_count == 60
    assert is_connected(g)
    assert random_connected(30, 60, seed=11) == g
    assert is_tree(random_connected(12, 11, seed=5))
    assert random_connected(6, 15, seed=0) == complete(6)


def test_random_connected_edge_range():
    with pytest.raises(ParameterError):
        random_connected(5, 3)
    with pytest.raises(ParameterError):
        random_connected(5, 11)


def test_generate_dispatch():
    assert generate(GraphFamily(kind=FamilyKind.CYCLE, n=4)) == cycle(4)
    assert generate(GraphFamily(kind=FamilyKind.TRIANGLE_CHAIN, n=2)) == triangle_chain(2)
    g = generate(GraphFamily(kind=FamilyKind.UNICYCLIC, n=7, k=4, shape=AttachmentShape.PENDANT_STAR))
    assert unicyclic_cycle_length(g) == 4
    with pytest.raises(ParameterError):
        generate(GraphFamily(kind=FamilyKind.UNICYCLIC, n=7))
    with pytest.raises(ParameterError):
        generate(GraphFamily(kind=FamilyKind.CYCLE, n=2))
