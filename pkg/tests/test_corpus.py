import pytest
from src.core.exceptions import GraphFormatError, ParameterError
from src.graphs.generators import complete, path
from src.graphs.graph import Graph, is_connected, unicyclic_cycle_length
from src.verify.corpus import Corpus, CorpusLoader, CorpusSource, exhaustive_small_graphs


def _count_on(corpus: Corpus, n: int) -> int:
    return sum(1 for g in corpus.graphs if g.n == n)


def test_exhaustive_counts():
    corpus = exhaustive_small_graphs(4)
    assert [_count_on(corpus, n) for n in range(1, 5)] == [1, 1, 4, 38]
    assert all(is_connected(g) for g in corpus.graphs)
    assert corpus.source == CorpusSource.EXHAUSTIVE


def test_exhaustive_two():
    corpus = exhaustive_small_graphs(2)
    assert corpus.graphs == [Graph(1), complete(2)]


def test_exhaustive_three_contains_path_and_triangle():
    graphs = exhaustive_small_graphs(3).graphs
    assert path(3) in graphs
    assert complete(3) in graphs


@pytest.mark.parametrize("max_n", [0, 8])
def test_exhaustive_limits(max_n):
    with pytest.raises(ParameterError):
        exhaustive_small_graphs(max_n)


def test_unicyclic_sweep():
    corpus = CorpusLoader().unicyclic_sweep(3, 6)
    # 每个n: (n-3)个k各三种挂接方式，再加C_n
    assert corpus.size == sum(3 * (n - 3) + 1 for n in range(3, 7))
    assert corpus.orders() == [3, 4, 5, 6]
    for entry in corpus.entries:
        assert unicyclic_cycle_length(entry.graph) is not None
    ids = [entry.graph_id for entry in corpus.entries]
    assert "U(5,3,pendant-star)" in ids and "C(6)" in ids
    assert len(set(ids)) == len(ids)


def test_random_sample_is_deterministic():
    first = Corpus.parse("random:10:7:42")
    second = Corpus.parse("random:10:7:42")
    assert first.graphs == second.graphs
    assert first.seed == 42
    assert all(g.n == 7 and is_connected(g) for g in first.graphs)
    assert Corpus.parse("random:10:7:43").graphs != first.graphs


def test_random_default_seed():
    corpus = Corpus.parse("random:3:6")
    assert corpus.description == "random:3:6:1729"


def test_graph6_corpus_drops_disconnected(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text("Bw\nB?\nCl\n", encoding="ascii")
    corpus = Corpus.parse(f"graph6:{source}")
    assert [entry.graph_id for entry in corpus.entries] == ["G0", "G2"]


def test_graph6_corpus_keeps_disconnected_when_asked():
    corpus = CorpusLoader(connected_only=False).graph6("Bw\nB?\n")
    assert corpus.size == 2


def test_size_bounds():
    corpus = CorpusLoader(min_n=3, max_n=3).exhaustive(4)
    assert corpus.orders() == [3]


@pytest.mark.parametrize(
    "spec",
    ["exhaustive:x", "unicyclic:5", "random:1", "graph6:", "nauty:5", "unicyclic:9..3", "graph6:/no/such/file"],
)
def test_bad_specs(spec):
    with pytest.raises(ParameterError):
        Corpus.parse(spec)


def test_bad_graph6_content(tmp_path):
    source = tmp_path / "bad.g6"
    source.write_text("A`\n", encoding="ascii")
    with pytest.raises(GraphFormatError):
        Corpus.parse(f"graph6:{source}")
