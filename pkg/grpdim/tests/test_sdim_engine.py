import networkx as nx
import pytest

from src.errors import CapacityError, PreconditionError, VertexRangeError
from src.graphs.builders import Family, build_graph, reduced_graph
from src.graphs.model import SimpleGraph
from src.groups.builders import build_group
from src.sdim import (
    SdimMethod,
    clique_number,
    is_proper_order_chain,
    is_strong_resolving_set,
    iter_maximal_cliques,
    maximum_clique,
    sdim,
    sdim_diameter2,
    sdim_subset_oracle,
    sdim_vertex_cover,
    strong_resolving_graph,
    strongly_resolves,
)
from src.sdim.clique import degeneracy_order


def from_networkx(g: nx.Graph, name: str = "nx") -> SimpleGraph:
    g = nx.convert_node_labels_to_integers(g)
    return SimpleGraph.from_edges(g.number_of_nodes(), g.edges(), name=name)


def star(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(0, i) for i in range(1, n)], name=f"Star{n}")


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


ALL_METHODS = [sdim_subset_oracle, sdim_vertex_cover, sdim_diameter2]


@pytest.mark.parametrize("n", range(2, 11))
@pytest.mark.parametrize("method", ALL_METHODS)
def test_complete_graph(n, method):
    result = method(SimpleGraph.complete(n))
    assert result.value == n - 1
    assert result.vcount == n


@pytest.mark.parametrize("n", range(3, 11))
@pytest.mark.parametrize("method", ALL_METHODS)
def test_star(n, method):
    assert method(star(n)).value == n - 2


@pytest.mark.parametrize("method", ALL_METHODS)
def test_path_on_three_vertices(method):
    assert method(path(3)).value == 1


def test_single_vertex():
    graph = SimpleGraph(1, [0])
    for method in ALL_METHODS:
        result = method(graph)
        assert result.value == 0
        assert result.witness == []


@pytest.mark.parametrize(
    "graph, expected",
    [
        (path(6), 1),
        (from_networkx(nx.cycle_graph(5), "C5"), 3),
        (from_networkx(nx.cycle_graph(6), "C6"), 3),
        (from_networkx(nx.petersen_graph(), "Petersen"), 8),
    ],
)
def test_oracle_agrees_with_vertex_cover(graph, expected):
    oracle = sdim_subset_oracle(graph)
    cover = sdim_vertex_cover(graph)
    assert oracle.value == cover.value == expected
    assert is_strong_resolving_set(graph, oracle.witness)
    assert is_strong_resolving_set(graph, cover.witness)


def test_diameter2_matches_on_petersen_and_c5():
    for g, expected in ((nx.petersen_graph(), 8), (nx.cycle_graph(5), 3)):
        graph = from_networkx(g)
        result = sdim_diameter2(graph)
        assert result.value == expected
        assert result.omega_reduced == 2
        assert is_strong_resolving_set(graph, result.witness)


def test_diameter2_rejects_long_paths_and_disconnected_graphs():
    with pytest.raises(PreconditionError):
        sdim_diameter2(path(4))
    disconnected = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError):
        sdim_diameter2(disconnected)
    with pytest.raises(PreconditionError):
        sdim_subset_oracle(disconnected)
    with pytest.raises(PreconditionError):
        sdim_vertex_cover(disconnected)


def test_oracle_cap(monkeypatch):
    with pytest.raises(CapacityError):
        sdim_subset_oracle(SimpleGraph.complete(17))
    monkeypatch.setenv("GRPDIM_ORACLE_CAP", "4")
    with pytest.raises(CapacityError):
        sdim_subset_oracle(SimpleGraph.complete(5))
    assert sdim_subset_oracle(SimpleGraph.complete(5), cap=5).value == 4


def test_vertex_cover_budget_reports_bound():
    graph = build_graph(build_group("Q16"), Family.REDUCED_POWER)
    with pytest.raises(CapacityError) as exc:
        sdim_vertex_cover(graph, node_budget=1)
    assert exc.value.best_bound is not None
    assert exc.value.best_bound >= 13


def test_vertex_cover_cap():
    with pytest.raises(CapacityError):
        sdim_vertex_cover(SimpleGraph.complete(6), cap=5)


def test_strongly_resolves():
    graph = path(3)
    assert strongly_resolves(graph, 0, 1, 2)
    assert strongly_resolves(graph, 1, 1, 2)
    # центр не разрешает пару концов
    assert not strongly_resolves(graph, 1, 0, 2)
    with pytest.raises(PreconditionError):
        strongly_resolves(graph, 0, 1, 1)
    with pytest.raises(VertexRangeError):
        strongly_resolves(graph, 0, 1, 3)


def test_strong_resolving_graph_of_diameter_two_graph():
    # для диаметра 2: дополнение плюс рёбра между близнецами
    graph = build_graph(build_group("S3"), Family.SUPERGRAPH)
    resolving = strong_resolving_graph(graph)
    expected = set(graph.complement().edges())
    for cls in reduced_graph(graph).classes:
        expected |= {(u, v) for u in cls for v in cls if u < v}
    assert set(resolving.edges()) == expected


def test_strong_resolving_graph_of_path():
    assert strong_resolving_graph(path(5)).edges() == [(0, 4)]


@pytest.mark.parametrize(
    "graph",
    [
        from_networkx(nx.petersen_graph()),
        from_networkx(nx.gnp_random_graph(18, 0.4, seed=7)),
        from_networkx(nx.gnp_random_graph(24, 0.7, seed=11)),
        build_graph(build_group("Q12"), Family.ENHANCED),
        build_graph(build_group("Z2xS3"), Family.SUPERGRAPH),
    ],
)
def test_cliques_match_networkx(graph, to_networkx):
    ours = sorted(iter_maximal_cliques(graph))
    theirs = sorted(sorted(c) for c in nx.find_cliques(to_networkx(graph)))
    assert ours == theirs
    best = maximum_clique(graph)
    assert len(best) == max(len(c) for c in theirs)
    assert all(graph.has_edge(u, v) for i, u in enumerate(best) for v in best[i + 1:])


def test_clique_numbers_of_group_graphs():
    assert clique_number(build_graph(build_group("Z12"), Family.REDUCED_POWER)) == 4
    quotient = reduced_graph(build_graph(build_group("S3"), Family.SUPERGRAPH)).quotient
    assert clique_number(quotient) == 2


def test_clique_edge_cases():
    assert maximum_clique(SimpleGraph(0, [])) == []
    assert list(iter_maximal_cliques(SimpleGraph(0, []))) == []
    assert maximum_clique(SimpleGraph(3, [0, 0, 0])) == [0]
    with pytest.raises(CapacityError):
        maximum_clique(SimpleGraph.complete(5), cap=3)
    with pytest.raises(CapacityError):
        maximum_clique(from_networkx(nx.gnp_random_graph(30, 0.5, seed=3)), node_budget=2)


def test_degeneracy_order_is_permutation():
    graph = from_networkx(nx.gnp_random_graph(15, 0.3, seed=5))
    assert sorted(degeneracy_order(graph)) == list(range(15))


@pytest.mark.parametrize(
    "spec, family, expected",
    [
        ("D12", Family.SUPERGRAPH, 10),
        ("Z8", Family.REDUCED_POWER, 5),
        ("Q8", Family.REDUCED_POWER, 6),
        ("Q16", Family.REDUCED_POWER, 13),
        ("Z10", Family.ENHANCED, 9),
        ("S3", Family.ENHANCED, 4),
    ],
)
def test_engines_on_group_graphs(spec, family, expected):
    graph = build_graph(build_group(spec), family)
    values = {method.__name__: method(graph).value for method in ALL_METHODS}
    assert set(values.values()) == {expected}, values


def test_dispatcher():
    graph = star(5)
    assert sdim(graph, SdimMethod.VERTEX_COVER).value == 3
    assert sdim(graph, "subset_oracle").method is SdimMethod.SUBSET_ORACLE
    assert sdim(graph, SdimMethod.DIAMETER2_CLIQUE, clique_cap=10).value == 3
    with pytest.raises(PreconditionError):
        sdim(graph, SdimMethod.CLOSED_FORM)
    with pytest.raises(ValueError):
        sdim(graph, "guess")


def test_proper_order_chain():
    group = build_group("Z12")
    # порядки 1, 2, 4, 12
    assert is_proper_order_chain(group, [0, 6, 3, 1])
    assert not is_proper_order_chain(group, [6, 4])
    assert not is_proper_order_chain(group, [1, 5])
