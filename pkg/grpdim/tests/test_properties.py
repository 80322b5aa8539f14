"""Property suites quantified over the built-in catalog."""
import pytest

from src.closed_forms import (
    enhanced_attains_n_minus_1,
    formula_for,
    omega_reduced_power,
    omega_reduced_reduced_power,
    omega_reduced_supergraph,
    reduced_attains_n_minus_1,
    reduced_attains_n_minus_2,
    reduced_power_quotient_is_star,
    reduced_power_same_class,
    sdim_enhanced,
    supergraph_attains_n_minus_1,
    supergraph_attains_n_minus_2,
    supergraph_same_class,
)
from src.graphs.builders import FAMILIES, Family, build_graph, reduced_graph
from src.groups.builders import build_group
from src.groups.catalog import builtin_catalog
from src.groups.profile import cyclic_lattice, is_cyclic_subset, order_profile, prime_factors
from src.sdim import (
    clique_number,
    is_proper_order_chain,
    is_strong_resolving_set,
    iter_maximal_cliques,
    maximum_clique,
    sdim_diameter2,
    sdim_subset_oracle,
    sdim_vertex_cover,
)

pytestmark = pytest.mark.slow

CATALOG_16 = builtin_catalog(16)
CATALOG_32 = builtin_catalog(32)
CLOSED_FORM_FAMILIES = [Family.SUPERGRAPH, Family.ENHANCED, Family.REDUCED_POWER]


@pytest.fixture(scope="module")
def prepared():
    """spec -> (group, profile, lattice, {family: graph}) for the whole catalog up to 32."""
    data = {}
    for spec in CATALOG_32:
        group = build_group(spec)
        lattice = cyclic_lattice(group)
        graphs = {fam: build_graph(group, fam, lattice) for fam in FAMILIES}
        data[spec] = (group, order_profile(group), lattice, graphs)
    return data


@pytest.mark.parametrize("spec", CATALOG_16)
@pytest.mark.parametrize("family", CLOSED_FORM_FAMILIES)
def test_formula_matches_every_engine_up_to_16(spec, family, prepared):
    group, profile, lattice, graphs = prepared[spec]
    graph = graphs[family]
    expected = formula_for(group, family, profile=profile, lattice=lattice).value
    assert sdim_diameter2(graph).value == expected
    assert sdim_vertex_cover(graph).value == expected
    assert sdim_subset_oracle(graph).value == expected


@pytest.mark.parametrize("spec", CATALOG_32)
@pytest.mark.parametrize("family", CLOSED_FORM_FAMILIES)
def test_formula_matches_engines_up_to_32(spec, family, prepared):
    group, profile, lattice, graphs = prepared[spec]
    graph = graphs[family]
    expected = formula_for(group, family, profile=profile, lattice=lattice).value
    assert sdim_diameter2(graph).value == expected
    assert sdim_vertex_cover(graph).value == expected


@pytest.mark.parametrize("spec", CATALOG_16)
def test_power_graph_engines_agree(spec, prepared):
    graph = prepared[spec][3][Family.POWER]
    value = sdim_diameter2(graph).value
    assert sdim_vertex_cover(graph).value == value
    assert sdim_subset_oracle(graph).value == value


def test_supergraph_class_predicate_matches_neighborhoods(prepared):
    for spec, (group, profile, _, graphs) in prepared.items():
        if len(prime_factors(group.n)) < 2:
            continue
        graph = graphs[Family.SUPERGRAPH]
        for x in range(group.n):
            for y in range(x + 1, group.n):
                same = graph.closed_mask(x) == graph.closed_mask(y)
                assert supergraph_same_class(group, x, y, profile) == same, (spec, x, y)


def test_reduced_power_class_predicate_matches_neighborhoods(prepared):
    for spec, (group, profile, _, graphs) in prepared.items():
        graph = graphs[Family.REDUCED_POWER]
        for x in range(group.n):
            for y in range(x + 1, group.n):
                same = graph.closed_mask(x) == graph.closed_mask(y)
                assert reduced_power_same_class(group, x, y, profile) == same, (spec, x, y)


def test_enhanced_neighborhood_is_union_of_maximal_cyclics(prepared):
    for spec, (group, _, lattice, graphs) in prepared.items():
        graph = graphs[Family.ENHANCED]
        for x in range(group.n):
            union = 0
            for mid in lattice.membership[x]:
                union |= lattice.maximal_mask(mid)
            assert graph.closed_mask(x) == union, (spec, x)


def test_enhanced_adjacency_means_cyclic_pair():
    for spec in CATALOG_16:
        group = build_group(spec)
        graph = build_graph(group, Family.ENHANCED)
        for x in range(group.n):
            for y in range(x + 1, group.n):
                assert graph.has_edge(x, y) == is_cyclic_subset(group, [x, y]), (spec, x, y)


def test_supergraph_quotient_cliques_are_proper_order_chains(prepared):
    for spec, (group, _, _, graphs) in prepared.items():
        reduced = reduced_graph(graphs[Family.SUPERGRAPH])
        best = maximum_clique(reduced.quotient)
        assert is_proper_order_chain(group, [reduced.reps[i] for i in best]), spec
        for clique in iter_maximal_cliques(reduced.quotient):
            assert is_proper_order_chain(group, [reduced.reps[i] for i in clique]), (spec, clique)


def test_reduced_power_maximal_cliques_generate_cyclic_subgroups(prepared):
    for spec, (group, _, _, graphs) in prepared.items():
        for clique in iter_maximal_cliques(graphs[Family.REDUCED_POWER]):
            assert is_cyclic_subset(group, clique), (spec, clique)


def test_enhanced_maximum_quotient_clique_is_a_maximal_cyclic_subgroup(prepared):
    for spec, (group, _, lattice, graphs) in prepared.items():
        reduced = reduced_graph(graphs[Family.ENHANCED])
        union = 0
        for v in reduced.class_union(maximum_clique(reduced.quotient)):
            union |= 1 << v
        maximal_masks = {lattice.maximal_mask(mid) for mid in range(len(lattice.maximals))}
        assert union in maximal_masks, spec


def test_reduced_quotient_clique_numbers(prepared):
    for spec, (group, profile, _, graphs) in prepared.items():
        supergraph_quotient = reduced_graph(graphs[Family.SUPERGRAPH]).quotient
        assert clique_number(supergraph_quotient) == omega_reduced_supergraph(profile), spec

        reduced_power = graphs[Family.REDUCED_POWER]
        assert clique_number(reduced_power) == omega_reduced_power(profile), spec
        assert clique_number(reduced_graph(reduced_power).quotient) == omega_reduced_reduced_power(profile), spec

        enhanced_quotient = reduced_graph(graphs[Family.ENHANCED]).quotient
        assert clique_number(enhanced_quotient) == sdim_enhanced(group).omega_reduced, spec


def test_extremal_characterizations(prepared):
    for spec, (group, profile, _, graphs) in prepared.items():
        n = group.n
        s = sdim_diameter2(graphs[Family.SUPERGRAPH]).value
        e = sdim_diameter2(graphs[Family.ENHANCED]).value
        r = sdim_diameter2(graphs[Family.REDUCED_POWER]).value

        assert (s == n - 1) == supergraph_attains_n_minus_1(profile), spec
        assert (s == n - 2) == supergraph_attains_n_minus_2(profile), spec
        assert (e == n - 1) == enhanced_attains_n_minus_1(profile), spec
        assert (r == n - 1) == reduced_attains_n_minus_1(profile), spec
        assert (r == n - 2) == reduced_attains_n_minus_2(profile), spec
        assert reduced_power_quotient_is_star(group) == reduced_attains_n_minus_2(profile), spec
        if profile.flags.is_P_group and not profile.flags.is_cyclic:
            assert e == n - 2, spec


def test_quotient_classes_are_twin_classes(prepared):
    for spec, (group, _, _, graphs) in prepared.items():
        for family in CLOSED_FORM_FAMILIES:
            graph = graphs[family]
            reduced = reduced_graph(graph)
            for cls in reduced.classes:
                masks = {graph.closed_mask(v) for v in cls}
                assert len(masks) == 1, (spec, family)
            reps_masks = [graph.closed_mask(r) for r in reduced.reps]
            assert len(set(reps_masks)) == len(reps_masks), (spec, family)
            assert sorted(v for cls in reduced.classes for v in cls) == list(range(group.n))


@pytest.mark.parametrize("spec", CATALOG_32)
@pytest.mark.parametrize("family", FAMILIES)
def test_engine_witnesses_are_strong_resolving_sets(spec, family, prepared):
    graph = prepared[spec][3][family]
    for result in (sdim_diameter2(graph), sdim_vertex_cover(graph)):
        assert len(result.witness) == result.value
        assert is_strong_resolving_set(graph, result.witness)


@pytest.mark.parametrize("spec", CATALOG_16)
@pytest.mark.parametrize("family", FAMILIES)
def test_supersets_of_strong_resolving_sets_resolve(spec, family, prepared):
    graph = prepared[spec][3][family]
    witness = sdim_vertex_cover(graph).witness
    for v in sorted(set(range(graph.vcount)) - set(witness)):
        assert is_strong_resolving_set(graph, witness + [v])
