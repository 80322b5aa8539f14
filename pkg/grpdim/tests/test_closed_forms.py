import pytest

from src.closed_forms import (
    extremal_flags,
    formula_for,
    has_exponent_element,
    is_star,
    reduced_power_quotient_is_star,
    reduced_power_same_class,
    sdim_enhanced,
    sdim_enhanced_abelian_p,
    sdim_enhanced_quaternion,
    sdim_order_supergraph,
    sdim_reduced,
    sdim_reduced_quaternion,
    sdim_supergraph_quaternion,
    supergraph_same_class,
)
from src.errors import PreconditionError, PredicateError
from src.graphs.builders import Family
from src.graphs.model import SimpleGraph
from src.groups.builders import build_group
from src.groups.profile import order_profile


@pytest.mark.parametrize(
    "spec, value, branch",
    [
        ("Z1", 0, "degenerate"),
        ("Z9", 8, "p_group"),
        ("Q8", 7, "p_group"),
        ("S3", 4, "cp_non_p"),
        ("S4", 22, "cp_non_p"),
        ("Z6", 4, "cyclic_non_p"),
        ("Z12", 9, "cyclic_non_p"),
        ("Q12", 9, "otherwise"),
        ("Z2xQ12", 21, "otherwise"),
        ("D12", 10, "exponent_element"),
        ("Z4xS3", 21, "exponent_element"),
    ],
)
def test_supergraph_formula(spec, value, branch):
    report = sdim_order_supergraph(build_group(spec))
    assert report.value == value
    assert report.branch == branch
    assert report.family is Family.SUPERGRAPH


def test_supergraph_report_fields():
    report = sdim_order_supergraph(build_group("Q12"))
    data = report.to_json_dict()
    assert data["lambda"] == 2
    assert data["exponent"] == 12
    assert data["omega_n"] == 3
    assert data["omega_reduced"] == 3
    assert data["family"] == "supergraph"
    assert sdim_order_supergraph(build_group("S3")).omega_reduced == 2


def test_exponent_element_detection():
    assert has_exponent_element(order_profile(build_group("D12")))
    assert has_exponent_element(order_profile(build_group("Z6")))
    assert not has_exponent_element(order_profile(build_group("Q12")))


@pytest.mark.parametrize(
    "spec, value, branch",
    [
        ("Z1", 0, "degenerate"),
        ("Z10", 9, "cyclic"),
        ("S3", 4, "non_cyclic_P_group"),
        ("Q8", 6, "generalized_quaternion"),
        ("Z2xZ4", 5, "abelian_p_group"),
        ("Z3xZ3", 7, "abelian_p_group"),
        ("Z2xZ2xZ4", 13, "abelian_p_group"),
        ("D8", 6, "maximal_cyclic_signatures"),
    ],
)
def test_enhanced_formula(spec, value, branch):
    report = sdim_enhanced(build_group(spec))
    assert report.value == value
    assert report.branch == branch
    assert report.omega_reduced == report.n - value


@pytest.mark.parametrize("spec, value", [("Z2xZ4", 5), ("Z3xZ3", 7), ("Z2xZ2xZ4", 13), ("E2^2", 2), ("Z4xZ4", 13)])
def test_enhanced_abelian_p_group(spec, value):
    group = build_group(spec)
    assert sdim_enhanced_abelian_p(group) == value
    assert sdim_enhanced(group).value == value


@pytest.mark.parametrize("spec", ["Z8", "S3", "Q8", "Z6"])
def test_enhanced_abelian_p_group_precondition(spec):
    with pytest.raises(PreconditionError):
        sdim_enhanced_abelian_p(build_group(spec))


@pytest.mark.parametrize(
    "spec, value, branch",
    [
        ("Z1", 0, "degenerate"),
        ("Z2", 1, "cyclic_2_group"),
        ("Z4", 2, "cyclic_2_group"),
        ("Z8", 5, "cyclic_2_group"),
        ("Q8", 6, "generalized_quaternion"),
        ("Q16", 13, "generalized_quaternion"),
        ("S3", 4, "otherwise"),
        ("Z12", 8, "otherwise"),
        ("D8", 5, "otherwise"),
    ],
)
def test_reduced_power_formula(spec, value, branch):
    report = sdim_reduced(build_group(spec))
    assert report.value == value
    assert report.branch == branch


def test_reduced_power_auxiliary():
    report = sdim_reduced(build_group("Z12"))
    assert report.omega_reduced == 4
    assert report.auxiliary["omega_power_graph"] == 4
    q16 = sdim_reduced(build_group("Q16"))
    assert q16.auxiliary["t"] == 2
    assert q16.omega_reduced == 3
    assert sdim_reduced(build_group("Z8")).auxiliary["k"] == 3


@pytest.mark.parametrize("k", range(2, 9))
def test_quaternion_shortcuts_match_group_formulas(k):
    group = build_group(f"Q{4 * k}")
    assert sdim_supergraph_quaternion(k) == sdim_order_supergraph(group).value
    assert sdim_enhanced_quaternion(k) == sdim_enhanced(group).value
    assert sdim_reduced_quaternion(k) == sdim_reduced(group).value


def test_quaternion_shortcut_values():
    assert sdim_supergraph_quaternion(3) == 9
    assert sdim_supergraph_quaternion(4) == 15
    assert sdim_supergraph_quaternion(6) == 21
    assert sdim_reduced_quaternion(4) == 13
    assert sdim_reduced_quaternion(5) == 17
    with pytest.raises(PreconditionError):
        sdim_enhanced_quaternion(1)


def test_formula_for_dispatch():
    group = build_group("Q8")
    assert formula_for(group, Family.REDUCED_POWER).value == 6
    assert formula_for(group, "reduced").value == 6
    assert formula_for(group, "enhanced").family is Family.ENHANCED
    with pytest.raises(PreconditionError):
        formula_for(group, Family.POWER)


def test_supergraph_same_class_cases():
    z6 = build_group("Z6")
    # e и порождающий: {1, exp(G)}
    assert supergraph_same_class(z6, 0, 1)
    assert supergraph_same_class(z6, 1, 5)
    assert not supergraph_same_class(z6, 2, 3)
    with pytest.raises(PreconditionError):
        supergraph_same_class(z6, 2, 2)

    q12 = build_group("Q12")
    assert not supergraph_same_class(q12, 6, 3)

    s4 = build_group("S4")
    orders = [s4.order_of(x) for x in range(s4.n)]
    four, two = orders.index(4), orders.index(2)
    assert supergraph_same_class(s4, four, two)


def test_supergraph_same_class_rejects_prime_power_order():
    with pytest.raises(PredicateError):
        supergraph_same_class(build_group("Z9"), 1, 2)
    with pytest.raises(PredicateError):
        supergraph_same_class(build_group("Q8"), 1, 2)


def test_reduced_power_same_class_cases():
    assert reduced_power_same_class(build_group("Q16"), 0, 4)
    assert reduced_power_same_class(build_group("Z8"), 4, 0)
    assert not reduced_power_same_class(build_group("Q16"), 0, 1)
    assert not reduced_power_same_class(build_group("S3"), 0, 1)
    assert not reduced_power_same_class(build_group("Z6"), 0, 3)
    with pytest.raises(PreconditionError):
        reduced_power_same_class(build_group("Z4"), 1, 1)


def test_is_star():
    assert is_star(SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert is_star(SimpleGraph.complete(2))
    assert not is_star(SimpleGraph.complete(1))
    assert not is_star(SimpleGraph.complete(3))
    assert not is_star(SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))


@pytest.mark.parametrize("spec, expected", [("Z3", True), ("Z4", True), ("Q8", True), ("S3", True), ("E3^2", True), ("Z2", False), ("Z8", False), ("Q16", False), ("Z6", False)])
def test_reduced_power_quotient_is_star(spec, expected):
    assert reduced_power_quotient_is_star(build_group(spec)) is expected


def test_extremal_flags():
    assert extremal_flags(build_group("D12"))["supergraph_n_minus_2"]
    assert extremal_flags(build_group("S4"))["supergraph_n_minus_2"]
    assert not extremal_flags(build_group("Q12"))["supergraph_n_minus_2"]
    z9 = extremal_flags(build_group("Z9"))
    assert z9["supergraph_n_minus_1"]
    assert z9["enhanced_n_minus_1"]
    assert not z9["supergraph_n_minus_2"]
    z2 = extremal_flags(build_group("Z2"))
    assert z2["reduced_power_n_minus_1"]
    assert not z2["reduced_power_n_minus_2"]
    assert extremal_flags(build_group("S3"))["enhanced_n_minus_2"]
