"""Group classes on which sdim takes its largest values."""

from ..graphs.builders import Family, build_graph, reduced_graph
from ..graphs.model import SimpleGraph
from ..groups.model import ElementOrderProfile, FiniteGroup
from ..groups.profile import big_omega, order_profile, prime_factors


def supergraph_attains_n_minus_1(profile: ElementOrderProfile) -> bool:
    """sdim(S(G)) = n - 1 iff G is a p-group (or trivial)."""
    return profile.n == 1 or profile.flags.is_p_group


def supergraph_attains_n_minus_2(profile: ElementOrderProfile) -> bool:
    """
    sdim(S(G)) = n - 2 iff G is a CP-group whose order has two or more primes, or
    G has an element of order exp(G) = pq for distinct primes p, q (Z_pq, D_2pq, ...).
    """
    if profile.flags.is_cp_group:
        return len(prime_factors(profile.n)) >= 2
    exponent = profile.exponent
    return exponent in profile.pi_e and big_omega(exponent) == 2 and len(prime_factors(exponent)) == 2


def enhanced_attains_n_minus_1(profile: ElementOrderProfile) -> bool:
    """sdim(P_E(G)) = n - 1 iff G is cyclic."""
    return profile.flags.is_cyclic


def enhanced_attains_n_minus_2(profile: ElementOrderProfile) -> bool:
    """Sufficient only: non-cyclic P-groups give n - 2 (so do some others, Q8 among them)."""
    return profile.flags.is_P_group and not profile.flags.is_cyclic


def reduced_attains_n_minus_1(profile: ElementOrderProfile) -> bool:
    """sdim(P_R(G)) = n - 1 iff G is Z2 (or trivial)."""
    return profile.n <= 2


def reduced_attains_n_minus_2(profile: ElementOrderProfile) -> bool:
    """
    sdim(P_R(G)) = n - 2 iff G is Z4, Q8, or a P-group of order at least 3.

    Z2 is a P-group but sits in the n - 1 case instead.
    """
    flags = profile.flags
    if profile.n < 3:
        return False
    if flags.is_cyclic and profile.n == 4:
        return True
    if flags.is_generalized_quaternion and flags.t == 1:
        return True
    return flags.is_P_group


def is_star(graph: SimpleGraph) -> bool:
    """A tree on at least two vertices with one vertex adjacent to all others."""
    n = graph.vcount
    if n < 2 or graph.edge_count() != n - 1:
        return False
    return any(graph.degree(v) == n - 1 for v in range(n))


def reduced_power_quotient_is_star(group: FiniteGroup) -> bool:
    """Whether the reduced graph of P_R(G) is a star; equivalent to reduced_attains_n_minus_2."""
    graph = build_graph(group, Family.REDUCED_POWER)
    return is_star(reduced_graph(graph).quotient)


def extremal_flags(group: FiniteGroup) -> dict:
    """All characterization predicates for one group, keyed by name."""
    profile = order_profile(group)
    return {
        "supergraph_n_minus_1": supergraph_attains_n_minus_1(profile),
        "supergraph_n_minus_2": supergraph_attains_n_minus_2(profile),
        "enhanced_n_minus_1": enhanced_attains_n_minus_1(profile),
        "enhanced_n_minus_2": enhanced_attains_n_minus_2(profile),
        "reduced_power_n_minus_1": reduced_attains_n_minus_1(profile),
        "reduced_power_n_minus_2": reduced_attains_n_minus_2(profile),
    }
