import logging
from math import lcm
from typing import Dict, FrozenSet, Iterable, Set

from sympy import factorint

from .model import CyclicLattice, ElementOrderProfile, FiniteGroup, GroupFlags, mask_to_set

logger = logging.getLogger(__name__)


def big_omega(m: int) -> int:
    """Number of prime factors of m counted with multiplicity; Omega(1) = 0."""
    if m < 1:
        raise ValueError(f"big_omega requires m >= 1, got {m}")
    return sum(factorint(m).values())


def prime_factors(m: int) -> Set[int]:
    return set(factorint(m).keys())


def is_prime_power(m: int) -> bool:
    """True for p^k with k >= 1. 1 is not a prime power."""
    return len(factorint(m)) == 1


def order_profile(group: FiniteGroup) -> ElementOrderProfile:
    """
    Computes o(x) for every element by repeated multiplication and derives
    pi_e(G), exp(G), lambda_G and the classification flags.

    Args:
        group: A validated FiniteGroup.

    Returns:
        The ElementOrderProfile of the group.
    """
    n = group.n
    orders = [group.order_of(x) for x in range(n)]
    pi_e = sorted(set(orders))
    exponent = lcm(*pi_e)

    nontrivial = [m for m in pi_e if m > 1]
    n_primes = prime_factors(n)

    is_cyclic = n in pi_e
    is_abelian = bool((group.table == group.table.T).all())
    is_p_group = len(n_primes) == 1
    p = next(iter(n_primes)) if is_p_group else None
    is_cp_group = all(is_prime_power(m) for m in nontrivial)
    is_P_group = all(big_omega(m) == 1 for m in nontrivial)

    involutions = [x for x, o in enumerate(orders) if o == 2]
    unique_involution = involutions[0] if len(involutions) == 1 else None

    # p-группа с единственной инволюцией: циклическая или обобщённая кватернионная
    is_gq = p == 2 and not is_cyclic and unique_involution is not None
    t = n.bit_length() - 3 if is_gq else None

    non_prime_power = [big_omega(m) for m in nontrivial if not is_prime_power(m)]
    lambda_g = max(non_prime_power) if non_prime_power else None
    max_big_omega = max(big_omega(m) for m in pi_e)

    flags = GroupFlags(
        is_cyclic=is_cyclic,
        is_abelian=is_abelian,
        is_p_group=is_p_group,
        p=p,
        is_cp_group=is_cp_group,
        is_P_group=is_P_group,
        is_generalized_quaternion=is_gq,
        t=t,
        unique_involution=unique_involution,
    )
    logger.debug(f"Profile of {group.name}: pi_e={pi_e}, exp={exponent}, lambda={lambda_g}")
    return ElementOrderProfile(
        n=n,
        orders=orders,
        pi_e=pi_e,
        exponent=exponent,
        lambda_g=lambda_g,
        max_big_omega=max_big_omega,
        flags=flags,
    )


def order_counts(profile: ElementOrderProfile) -> Dict[int, int]:
    """d -> number of elements of order d."""
    counts: Dict[int, int] = {}
    for o in profile.orders:
        counts[o] = counts.get(o, 0) + 1
    return dict(sorted(counts.items()))


def cyclic_lattice(group: FiniteGroup) -> CyclicLattice:
    """
    Enumerates <g> for every g, deduplicates them and marks the inclusion-maximal ones.

    Args:
        group: A validated FiniteGroup.

    Returns:
        CyclicLattice with M_G and the per-element sets M_x.
    """
    index_of: Dict[int, int] = {}
    cyclics = []
    generators = []
    cyclic_of = []
    for g in range(group.n):
        mask = 0
        for x in group.powers(g):
            mask |= 1 << x
        if mask not in index_of:
            index_of[mask] = len(cyclics)
            cyclics.append(mask)
            generators.append(g)
        cyclic_of.append(index_of[mask])

    maximals = []
    for k, mask in enumerate(cyclics):
        # <g> максимальна, если не лежит строго ни в одной другой циклической подгруппе
        contained = any(other != mask and mask & ~other == 0 for other in cyclics)
        if not contained:
            maximals.append(k)

    lattice = CyclicLattice(group.n, cyclics, generators, maximals, cyclic_of)
    logger.debug(f"{group.name}: {len(cyclics)} cyclic subgroups, {len(maximals)} maximal")
    return lattice


def signature_class(lattice: CyclicLattice, g: int) -> Set[int]:
    """
    C(g): elements lying in every maximal cyclic subgroup that contains g and in
    no maximal cyclic subgroup that does not.
    """
    full = (1 << lattice.n) - 1
    inside = full
    outside = 0
    for mid in range(len(lattice.maximals)):
        mask = lattice.maximal_mask(mid)
        if mid in lattice.membership[g]:
            inside &= mask
        else:
            outside |= mask
    return mask_to_set(inside & ~outside)


def signature_classes(lattice: CyclicLattice) -> Dict[FrozenSet[int], Set[int]]:
    """Groups elements by their membership signature M_x."""
    classes: Dict[FrozenSet[int], Set[int]] = {}
    for x in range(lattice.n):
        classes.setdefault(lattice.membership[x], set()).add(x)
    return classes


def generated_subgroup(group: FiniteGroup, elements: Iterable[int]) -> Set[int]:
    """The subgroup generated by the given elements (closure under multiplication)."""
    gens = sorted(set(elements))
    subgroup = {0}
    frontier = [0]
    while frontier:
        h = frontier.pop()
        for g in gens:
            product = group.mul(h, g)
            if product not in subgroup:
                subgroup.add(product)
                frontier.append(product)
    return subgroup


def is_cyclic_subset(group: FiniteGroup, elements: Iterable[int]) -> bool:
    """True iff the subgroup generated by the elements is cyclic."""
    subgroup = generated_subgroup(group, elements)
    return any(group.order_of(x) == len(subgroup) for x in subgroup)
