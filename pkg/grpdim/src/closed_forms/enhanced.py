import logging
from typing import Optional

from ..errors import PreconditionError
from ..graphs.builders import Family
from ..groups.model import CyclicLattice, ElementOrderProfile, FiniteGroup
from ..groups.profile import big_omega, cyclic_lattice, order_profile
from .model import FormulaReport

logger = logging.getLogger(__name__)


def _branch_label(profile: ElementOrderProfile) -> str:
    flags = profile.flags
    if profile.n == 1:
        return "degenerate"
    if flags.is_cyclic:
        return "cyclic"
    if flags.is_abelian and flags.is_p_group:
        return "abelian_p_group"
    if flags.is_generalized_quaternion:
        return "generalized_quaternion"
    if flags.is_P_group:
        return "non_cyclic_P_group"
    return "maximal_cyclic_signatures"


def sdim_enhanced(
    group: FiniteGroup,
    lattice: Optional[CyclicLattice] = None,
    profile: Optional[ElementOrderProfile] = None,
) -> FormulaReport:
    """
    sdim of the enhanced power graph P_E(G).

    Equals n minus the largest number of distinct M_x signatures found inside a
    single maximal cyclic subgroup. The branch label only records which known
    special case the group falls into; the value is always the signature count.
    """
    profile = profile or order_profile(group)
    lattice = lattice or cyclic_lattice(group)
    n = profile.n

    counts = lattice.signature_counts()
    best_mid = max(counts, key=counts.get)
    omega_reduced = counts[best_mid]
    value = n - omega_reduced
    branch = _branch_label(profile)

    logger.debug(f"P_E({group.name}): {len(lattice.maximals)} maximal cyclic subgroups, sdim {value}")
    return FormulaReport(
        family=Family.ENHANCED,
        branch=branch,
        value=value,
        n=n,
        omega_n=big_omega(n),
        lambda_g=profile.lambda_g,
        exponent=profile.exponent,
        max_big_omega=profile.max_big_omega,
        omega_reduced=omega_reduced,
        auxiliary={
            "maximal_cyclic": len(lattice.maximals),
            "witness_generator": lattice.generators[lattice.maximals[best_mid]],
        },
    )


def sdim_enhanced_abelian_p(group: FiniteGroup, profile: Optional[ElementOrderProfile] = None) -> int:
    """
    sdim(P_E(G)) = n - m - 1 for a non-cyclic abelian p-group of exponent p^m.

    Raises:
        PreconditionError: G is not a non-cyclic abelian p-group.
    """
    profile = profile or order_profile(group)
    flags = profile.flags
    if not (flags.is_abelian and flags.is_p_group and not flags.is_cyclic):
        raise PreconditionError(f"{group.name} is not a non-cyclic abelian p-group")
    m = big_omega(profile.exponent)
    return profile.n - m - 1


def sdim_enhanced_quaternion(k: int) -> int:
    """sdim(P_E(Q_4k)) = 4k - 2."""
    if k < 2:
        raise PreconditionError("Q_4k needs k >= 2")
    return 4 * k - 2
