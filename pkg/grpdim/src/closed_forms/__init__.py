from typing import Optional

from ..errors import PreconditionError
from ..graphs.builders import Family
from ..groups.model import CyclicLattice, ElementOrderProfile, FiniteGroup
from .model import FormulaReport
from .supergraph import (
    has_exponent_element,
    omega_reduced_supergraph,
    sdim_order_supergraph,
    sdim_supergraph_quaternion,
    supergraph_same_class,
)
from .enhanced import sdim_enhanced, sdim_enhanced_abelian_p, sdim_enhanced_quaternion
from .reduced import (
    omega_reduced_power,
    omega_reduced_reduced_power,
    reduced_power_same_class,
    sdim_reduced,
    sdim_reduced_quaternion,
)
from .characterizations import (
    enhanced_attains_n_minus_1,
    enhanced_attains_n_minus_2,
    extremal_flags,
    is_star,
    reduced_attains_n_minus_1,
    reduced_attains_n_minus_2,
    reduced_power_quotient_is_star,
    supergraph_attains_n_minus_1,
    supergraph_attains_n_minus_2,
)


def formula_for(
    group: FiniteGroup,
    family: Family,
    profile: Optional[ElementOrderProfile] = None,
    lattice: Optional[CyclicLattice] = None,
) -> FormulaReport:
    """
    Evaluates the closed form for the given graph family.

    Raises:
        PreconditionError: The power graph has no closed form here.
    """
    if not isinstance(family, Family):
        family = Family.parse(family)
    if family is Family.SUPERGRAPH:
        return sdim_order_supergraph(group, profile=profile)
    if family is Family.ENHANCED:
        return sdim_enhanced(group, lattice=lattice, profile=profile)
    if family is Family.REDUCED_POWER:
        return sdim_reduced(group, profile=profile)
    raise PreconditionError(f"No closed form for the {family.value} graph; use a generic method")


__all__ = [
    "FormulaReport",
    "formula_for",
    "has_exponent_element",
    "omega_reduced_supergraph",
    "sdim_order_supergraph",
    "sdim_supergraph_quaternion",
    "supergraph_same_class",
    "sdim_enhanced",
    "sdim_enhanced_abelian_p",
    "sdim_enhanced_quaternion",
    "omega_reduced_power",
    "omega_reduced_reduced_power",
    "reduced_power_same_class",
    "sdim_reduced",
    "sdim_reduced_quaternion",
    "enhanced_attains_n_minus_1",
    "enhanced_attains_n_minus_2",
    "reduced_attains_n_minus_1",
    "reduced_attains_n_minus_2",
    "supergraph_attains_n_minus_1",
    "supergraph_attains_n_minus_2",
    "extremal_flags",
    "is_star",
    "reduced_power_quotient_is_star",
]
