import logging
from typing import Optional

from ..errors import PreconditionError
from ..graphs.builders import Family
from ..groups.model import ElementOrderProfile, FiniteGroup
from ..groups.profile import big_omega, order_profile
from .model import FormulaReport

logger = logging.getLogger(__name__)


def _is_cyclic_2_group(profile: ElementOrderProfile) -> bool:
    return profile.flags.is_cyclic and profile.flags.p == 2


def omega_reduced_power(profile: ElementOrderProfile) -> int:
    """Clique number of P_R(G) itself: max Omega(m) over pi_e, plus one."""
    return profile.max_big_omega + 1


def omega_reduced_reduced_power(profile: ElementOrderProfile) -> int:
    """Clique number of the reduced graph of P_R(G)."""
    if profile.n == 1:
        return 1
    if _is_cyclic_2_group(profile):
        return big_omega(profile.n)
    if profile.flags.is_generalized_quaternion:
        return profile.flags.t + 1
    return profile.max_big_omega + 1


def sdim_reduced(group: FiniteGroup, profile: Optional[ElementOrderProfile] = None) -> FormulaReport:
    """
    sdim of the reduced power graph P_R(G).

    Branches: Z_{2^k} -> 2^k - k; Q_{4*2^t} -> 2^(t+2) - t - 1;
    otherwise -> n - max Omega - 1. The trivial group gives 0.
    """
    profile = profile or order_profile(group)
    n, flags = profile.n, profile.flags
    auxiliary = {"omega_power_graph": omega_reduced_power(profile)}

    if n == 1:
        branch, value = "degenerate", 0
    elif _is_cyclic_2_group(profile):
        k = big_omega(n)
        branch, value = "cyclic_2_group", 2 ** k - k
        auxiliary["k"] = k
    elif flags.is_generalized_quaternion:
        t = flags.t
        branch, value = "generalized_quaternion", 2 ** (t + 2) - t - 1
        auxiliary["t"] = t
    else:
        branch, value = "otherwise", n - profile.max_big_omega - 1

    logger.debug(f"P_R({group.name}): branch {branch}, sdim {value}")
    return FormulaReport(
        family=Family.REDUCED_POWER,
        branch=branch,
        value=value,
        n=n,
        omega_n=big_omega(n),
        lambda_g=profile.lambda_g,
        exponent=profile.exponent,
        max_big_omega=profile.max_big_omega,
        omega_reduced=omega_reduced_reduced_power(profile),
        auxiliary=auxiliary,
    )


def reduced_power_same_class(
    group: FiniteGroup,
    x: int,
    y: int,
    profile: Optional[ElementOrderProfile] = None,
) -> bool:
    """
    Whether N[x] = N[y] in P_R(G).

    Only the identity and the unique involution of a cyclic 2-group or a
    generalized quaternion group share a closed neighborhood.

    Raises:
        PreconditionError: x == y.
    """
    if x == y:
        raise PreconditionError("reduced_power_same_class needs two distinct elements")
    profile = profile or order_profile(group)
    flags = profile.flags
    if not (_is_cyclic_2_group(profile) or flags.is_generalized_quaternion):
        return False
    return {x, y} == {group.identity, flags.unique_involution}


def sdim_reduced_quaternion(k: int) -> int:
    """sdim(P_R(Q_4k)): 2^(t+2) - t - 1 when k = 2^t, else 4k - Omega(2k) - 1."""
    if k < 2:
        raise PreconditionError("Q_4k needs k >= 2")
    if k & (k - 1) == 0:
        t = k.bit_length() - 1
        return 2 ** (t + 2) - t - 1
    return 4 * k - big_omega(2 * k) - 1
