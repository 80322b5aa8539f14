import logging
from typing import Optional

from ..errors import PreconditionError, PredicateError
from ..graphs.builders import Family
from ..groups.model import ElementOrderProfile, FiniteGroup
from ..groups.profile import big_omega, is_prime_power, order_profile, prime_factors
from .model import FormulaReport

logger = logging.getLogger(__name__)


def has_exponent_element(profile: ElementOrderProfile) -> bool:
    """Whether some element has order exp(G); then e and that element are twins in S(G)."""
    return profile.exponent in profile.pi_e


def omega_reduced_supergraph(profile: ElementOrderProfile) -> int:
    """
    Clique number of the reduced order supergraph, by group class.

    A longest divisor chain runs from 1 to some m with Omega(m) = lambda_G. When
    m = exp(G) is an element order, its two ends fall into one class and the
    chain loses a vertex; cyclic groups are the familiar instance.
    """
    flags = profile.flags
    if profile.n == 1 or flags.is_p_group:
        return 1
    if flags.is_cp_group:
        return 2
    if has_exponent_element(profile):
        return profile.lambda_g
    return profile.lambda_g + 1


def sdim_order_supergraph(group: FiniteGroup, profile: Optional[ElementOrderProfile] = None) -> FormulaReport:
    """
    sdim of the order supergraph S(G).

    Branches: p-group -> n-1; cyclic non-p -> n-Omega(n); CP non-p -> n-2;
    non-cyclic with an element of order exp(G) -> n-lambda_G; otherwise
    n-lambda_G-1. The trivial group gives 0.
    """
    profile = profile or order_profile(group)
    n, flags = profile.n, profile.flags
    omega_reduced = omega_reduced_supergraph(profile)

    if n == 1:
        branch, value = "degenerate", 0
    elif flags.is_p_group:
        branch, value = "p_group", n - 1
    elif flags.is_cyclic:
        branch, value = "cyclic_non_p", n - big_omega(n)
    elif flags.is_cp_group:
        branch, value = "cp_non_p", n - 2
    elif has_exponent_element(profile):
        branch, value = "exponent_element", n - profile.lambda_g
    else:
        branch, value = "otherwise", n - profile.lambda_g - 1

    logger.debug(f"S({group.name}): branch {branch}, sdim {value}")
    return FormulaReport(
        family=Family.SUPERGRAPH,
        branch=branch,
        value=value,
        n=n,
        omega_n=big_omega(n),
        lambda_g=profile.lambda_g,
        exponent=profile.exponent,
        max_big_omega=profile.max_big_omega,
        omega_reduced=omega_reduced,
    )


def supergraph_same_class(
    group: FiniteGroup,
    x: int,
    y: int,
    profile: Optional[ElementOrderProfile] = None,
) -> bool:
    """
    Whether N[x] = N[y] in S(G), decided from element orders alone.

    Holds iff o(x) = o(y), or {o(x), o(y)} = {1, exp(G)}, or the orders are p^m and
    p^n with m > n and p^n*q is not an element order for any prime q != p.

    Raises:
        PredicateError: |G| is a prime power (S(G) is complete there).
        PreconditionError: x == y.
    """
    profile = profile or order_profile(group)
    primes = prime_factors(profile.n)
    if len(primes) < 2:
        raise PredicateError(f"|{group.name}| = {profile.n} is a prime power; S(G) is complete")
    if x == y:
        raise PreconditionError("supergraph_same_class needs two distinct elements")

    ox, oy = profile.orders[x], profile.orders[y]
    if ox == oy:
        return True
    if {ox, oy} == {1, profile.exponent}:
        return True
    if ox == 1 or oy == 1 or not (is_prime_power(ox) and is_prime_power(oy)):
        return False
    (p,) = prime_factors(ox)
    if prime_factors(oy) != {p}:
        return False
    smaller = min(ox, oy)
    pi_e = set(profile.pi_e)
    return all(smaller * q not in pi_e for q in primes if q != p)


def sdim_supergraph_quaternion(k: int) -> int:
    """
    sdim(S(Q_4k)): 4k-1 when k is a power of 2. Otherwise 4k-Omega(2k)-1 for odd k,
    and 4k-Omega(2k) for even k, where x of order 2k already has order exp(Q_4k).
    """
    if k < 2:
        raise PreconditionError("Q_4k needs k >= 2")
    if k & (k - 1) == 0:
        return 4 * k - 1
    if k % 2 == 0:
        return 4 * k - big_omega(2 * k)
    return 4 * k - big_omega(2 * k) - 1
