from typing import Dict, List, Optional, Sequence, Set

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class FiniteGroup:
    """
    A finite group given by its multiplication table over element indices 0..n-1.

    The identity is always index 0. The table is stored as a read-only numpy array,
    so a FiniteGroup is immutable once constructed.

    Attributes:
        n: Number of elements.
        table: n x n array, table[i, j] is the index of i*j.
        inverse: inverse[i] is the index of the inverse of i.
        name: Display label such as "Q8" or "Z2xZ4".
    """

    __slots__ = ("n", "table", "inverse", "name", "_powers")

    def __init__(self, table: np.ndarray, name: str = "G"):
        table = np.asarray(table, dtype=np.int32)
        table.setflags(write=False)
        self.n = int(table.shape[0])
        self.table = table
        self.name = name
        # строка i содержит 0 ровно в столбце inverse[i]
        inverse = np.argmin(table, axis=1).astype(np.int32)
        inverse.setflags(write=False)
        self.inverse = inverse
        self._powers: Optional[List[List[int]]] = None

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def powers(self, x: int) -> List[int]:
        """Returns [e, x, x^2, ..., x^(o(x)-1)], i.e. the elements of <x> in power order."""
        if self._powers is None:
            self._powers = [self._compute_powers(g) for g in range(self.n)]
        return self._powers[x]

    def _compute_powers(self, x: int) -> List[int]:
        seq = [0]
        current = x
        while current != 0:
            seq.append(current)
            current = int(self.table[current, x])
        return seq

    def order_of(self, x: int) -> int:
        return len(self.powers(x))

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, n={self.n})"


class GroupFlags(BaseModel):
    """Classification flags derived from the element orders."""
    is_cyclic: bool
    is_abelian: bool
    is_p_group: bool
    p: Optional[int] = Field(default=None, description="The prime when is_p_group holds.")
    is_cp_group: bool = Field(description="Every nontrivial element has prime power order.")
    is_P_group: bool = Field(description="Every nontrivial element has prime order.")
    is_generalized_quaternion: bool
    t: Optional[int] = Field(default=None, description="t with |G| = 4*2^t for generalized quaternion groups.")
    unique_involution: Optional[int] = Field(default=None, description="Index of the only element of order 2, if unique.")

    model_config = ConfigDict(frozen=True)


class ElementOrderProfile(BaseModel):
    """
    Element-order arithmetic of a finite group.

    Attributes:
        n: Group order.
        orders: orders[x] = o(x).
        pi_e: Sorted set of element orders.
        exponent: lcm of all element orders.
        lambda_g: max Omega(m) over the non-prime-power m in pi_e; None for CP-groups.
        max_big_omega: max Omega(m) over pi_e.
        flags: Classification flags.
    """
    n: int
    orders: List[int]
    pi_e: List[int]
    exponent: int
    lambda_g: Optional[int] = Field(default=None, alias="lambda")
    max_big_omega: int
    flags: GroupFlags

    model_config = ConfigDict(frozen=True, populate_by_name=True)


class CyclicLattice:
    """
    All cyclic subgroups of a group together with the maximal ones.

    Subgroups are stored as integer bitmasks (bit i set iff element i belongs).

    Attributes:
        cyclics: Distinct cyclic subgroups, as bitmasks.
        generators: generators[k] is the smallest index generating cyclics[k].
        maximals: Indices into cyclics forming M_G.
        membership: membership[x] is the frozenset of maximal ids (indices into
            maximals) whose subgroup contains x, i.e. M_x.
        cyclic_of: cyclic_of[x] is the index into cyclics of <x>.
    """

    __slots__ = ("n", "cyclics", "generators", "maximals", "membership", "cyclic_of")

    def __init__(
        self,
        n: int,
        cyclics: Sequence[int],
        generators: Sequence[int],
        maximals: Sequence[int],
        cyclic_of: Sequence[int],
    ):
        self.n = n
        self.cyclics = tuple(cyclics)
        self.generators = tuple(generators)
        self.maximals = tuple(maximals)
        self.cyclic_of = tuple(cyclic_of)
        self.membership = tuple(
            frozenset(mid for mid, k in enumerate(self.maximals) if self.cyclics[k] >> x & 1)
            for x in range(n)
        )

    def maximal_mask(self, mid: int) -> int:
        return self.cyclics[self.maximals[mid]]

    def maximal_elements(self, mid: int) -> Set[int]:
        return mask_to_set(self.maximal_mask(mid))

    def subgroup_mask(self, x: int) -> int:
        """Bitmask of <x>."""
        return self.cyclics[self.cyclic_of[x]]

    def signature_counts(self) -> Dict[int, int]:
        """For every maximal id, the number of distinct M_x signatures among its elements."""
        counts = {}
        for mid in range(len(self.maximals)):
            signatures = {self.membership[x] for x in self.maximal_elements(mid)}
            counts[mid] = len(signatures)
        return counts


def mask_to_set(mask: int) -> Set[int]:
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return out
