import logging
from enum import Enum
from typing import Dict, List, Optional, Set

from ..groups.model import CyclicLattice, FiniteGroup
from ..groups.profile import cyclic_lattice as build_lattice
from .model import ReducedGraph, SimpleGraph, iter_bits

logger = logging.getLogger(__name__)


class Family(str, Enum):
    POWER = "power"
    ENHANCED = "enhanced"
    SUPERGRAPH = "supergraph"
    REDUCED_POWER = "reduced_power"

    @classmethod
    def parse(cls, name: str) -> "Family":
        """Accepts the enum values plus the short alias 'reduced'."""
        key = name.strip().lower().replace("-", "_")
        if key == "reduced":
            key = "reduced_power"
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"Unknown graph family '{name}'. Known: {', '.join(f.value for f in cls)}, reduced")


# Порядок, в котором семейства обходятся в отчётах
FAMILIES = [Family.SUPERGRAPH, Family.ENHANCED, Family.REDUCED_POWER, Family.POWER]


def build_graph(group: FiniteGroup, family: Family, lattice: Optional[CyclicLattice] = None) -> SimpleGraph:
    """
    Builds one of the four graphs on the elements of a group.

    Args:
        group: The group; vertex i is element i.
        family: Which graph to build.
        lattice: Cyclic lattice of the group (computed if missing; used by the
            power-type families).

    Returns:
        SimpleGraph labeled with element orders.
    """
    family = Family(family)
    if lattice is None:
        lattice = build_lattice(group)
    n = group.n
    orders = [group.order_of(x) for x in range(n)]
    adj = [0] * n

    if family is Family.SUPERGRAPH:
        by_order: Dict[int, int] = {}
        for x, o in enumerate(orders):
            by_order[o] = by_order.get(o, 0) | (1 << x)
        comparable: Dict[int, int] = {}
        for a in by_order:
            comparable[a] = 0
            for b, mask in by_order.items():
                if a % b == 0 or b % a == 0:
                    comparable[a] |= mask
        for x, o in enumerate(orders):
            adj[x] = comparable[o] & ~(1 << x)

    elif family is Family.ENHANCED:
        # соседи x: объединение максимальных циклических подгрупп, содержащих x
        for x in range(n):
            union = 0
            for mid in lattice.membership[x]:
                union |= lattice.maximal_mask(mid)
            adj[x] = union & ~(1 << x)

    elif family is Family.POWER:
        for y in range(n):
            below = lattice.subgroup_mask(y) & ~(1 << y)
            adj[y] |= below
            for x in iter_bits(below):
                adj[x] |= 1 << y

    else:
        # <x> строго содержится в <y>
        for y in range(n):
            cy = lattice.subgroup_mask(y)
            for x in iter_bits(cy):
                if lattice.subgroup_mask(x) != cy:
                    adj[y] |= 1 << x
                    adj[x] |= 1 << y

    graph = SimpleGraph(n, adj, labels=orders, name=f"{family.value}({group.name})")
    logger.debug(f"Built {graph}")
    return graph


def closed_neighborhood(graph: SimpleGraph, v: int) -> Set[int]:
    """N[v] = adj[v] together with v."""
    graph.check_vertex(v)
    return set(iter_bits(graph.closed_mask(v)))


def reduced_graph(graph: SimpleGraph) -> ReducedGraph:
    """
    Quotient of a graph by equality of closed neighborhoods.

    Classes are ordered by their smallest vertex, which is the representative.
    """
    by_neighborhood: Dict[int, List[int]] = {}
    for v in range(graph.vcount):
        by_neighborhood.setdefault(graph.closed_mask(v), []).append(v)
    classes = sorted(by_neighborhood.values(), key=lambda cls: cls[0])
    reduced = ReducedGraph(graph, classes)
    logger.debug(f"{graph.name}: {graph.vcount} vertices -> {len(classes)} classes")
    return reduced
