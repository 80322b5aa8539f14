import logging
from typing import Iterable, Optional

from .. import config
from ..errors import CapacityError, PreconditionError
from ..graphs.builders import reduced_graph
from ..graphs.model import SimpleGraph
from ..groups.model import FiniteGroup
from .clique import maximum_clique
from .model import SdimMethod, SdimResult
from .resolving import sdim_subset_oracle, strong_resolving_graph

logger = logging.getLogger(__name__)


def sdim_vertex_cover(
    graph: SimpleGraph,
    cap: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> SdimResult:
    """
    sdim as the minimum vertex cover of the strong resolving graph.

    The cover is n minus a maximum independent set, found as a maximum clique of the
    complement. Vertices that are MMD with nothing stay outside the cover.

    Args:
        graph: Connected graph.
        cap: Maximum vertex count (default GRPDIM_VERTEX_COVER_CAP).
        node_budget: Search-node budget for the clique solver.

    Raises:
        CapacityError: Graph above the cap, or budget exhausted; best_bound is the
            smallest cover found so far.
    """
    cap = config.VERTEX_COVER_CAP if cap is None else cap
    n = graph.vcount
    if n > cap:
        raise CapacityError(f"Vertex-cover search is limited to {cap} vertices, {graph.name} has {n}")
    resolving = strong_resolving_graph(graph)
    try:
        independent = maximum_clique(resolving.complement(), cap=n, node_budget=node_budget)
    except CapacityError as e:
        best = None if e.best_bound is None else n - e.best_bound
        raise CapacityError(f"Vertex-cover search on {graph.name} ran out of budget", best_bound=best)
    chosen = set(independent)
    witness = [v for v in range(n) if v not in chosen]
    logger.debug(f"Vertex cover: sdim({graph.name}) = {len(witness)}")
    return SdimResult(value=len(witness), method=SdimMethod.VERTEX_COVER, witness=witness, vcount=n)


def sdim_diameter2(
    graph: SimpleGraph,
    cap: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> SdimResult:
    """
    sdim = n - omega(R_graph) for connected graphs of diameter two; n - 1 for complete graphs.

    The witness drops one representative per class of a maximum quotient clique.

    Raises:
        PreconditionError: Disconnected graph or diameter above two.
    """
    n = graph.vcount
    if n <= 1:
        return SdimResult(value=0, method=SdimMethod.DIAMETER2_CLIQUE, witness=[], omega_reduced=n, vcount=n)
    diameter = graph.diameter()
    if diameter is None or diameter > 2:
        raise PreconditionError(
            f"{graph.name} has diameter {diameter}; use the subset-oracle or vertex-cover method"
        )
    if graph.is_complete():
        return SdimResult(
            value=n - 1,
            method=SdimMethod.DIAMETER2_CLIQUE,
            witness=list(range(1, n)),
            omega_reduced=1,
            vcount=n,
        )
    reduced = reduced_graph(graph)
    clique = maximum_clique(reduced.quotient, cap=cap, node_budget=node_budget)
    dropped = {reduced.reps[i] for i in clique}
    witness = [v for v in range(n) if v not in dropped]
    return SdimResult(
        value=n - len(clique),
        method=SdimMethod.DIAMETER2_CLIQUE,
        witness=witness,
        omega_reduced=len(clique),
        vcount=n,
    )


def sdim(graph: SimpleGraph, method: SdimMethod, **limits) -> SdimResult:
    """Computes sdim by the named generic route."""
    method = SdimMethod(method)
    if method is SdimMethod.SUBSET_ORACLE:
        return sdim_subset_oracle(graph, cap=limits.get("oracle_cap"))
    if method is SdimMethod.VERTEX_COVER:
        return sdim_vertex_cover(graph, cap=limits.get("vertex_cover_cap"), node_budget=limits.get("node_budget"))
    if method is SdimMethod.DIAMETER2_CLIQUE:
        return sdim_diameter2(graph, cap=limits.get("clique_cap"), node_budget=limits.get("node_budget"))
    raise PreconditionError("Closed forms need a group, not a bare graph; see closed_forms.formula_for")


def is_proper_order_chain(group: FiniteGroup, elements: Iterable[int]) -> bool:
    """True iff the element orders are pairwise distinct and form a divisibility chain."""
    orders = [group.order_of(x) for x in elements]
    if len(set(orders)) != len(orders):
        return False
    orders.sort()
    return all(b % a == 0 for a, b in zip(orders, orders[1:]))
