import logging
from typing import Iterator, List, Optional, Tuple

from .. import config
from ..errors import CapacityError
from ..graphs.model import SimpleGraph, iter_bits

logger = logging.getLogger(__name__)


def degeneracy_order(graph: SimpleGraph) -> List[int]:
    """
    Smallest-last ordering: repeatedly remove a vertex of minimum remaining degree
    (ties broken by smallest index). Returned with the last-removed vertex first.
    """
    remaining = graph.full_mask
    removed: List[int] = []
    while remaining:
        best_v, best_deg = -1, None
        for v in iter_bits(remaining):
            deg = bin(graph.adj[v] & remaining).count("1")
            if best_deg is None or deg < best_deg:
                best_v, best_deg = v, deg
        removed.append(best_v)
        remaining &= ~(1 << best_v)
    return removed[::-1]


class _CliqueSearch:
    """Branch and bound with a greedy colouring bound, over bitsets in a fixed vertex order."""

    def __init__(self, graph: SimpleGraph, node_budget: int):
        self.order = degeneracy_order(graph)
        position = {v: i for i, v in enumerate(self.order)}
        # перенумеровываем вершины так, чтобы порядок раскраски совпадал с порядком битов
        self.adj = [0] * graph.vcount
        for v in range(graph.vcount):
            for w in iter_bits(graph.adj[v]):
                self.adj[position[v]] |= 1 << position[w]
        self.node_budget = node_budget
        self.nodes = 0
        self.best: List[int] = []

    def _colour_sort(self, candidates: int) -> Tuple[List[int], List[int]]:
        order: List[int] = []
        bounds: List[int] = []
        colour = 0
        uncoloured = candidates
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                v = low.bit_length() - 1
                available &= ~low & ~self.adj[v]
                uncoloured &= ~low
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(self, clique: List[int], candidates: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise CapacityError(
                f"Clique search exceeded node budget {self.node_budget}",
                best_bound=len(self.best),
            )
        order, bounds = self._colour_sort(candidates)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(self.best):
                return
            v = order[i]
            clique.append(v)
            narrowed = candidates & self.adj[v]
            if narrowed:
                self.expand(clique, narrowed)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            candidates &= ~(1 << v)

    def run(self, full: int) -> List[int]:
        if full:
            self.expand([], full)
        return sorted(self.order[i] for i in self.best)


def maximum_clique(
    graph: SimpleGraph,
    cap: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> List[int]:
    """
    Exact maximum clique by branch and bound.

    Args:
        graph: Input graph.
        cap: Maximum vertex count (default GRPDIM_CLIQUE_CAP).
        node_budget: Maximum number of search nodes (default GRPDIM_NODE_BUDGET).

    Returns:
        A maximum clique as a sorted vertex list (empty for the empty graph).

    Raises:
        CapacityError: Graph above the cap, or the budget ran out (best_bound = best
            clique size found so far).
    """
    cap = config.CLIQUE_CAP if cap is None else cap
    node_budget = config.NODE_BUDGET if node_budget is None else node_budget
    if graph.vcount > cap:
        raise CapacityError(f"Clique search limited to {cap} vertices, graph has {graph.vcount}")
    search = _CliqueSearch(graph, node_budget)
    clique = search.run(graph.full_mask)
    logger.debug(f"omega({graph.name}) = {len(clique)} after {search.nodes} nodes")
    return clique


def clique_number(graph: SimpleGraph, cap: Optional[int] = None, node_budget: Optional[int] = None) -> int:
    """omega(graph)."""
    return len(maximum_clique(graph, cap=cap, node_budget=node_budget))


def iter_maximal_cliques(graph: SimpleGraph) -> Iterator[List[int]]:
    """
    Bron-Kerbosch with pivoting; yields every maximal clique as a sorted list.
    The pivot maximizes |P & N(u)|, ties broken by the smallest index.
    """

    def recurse(clique: List[int], candidates: int, excluded: int) -> Iterator[List[int]]:
        if not candidates and not excluded:
            yield sorted(clique)
            return
        pivot, best = -1, -1
        for u in iter_bits(candidates | excluded):
            covered = bin(candidates & graph.adj[u]).count("1")
            if covered > best:
                pivot, best = u, covered
        for v in list(iter_bits(candidates & ~graph.adj[pivot])):
            clique.append(v)
            yield from recurse(clique, candidates & graph.adj[v], excluded & graph.adj[v])
            clique.pop()
            candidates &= ~(1 << v)
            excluded |= 1 << v

    if graph.vcount == 0:
        return
    yield from recurse([], graph.full_mask, 0)
