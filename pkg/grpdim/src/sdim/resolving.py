import logging
from itertools import combinations
from typing import Iterable, List, Optional

import numpy as np

from .. import config
from ..errors import CapacityError, PreconditionError
from ..graphs.model import SimpleGraph
from .model import SdimMethod, SdimResult

logger = logging.getLogger(__name__)


def _bool_to_mask(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags.astype(np.uint8), bitorder="little").tobytes(), "little")


def _require_connected(graph: SimpleGraph) -> None:
    if not graph.is_connected():
        raise PreconditionError(f"{graph.name} is disconnected; strong resolution needs a connected graph")


def strongly_resolves(graph: SimpleGraph, w: int, u: int, v: int) -> bool:
    """
    True iff u lies on a shortest w-v path or v lies on a shortest w-u path.

    Raises:
        VertexRangeError: Any vertex out of range.
        PreconditionError: u == v.
    """
    for x in (w, u, v):
        graph.check_vertex(x)
    if u == v:
        raise PreconditionError("strongly_resolves needs two distinct vertices")
    d = graph.distances()
    duv = int(d[u, v])
    return int(d[w, u]) == int(d[w, v]) + duv or int(d[w, v]) == int(d[w, u]) + duv


def pair_resolver_masks(graph: SimpleGraph) -> List[int]:
    """For every unordered pair u < v, the bitmask of vertices that strongly resolve it."""
    d = graph.distances()
    masks = []
    for u in range(graph.vcount):
        for v in range(u + 1, graph.vcount):
            duv = d[u, v]
            resolving = (d[:, u] == d[:, v] + duv) | (d[:, v] == d[:, u] + duv)
            masks.append(_bool_to_mask(resolving))
    return masks


def is_strong_resolving_set(graph: SimpleGraph, vertices: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices is strongly resolved by some member of the set."""
    _require_connected(graph)
    chosen = 0
    for v in vertices:
        graph.check_vertex(v)
        chosen |= 1 << v
    return all(mask & chosen for mask in pair_resolver_masks(graph))


def sdim_subset_oracle(graph: SimpleGraph, cap: Optional[int] = None) -> SdimResult:
    """
    Exact sdim by enumerating vertex subsets.

    Works downward from size n-1 (always resolving) and stops at the first size with
    no resolving subset; resolving sets are closed under supersets, so the previous
    size is the minimum.

    Args:
        graph: Connected graph.
        cap: Maximum vertex count (default GRPDIM_ORACLE_CAP).

    Raises:
        CapacityError: Graph above the cap.
    """
    cap = config.oracle_cap() if cap is None else cap
    n = graph.vcount
    if n > cap:
        raise CapacityError(
            f"Subset oracle is limited to {cap} vertices ({graph.name} has {n}); use the vertex-cover method"
        )
    _require_connected(graph)
    if n <= 1:
        return SdimResult(value=0, method=SdimMethod.SUBSET_ORACLE, witness=[], vcount=n)

    masks = pair_resolver_masks(graph)
    witness = list(range(n - 1))
    for k in range(n - 2, -1, -1):
        found = None
        for subset in combinations(range(n), k):
            chosen = 0
            for v in subset:
                chosen |= 1 << v
            if all(mask & chosen for mask in masks):
                found = list(subset)
                break
        if found is None:
            break
        witness = found
    logger.debug(f"Subset oracle: sdim({graph.name}) = {len(witness)}")
    return SdimResult(value=len(witness), method=SdimMethod.SUBSET_ORACLE, witness=witness, vcount=n)


def strong_resolving_graph(graph: SimpleGraph) -> SimpleGraph:
    """
    Graph on the same vertices joining mutually maximally distant pairs: u, v with
    d(u, v) >= d(u, w) for every neighbor w of v and d(u, v) >= d(v, w) for every
    neighbor w of u.
    """
    _require_connected(graph)
    n = graph.vcount
    d = graph.distances()
    # farthest[u, v] = max over neighbors w of v of d(u, w)
    farthest = np.full((n, n), -1, dtype=np.int32)
    for v in range(n):
        nbrs = sorted(graph.neighbors(v))
        if nbrs:
            farthest[:, v] = d[:, nbrs].max(axis=1)
    ok = farthest <= d
    mmd = ok & ok.T
    np.fill_diagonal(mmd, False)
    adj = [_bool_to_mask(mmd[u]) for u in range(n)]
    return SimpleGraph(n, adj, labels=graph.labels, name=f"SR({graph.name})")

