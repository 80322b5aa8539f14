from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..errors import VertexRangeError

UNREACHABLE = -1


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """
    Undirected loop-free graph on vertices 0..vcount-1.

    Adjacency is kept as one integer bitmask per vertex. All-pairs distances are
    computed lazily by BFS on first use and cached; the cache is written once, so a
    concurrent reader either sees the finished matrix or computes its own copy.

    Attributes:
        vcount: Number of vertices.
        adj: adj[v] is the bitmask of neighbors of v.
        labels: Optional per-vertex integer labels (element orders for group graphs).
        name: Display label.
    """

    __slots__ = ("vcount", "adj", "labels", "name", "_dist")

    def __init__(self, vcount: int, adj: Sequence[int], labels: Optional[Sequence[int]] = None, name: str = "graph"):
        self.vcount = vcount
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self._dist: Optional[np.ndarray] = None

    @classmethod
    def from_edges(cls, vcount: int, edges: Iterable[Tuple[int, int]], labels=None, name: str = "graph") -> "SimpleGraph":
        adj = [0] * vcount
        for u, v in edges:
            if not (0 <= u < vcount and 0 <= v < vcount):
                raise VertexRangeError(f"Edge ({u}, {v}) outside 0..{vcount - 1}")
            if u == v:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vcount, adj, labels=labels, name=name)

    @classmethod
    def complete(cls, vcount: int) -> "SimpleGraph":
        full = (1 << vcount) - 1
        return cls(vcount, [full & ~(1 << v) for v in range(vcount)], name=f"K{vcount}")

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vcount:
            raise VertexRangeError(f"Vertex {v} outside 0..{self.vcount - 1}")

    @property
    def full_mask(self) -> int:
        return (1 << self.vcount) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Set[int]:
        self.check_vertex(v)
        return set(iter_bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.vcount) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.vcount)) // 2

    def is_complete(self) -> bool:
        return all(self.closed_mask(v) == self.full_mask for v in range(self.vcount))

    def complement(self) -> "SimpleGraph":
        full = self.full_mask
        adj = [full & ~self.adj[v] & ~(1 << v) for v in range(self.vcount)]
        return SimpleGraph(self.vcount, adj, labels=self.labels, name=f"co-{self.name}")

    def induced_subgraph(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Subgraph on the given vertices, relabeled 0..len(vertices)-1 in the given order."""
        position = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for w in iter_bits(self.adj[v]):
                if w in position:
                    adj[i] |= 1 << position[w]
        labels = [self.labels[v] for v in vertices] if self.labels is not None else None
        return SimpleGraph(len(vertices), adj, labels=labels, name=f"{self.name}[sub]")

    def _bfs(self, source: int) -> np.ndarray:
        row = np.full(self.vcount, UNREACHABLE, dtype=np.int32)
        row[source] = 0
        visited = 1 << source
        frontier = 1 << source
        depth = 0
        while frontier:
            depth += 1
            reached = 0
            for v in iter_bits(frontier):
                reached |= self.adj[v]
            frontier = reached & ~visited
            visited |= frontier
            for v in iter_bits(frontier):
                row[v] = depth
        return row

    def distances(self) -> np.ndarray:
        """All-pairs hop distances; UNREACHABLE (-1) for disconnected pairs."""
        if self._dist is None:
            if self.vcount == 0:
                matrix = np.zeros((0, 0), dtype=np.int32)
            else:
                matrix = np.vstack([self._bfs(s) for s in range(self.vcount)])
            matrix.setflags(write=False)
            self._dist = matrix
        return self._dist

    def distance(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        return int(self.distances()[u, v])

    def is_connected(self) -> bool:
        if self.vcount == 0:
            return True
        return bool((self.distances()[0] != UNREACHABLE).all())

    def diameter(self) -> Optional[int]:
        """Largest distance, or None when the graph is disconnected."""
        if not self.is_connected():
            return None
        if self.vcount == 0:
            return 0
        return int(self.distances().max())

    def same_structure(self, other: "SimpleGraph") -> bool:
        return self.vcount == other.vcount and self.adj == other.adj

    def __repr__(self) -> str:
        return f"SimpleGraph(name={self.name!r}, vcount={self.vcount}, edges={self.edge_count()})"


class ReducedGraph:
    """
    Quotient of a graph by the relation N[x] = N[y].

    Attributes:
        source: The graph that was reduced.
        classes: Partition of the vertices; classes are ordered by their representative.
        reps: reps[i] is the smallest vertex of classes[i].
        quotient: SimpleGraph on class indices; i ~ j iff reps[i] ~ reps[j] in source.
    """

    __slots__ = ("source", "classes", "reps", "quotient", "_class_index")

    def __init__(self, source: SimpleGraph, classes: List[List[int]]):
        self.source = source
        self.classes = classes
        self.reps = [cls[0] for cls in classes]
        self._class_index: Dict[int, int] = {v: i for i, cls in enumerate(classes) for v in cls}
        adj = [0] * len(classes)
        for i, r in enumerate(self.reps):
            for j, s in enumerate(self.reps):
                if i != j and source.has_edge(r, s):
                    adj[i] |= 1 << j
        labels = [source.labels[r] for r in self.reps] if source.labels is not None else None
        self.quotient = SimpleGraph(len(classes), adj, labels=labels, name=f"R({source.name})")

    def class_of(self, v: int) -> int:
        """Index of the class containing v."""
        self.source.check_vertex(v)
        return self._class_index[v]

    def class_union(self, class_ids: Iterable[int]) -> Set[int]:
        out: Set[int] = set()
        for i in class_ids:
            out.update(self.classes[i])
        return out

    def __repr__(self) -> str:
        return f"ReducedGraph(source={self.source.name!r}, classes={len(self.classes)})"
