"""Immutable simple undirected graphs over dense integer vertex ids.

Vertices are 0..n-1.  Adjacency is stored as one bitmask int per vertex,
so neighborhood algebra (intersections, induced degrees) is plain integer
bit arithmetic and works for any n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

VertexSet = frozenset[int]


def bit_members(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_set(mask: int) -> VertexSet:
    return frozenset(bit_members(mask))


@dataclass(frozen=True)
class Graph:
    """Simple graph: no loops, no multi-edges, symmetric adjacency.

    All invariants (irreflexivity, symmetry, degree cache) are checked once
    at construction; every derived graph is a new value.
    """

    n: int
    adj: tuple[int, ...]
    degrees: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bit_members(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(
            self, "degrees", tuple(row.bit_count() for row in self.adj)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- cheap accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return mask_to_set(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v) for u in range(self.n) for v in bit_members(self.adj[u]) if u < v
        ]

    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def mask_of(self, s: Iterable[int]) -> int:
        """Bitmask of a vertex subset; rejects out-of-range members."""
        mask = 0
        for v in s:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def __repr__(self) -> str:  # compact: full adjacency is noise in test output
        return f"Graph(n={self.n}, m={self.m})"


# -- neighborhood algebra --------------------------------------------------


def common_neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    """Intersection of the neighborhoods of all vertices in ``s``.

    ``s`` must be nonempty: the intersection over an empty family is
    deliberately rejected rather than defined as V(G).
    """
    mask = g.mask_of(s)
    if mask == 0:
        raise ValueError("empty intersection base")
    result = g.vertex_mask
    for v in bit_members(mask):
        result &= g.adj[v]
    return mask_to_set(result)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    rows = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabeled 0..|s|-1.

    Returns the new graph and the id mapping: new vertex i is the old
    vertex ``mapping[i]``.
    """
    mask = g.mask_of(s)
    mapping = tuple(bit_members(mask))
    position = {old: new for new, old in enumerate(mapping)}
    rows = []
    for old in mapping:
        row = 0
        for u in bit_members(g.adj[old] & mask):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(mapping), tuple(rows)), mapping


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff the vertices of ``s`` are pairwise adjacent (|s| <= 1 is vacuous)."""
    mask = g.mask_of(s)
    for v in bit_members(mask):
        others = mask & ~(1 << v)
        if others & ~g.adj[v]:
            return False
    return True


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff the vertices of ``s`` are pairwise nonadjacent."""
    mask = g.mask_of(s)
    for v in bit_members(mask):
        if mask & g.adj[v]:
            return False
    return True
