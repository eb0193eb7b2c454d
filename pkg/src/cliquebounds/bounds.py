"""Exact-rational weight sums, delta-set recognition, and generalized partitions.

The weight of a vertex set is W(V) = sum over v in V of 1/(n - d(v)), with n
and d taken from the full host graph.  Everything here is exact arithmetic:
comparisons like W(V) <= 1 must never depend on float tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, VertexSet

Weight = Fraction


def wei_weight(g: Graph, s: Iterable[int]) -> Weight:
    """Exact sum of 1/(n - d(v)) over ``s``, degrees taken in the full graph.

    Additive over disjoint sets; the empty set weighs 0.  Denominators are
    never zero because d(v) <= n - 1.
    """
    mask = g.mask_of(s)
    total = Fraction(0)
    for v in range(g.n):
        if (mask >> v) & 1:
            total += Fraction(1, g.n - g.degrees[v])
    return total


def wei_bound(g: Graph) -> Weight:
    """W(G): an exact lower bound on the clique number."""
    if g.n == 0:
        raise ValueError("empty graph")
    return wei_weight(g, range(g.n))


def wei_independence_bound(g: Graph) -> Weight:
    """Exact sum of 1/(1 + d(v)): the classic lower bound on the independence
    number, and identically wei_bound(complement(g))."""
    if g.n == 0:
        raise ValueError("empty graph")
    return sum(
        (Fraction(1, 1 + d) for d in g.degrees),
        start=Fraction(0),
    )


def is_delta_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff every v in ``s`` has d(v) <= n - |s|.

    Degrees are measured in the full graph, never in an induced subgraph.
    Every independent set qualifies; adjacent vertices may too, as long as
    their degrees are small enough.  The empty set is rejected so that
    partition block counts stay meaningful.
    """
    mask = g.mask_of(s)
    if mask == 0:
        raise ValueError("empty candidate delta-set")
    size = mask.bit_count()
    limit = g.n - size
    for v in range(g.n):
        if (mask >> v) & 1 and g.degrees[v] > limit:
            return False
    return True


@dataclass(frozen=True)
class DeltaPartition:
    """Blocks claimed to partition V(G) into delta-sets.

    Disjointness and nonemptiness are structural and checked here; coverage
    of V(G) needs a graph and is checked by verify_generalized_partition.
    """

    blocks: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        seen = 0
        for block in self.blocks:
            if not block:
                raise ValueError("not a partition: empty block")
            mask = 0
            for v in block:
                if v < 0:
                    raise ValueError("not a partition: negative vertex id")
                mask |= 1 << v
            if seen & mask:
                raise ValueError("not a partition: overlapping blocks")
            seen |= mask

    @property
    def r(self) -> int:
        return len(self.blocks)

    def covered(self) -> frozenset[int]:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()


def verify_generalized_partition(g: Graph, p: DeltaPartition) -> bool:
    """True iff ``p`` partitions V(G) and every block is a delta-set in ``g``.

    A structurally broken partition (blocks not covering V(G) exactly) is an
    error, not a False: it never encodes a valid r-partition claim.
    """
    if p.covered() != frozenset(range(g.n)):
        raise ValueError("not a partition: blocks do not cover V(G) exactly")
    return all(is_delta_set(g, block) for block in p.blocks)


def delta_complement_check(g: Graph, s: Iterable[int]) -> bool:
    """Whether V(G) minus ``s`` is a delta-set.

    Guaranteed True whenever |s| >= max degree of g; computed by definition
    otherwise.
    """
    mask = g.mask_of(s)
    rest = g.vertex_mask & ~mask
    if rest == 0:
        raise ValueError("complement of s is empty")
    return is_delta_set(g, (v for v in range(g.n) if (rest >> v) & 1))


def partition_from_masks(masks: Iterable[int]) -> DeltaPartition:
    """Build a DeltaPartition from bitmask blocks (used by the phi oracle)."""
    from .graph import mask_to_set

    return DeltaPartition(tuple(mask_to_set(m) for m in masks))
