"""Exact brute-force ground truth: clique number, independence number, and
the minimum number of delta-set blocks needed to partition the vertices.

Two clique oracles are kept deliberately independent: a bitset
branch-and-bound used everywhere, and a naive all-subsets scan that
validates it on tiny graphs.  The partition search is exponential and is
capped separately from the clique oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bounds import DeltaPartition, partition_from_masks, wei_bound
from .graph import Graph, bit_members, complement


class OracleCapError(ValueError):
    """Instance exceeds the configured size cap for an exact oracle."""


@dataclass(frozen=True)
class OracleLimits:
    """Vertex caps for the exact oracles."""

    max_n_clique: int = 64
    max_n_phi: int = 12

    def __post_init__(self) -> None:
        if self.max_n_clique <= 0 or self.max_n_phi <= 0:
            raise ValueError("oracle caps must be positive")
        if self.max_n_phi > self.max_n_clique:
            raise ValueError("phi cap must not exceed the clique cap")


DEFAULT_LIMITS = OracleLimits()


def clique_number_exact(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Exact clique number via branch-and-bound over bitmask candidate sets."""
    if g.n > limits.max_n_clique:
        raise OracleCapError("instance too large for exact oracle")
    if g.n == 0:
        return 0
    # Reorder by descending degree: high-degree vertices first tightens the
    # popcount prune early.
    order = sorted(range(g.n), key=lambda v: g.degrees[v], reverse=True)
    position = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bit_members(g.adj[v]):
            row |= 1 << position[u]
        adj[position[v]] = row

    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            expand(candidates & adj[v], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def clique_number_naive(g: Graph) -> int:
    """Independent reference oracle: scan all vertex subsets, largest first.

    Exponential; intended for n small enough to cross-check the
    branch-and-bound oracle.
    """
    for size in range(g.n, 1, -1):
        for subset in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 1 if g.n else 0


def independence_number_exact(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Exact independence number, via the clique oracle on the complement."""
    return clique_number_exact(complement(g), limits)


def _delta_block_search(g: Graph, r_limit: int) -> list[int] | None:
    """Find a partition of V(G) into at most ``r_limit`` delta-set blocks.

    Blocks are generated canonically: each new block is seeded with the
    lowest unassigned vertex, so permutations of the same partition are
    visited once.  Block feasibility is pure Definition-level arithmetic:
    a block B stays legal while max degree in B <= n - |B|, and that bound
    only tightens as the block grows, so violating prefixes are pruned.
    """
    n = g.n
    degs = g.degrees

    def blocks_containing_seed(seed: int, pool: list[int]):
        # DFS over candidate completions, larger blocks explored first.
        def rec(mask: int, size: int, maxdeg: int, start: int):
            for i in range(start, len(pool)):
                v = pool[i]
                new_max = max(maxdeg, degs[v])
                if new_max <= n - (size + 1):
                    yield from rec(mask | (1 << v), size + 1, new_max, i + 1)
            yield mask

        yield from rec(1 << seed, 1, degs[seed], 0)

    def rec_partition(unassigned: int, blocks_left: int) -> list[int] | None:
        if unassigned == 0:
            return []
        if blocks_left == 0:
            return None
        remaining = list(bit_members(unassigned))
        # Capacity prune: no delta block can exceed n - (min degree present).
        largest_possible = n - min(degs[v] for v in remaining)
        if len(remaining) > blocks_left * largest_possible:
            return None
        seed = remaining[0]
        pool = remaining[1:]
        for block in blocks_containing_seed(seed, pool):
            rest = rec_partition(unassigned & ~block, blocks_left - 1)
            if rest is not None:
                return [block] + rest
        return None

    return rec_partition(g.vertex_mask, r_limit)


def phi_exact_with_witness(
    g: Graph, limits: OracleLimits = DEFAULT_LIMITS
) -> tuple[int, DeltaPartition]:
    """Minimum block count over all partitions of V(G) into delta-sets,
    with one witness partition.

    Iterative deepening starts at ceil(W(G)), which is a sound lower bound
    on the block count, and singletons guarantee success by r = n.
    """
    if g.n > limits.max_n_phi:
        raise OracleCapError("instance too large for exact oracle")
    if g.n == 0:
        raise ValueError("empty graph")
    start = max(1, math.ceil(wei_bound(g)))
    for r in range(start, g.n + 1):
        masks = _delta_block_search(g, r)
        if masks is not None:
            return len(masks), partition_from_masks(masks)
    raise RuntimeError("singleton partition unreachable; graph invariants broken")


def phi_exact(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    return phi_exact_with_witness(g, limits)[0]


@dataclass(frozen=True)
class ChainReport:
    """The exact chain omega >= phi >= W(G) evaluated on one graph."""

    omega: int
    phi: int
    wei: Fraction

    @property
    def holds(self) -> bool:
        return self.omega >= self.phi and self.phi >= self.wei


def wei_bound_floor_check(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> ChainReport:
    """Compute omega, phi and W(G) and report whether the chain holds.

    A False report means an implementation bug somewhere, never new
    mathematics; callers are expected to treat it as fatal.
    """
    return ChainReport(
        omega=clique_number_exact(g, limits),
        phi=phi_exact(g, limits),
        wei=wei_bound(g),
    )
