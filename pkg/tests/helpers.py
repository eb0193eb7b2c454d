"""Independent reference implementations and graph strategies for the tests.

Everything here recomputes from first principles (pairwise scans, explicit
set algebra, exhaustive partition enumeration) so the package code is
checked against a second, structurally different path.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from cliquebounds import Graph
from cliquebounds.generators import gnp


def naive_degree(g: Graph, v: int) -> int:
    return sum(1 for u in range(g.n) if u != v and g.has_edge(u, v))


def naive_common_neighborhood(g: Graph, s) -> frozenset[int]:
    neighbor_sets = [
        {u for u in range(g.n) if g.has_edge(u, v)} for v in s
    ]
    return frozenset(set.intersection(*neighbor_sets))


def naive_is_clique(g: Graph, s) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def naive_is_independent(g: Graph, s) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def naive_wei_weight(g: Graph, s) -> Fraction:
    return sum(
        (Fraction(1, g.n - naive_degree(g, v)) for v in s), start=Fraction(0)
    )


def naive_is_delta_set(g: Graph, s) -> bool:
    members = list(s)
    return all(naive_degree(g, v) <= g.n - len(members) for v in members)


def naive_clique_number(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        if any(naive_is_clique(g, c) for c in combinations(range(g.n), size)):
            best = size
    return best


def naive_independence_number(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        if any(naive_is_independent(g, c) for c in combinations(range(g.n), size)):
            best = size
    return best


def naive_phi(g: Graph) -> int:
    """Minimum delta-set partition size by plain vertex-at-a-time backtracking,
    with no weight-based starting level."""
    n = g.n
    best = n  # singletons always work

    def search(index: int, blocks: list[list[int]]) -> None:
        nonlocal best
        if len(blocks) >= best and index < n:
            return
        if index == n:
            best = min(best, len(blocks))
            return
        v = index
        for block in blocks:
            block.append(v)
            if naive_is_delta_set(g, block):
                search(index + 1, blocks)
            block.pop()
        blocks.append([v])
        search(index + 1, blocks)
        blocks.pop()

    search(0, [])
    return best


def all_graphs(n: int):
    """Every simple graph on vertices 0..n-1, by edge-subset enumeration."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1])


def seeded_gnp_ensemble(count: int, master_seed: int, n_low: int, n_high: int, ps=(0.2, 0.5, 0.8)):
    """Reproducible stream of (graph, n, p) drawn from the package gnp generator."""
    rng = random.Random(master_seed)
    for _ in range(count):
        n = rng.randint(n_low, n_high)
        p = rng.choice(ps)
        yield gnp(n, p, rng.randrange(2**32)), n, p


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n < 2:
        return Graph.from_edges(n, [])
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(n, edges)


@st.composite
def graph_with_subset(draw, min_n: int = 1, max_n: int = 8, min_size: int = 1):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    members = draw(
        st.lists(
            st.integers(min_value=0, max_value=g.n - 1),
            unique=True,
            min_size=min(min_size, g.n),
        )
    )
    return g, frozenset(members)
