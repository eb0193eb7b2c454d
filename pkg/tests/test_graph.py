from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquebounds import (
    Graph,
    common_neighborhood,
    complement,
    induced_subgraph,
    is_clique,
    is_independent,
)
from cliquebounds.generators import complete, cycle, edgeless

from helpers import graph_with_subset, graphs, naive_common_neighborhood, naive_is_clique


def test_construction_rejects_self_loops():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(3, [(0, 0)])


def test_construction_rejects_out_of_range_edges():
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(3, [(0, 5)])


def test_construction_rejects_asymmetric_rows():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0b00))


def test_duplicate_edges_collapse():
    g = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_degrees_and_neighbors():
    g = cycle(5)
    assert g.degrees == (2, 2, 2, 2, 2)
    assert g.neighbors(0) == {1, 4}
    assert g.neighbors(2) == {1, 3}


def test_common_neighborhood_triangle_singleton():
    assert common_neighborhood(complete(3), [0]) == {1, 2}


def test_common_neighborhood_c5_adjacent_pair_is_empty():
    assert common_neighborhood(cycle(5), [0, 1]) == frozenset()


def test_common_neighborhood_k4_pair():
    assert common_neighborhood(complete(4), [0, 1]) == {2, 3}


def test_common_neighborhood_rejects_empty_base():
    with pytest.raises(ValueError, match="empty intersection base"):
        common_neighborhood(cycle(5), [])


def test_complement_of_complete_is_edgeless():
    for n in range(1, 6):
        assert complement(complete(n)).m == 0


def test_complement_of_c5_is_two_regular_with_five_edges():
    co = complement(cycle(5))
    assert co.m == 5
    assert co.degrees == (2, 2, 2, 2, 2)


def test_complement_of_single_vertex():
    assert complement(edgeless(1)) == complete(1)


def test_induced_subgraph_of_c5_prefix_is_path():
    sub, mapping = induced_subgraph(cycle(5), [0, 1, 2])
    assert mapping == (0, 1, 2)
    assert sub.m == 2
    assert sub.has_edge(0, 1) and sub.has_edge(1, 2) and not sub.has_edge(0, 2)


def test_induced_subgraph_full_set_is_identity():
    g = cycle(6)
    sub, mapping = induced_subgraph(g, range(6))
    assert sub == g
    assert mapping == tuple(range(6))


def test_induced_subgraph_of_k5_triple_is_triangle():
    sub, _ = induced_subgraph(complete(5), [1, 3, 4])
    assert sub == complete(3)


def test_induced_subgraph_empty_set():
    sub, mapping = induced_subgraph(cycle(5), [])
    assert sub.n == 0 and mapping == ()


def test_is_clique_fixtures():
    assert is_clique(complete(4), [0, 1, 2, 3])
    assert not is_clique(cycle(5), [0, 1, 2])
    assert is_clique(cycle(5), [3])
    assert is_clique(cycle(5), [])


def test_is_independent_fixtures():
    assert is_independent(edgeless(4), [0, 1, 2, 3])
    assert is_independent(cycle(5), [0, 2])
    assert not is_independent(complete(3), [0, 1])


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees) == 2 * g.m


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graph_with_subset(min_size=0))
def test_independent_iff_clique_in_complement(gs):
    g, s = gs
    assert is_independent(g, s) == is_clique(complement(g), s)


@given(graph_with_subset(min_size=1))
def test_common_neighborhood_matches_naive(gs):
    g, s = gs
    assert common_neighborhood(g, s) == naive_common_neighborhood(g, s)


@given(graph_with_subset(min_size=1))
def test_common_neighborhood_recurrence(gs):
    g, s = gs
    outside = [v for v in range(g.n) if v not in s]
    for v in outside:
        expected = common_neighborhood(g, s) & g.neighbors(v)
        assert common_neighborhood(g, s | {v}) == expected


@given(graph_with_subset(min_size=0))
def test_clique_common_neighborhood_is_disjoint(gs):
    g, s = gs
    if s and is_clique(g, s):
        assert not (common_neighborhood(g, s) & s)


@given(graph_with_subset(min_size=0))
def test_is_clique_matches_naive(gs):
    g, s = gs
    assert is_clique(g, s) == naive_is_clique(g, s)


@given(graphs(max_n=6))
def test_induced_subgraph_edge_filter(g):
    for size in range(g.n + 1):
        for s in combinations(range(g.n), min(size, 3)):
            sub, mapping = induced_subgraph(g, s)
            expected = {
                (min(a, b), max(a, b))
                for a, b in combinations(s, 2)
                if g.has_edge(a, b)
            }
            got = {(mapping[u], mapping[v]) for u, v in sub.edges()}
            assert got == expected
