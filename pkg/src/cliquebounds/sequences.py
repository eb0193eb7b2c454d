"""Greedy alpha/beta vertex sequences and the bound certificates they justify.

Both constructions start from a maximum-degree vertex and repeatedly pick a
next vertex inside the common neighborhood of everything chosen so far, so
the sequence is always a clique.  The single difference:

* alpha: the next vertex maximizes degree in the subgraph induced by the
  current common neighborhood;
* beta: the next vertex maximizes degree in the whole graph.

A sequence of length r with a delta-set terminal (alpha), or with degree sum
at most (r-1)*n (beta), certifies r as a lower bound on the clique number
that dominates the exact weight W(G).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Literal, Sequence

from .bounds import Weight, is_delta_set, wei_bound
from .graph import Graph, VertexSet, bit_members, mask_to_set

TieBreak = Callable[[Sequence[int]], int]


def lowest_id(candidates: Sequence[int]) -> int:
    """Default deterministic tie-break: smallest vertex id."""
    return candidates[0]


class SeededTieBreak:
    """Random tie-break with private seed state, reproducible per instance."""

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self._rng = random.Random(seed)

    def __call__(self, candidates: Sequence[int]) -> int:
        return self._rng.choice(candidates)

    def __repr__(self) -> str:
        return f"SeededTieBreak(seed={self.seed})"


SequenceKind = Literal["alpha", "beta"]


@dataclass(frozen=True)
class SequenceStep:
    """One greedy choice: the candidate pool, the winner, and the degree that won.

    For alpha steps past the first, the degree is measured in the induced
    subgraph on the candidates; for beta steps it is the global degree.
    """

    candidates: VertexSet
    chosen: int
    selection_degree: int


@dataclass(frozen=True)
class VertexSequence:
    kind: SequenceKind
    vertices: tuple[int, ...]
    terminal: VertexSet | None  # N(v_1..v_{r-1}); None when r < 2
    trace: tuple[SequenceStep, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("sequence must contain at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("sequence vertices must be distinct")
        if len(self.trace) != len(self.vertices):
            raise ValueError("trace must record one step per vertex")
        if (self.terminal is None) != (len(self.vertices) < 2):
            raise ValueError("terminal must be present exactly when r >= 2")

    @property
    def r(self) -> int:
        return len(self.vertices)


class Justification(Enum):
    THEOREM_1 = "THEOREM_1"
    THEOREM_2 = "THEOREM_2"
    THEOREM_3 = "THEOREM_3"
    COROLLARY = "COROLLARY"
    CLIQUE_ONLY = "CLIQUE_ONLY"


@dataclass(frozen=True)
class BoundCertificate:
    """A verified claim that the clique number is at least ``r``.

    Evidence for every route is recorded even when a stronger justification
    is chosen, so certificates stay auditable:

    * terminal_delta_set: the delta-set N(v_1..v_{r-1}) (theorem-1/3 route);
    * degree_sum and degree_sum_limit = (r-1)*n (theorem-2 route);
    * sequence_maximal: the sequence extends to no (r+1)-clique (corollary
      premise, which is why the degree-sum condition holds).
    """

    r: int
    justification: Justification
    sequence: VertexSequence
    wei_value: Weight
    terminal_delta_set: VertexSet | None = None
    degree_sum: int | None = None
    degree_sum_limit: int | None = None
    sequence_maximal: bool = False

    def __post_init__(self) -> None:
        if self.r != self.sequence.r:
            raise ValueError("certificate r must match its sequence length")
        just = self.justification
        if just in (Justification.THEOREM_1, Justification.THEOREM_3):
            if self.r < 2 or self.terminal_delta_set is None:
                raise ValueError(f"{just.name} needs r >= 2 and a delta terminal")
        if just in (Justification.THEOREM_2, Justification.COROLLARY):
            if self.degree_sum is None or self.degree_sum_limit is None:
                raise ValueError(f"{just.name} needs the degree-sum evidence")
            if just is Justification.THEOREM_2 and self.degree_sum > self.degree_sum_limit:
                raise ValueError("degree-sum condition does not hold")
            if just is Justification.COROLLARY and not self.sequence_maximal:
                raise ValueError("COROLLARY needs a maximal sequence")
        if just is not Justification.CLIQUE_ONLY and self.r < self.wei_value:
            raise ValueError(
                f"certificate bound {self.r} fell below W(G) = {self.wei_value}; "
                "this indicates a construction bug"
            )


# -- construction ------------------------------------------------------------


def _max_degree_start(g: Graph, tie_break: TieBreak) -> SequenceStep:
    top = max(g.degrees)
    candidates = [v for v in range(g.n) if g.degrees[v] == top]
    chosen = tie_break(candidates)
    return SequenceStep(frozenset(range(g.n)), chosen, top)


def _greedy_step(g: Graph, frontier: int, kind: SequenceKind, tie_break: TieBreak) -> SequenceStep:
    """Pick the next vertex from the ``frontier`` mask under the given rule."""
    if kind == "alpha":
        degree_of = lambda v: (g.adj[v] & frontier).bit_count()
    else:
        degree_of = lambda v: g.degrees[v]
    members = list(bit_members(frontier))
    top = max(degree_of(v) for v in members)
    candidates = [v for v in members if degree_of(v) == top]
    chosen = tie_break(candidates)
    return SequenceStep(mask_to_set(frontier), chosen, top)


def _build_sequence(g: Graph, kind: SequenceKind, tie_break: TieBreak) -> VertexSequence:
    if g.n == 0:
        raise ValueError("empty graph")
    first = _max_degree_start(g, tie_break)
    vertices = [first.chosen]
    trace = [first]
    frontier = g.adj[first.chosen]
    previous = g.vertex_mask
    while frontier:
        step = _greedy_step(g, frontier, kind, tie_break)
        vertices.append(step.chosen)
        trace.append(step)
        previous = frontier
        frontier &= g.adj[step.chosen]
    terminal = mask_to_set(previous) if len(vertices) >= 2 else None
    return VertexSequence(kind, tuple(vertices), terminal, tuple(trace))


def build_alpha_sequence(g: Graph, tie_break: TieBreak = lowest_id) -> VertexSequence:
    """Maximal alpha-sequence: greedy by induced degree until the common
    neighborhood empties out."""
    return _build_sequence(g, "alpha", tie_break)


def build_beta_sequence(g: Graph, tie_break: TieBreak = lowest_id) -> VertexSequence:
    """Maximal beta-sequence: greedy by global degree until the common
    neighborhood empties out."""
    return _build_sequence(g, "beta", tie_break)


def _frontier_after(g: Graph, vertices: Sequence[int]) -> int:
    mask = g.vertex_mask
    for v in vertices:
        mask &= g.adj[v]
    return mask


def _check_alpha_prefix(g: Graph, vertices: Sequence[int]) -> None:
    if not vertices:
        raise ValueError("not an alpha-prefix: empty sequence")
    if len(set(vertices)) != len(vertices):
        raise ValueError("not an alpha-prefix: repeated vertex")
    for v in vertices:
        g._check_vertex(v)
    if g.degrees[vertices[0]] != max(g.degrees):
        raise ValueError("not an alpha-prefix: first vertex is not of maximum degree")
    frontier = g.adj[vertices[0]]
    for v in vertices[1:]:
        if not (frontier >> v) & 1:
            raise ValueError(
                "not an alpha-prefix: vertex outside the common neighborhood"
            )
        induced = lambda u: (g.adj[u] & frontier).bit_count()
        if induced(v) != max(induced(u) for u in bit_members(frontier)):
            raise ValueError(
                "not an alpha-prefix: vertex does not attain the induced maximum degree"
            )
        frontier &= g.adj[v]


def extend_to_delta_terminal(
    g: Graph, seq: VertexSequence, tie_break: TieBreak = lowest_id
) -> VertexSequence:
    """Shortest greedy alpha-extension whose terminal N(v_1..v_{r-1}) is a
    delta-set.

    The delta condition is checked after every appended vertex, so the result
    can stop strictly before the maximal sequence; that is exactly how
    delta-set terminals that are not independent show up.  A maximal
    alpha-sequence of length >= 2 always has an independent terminal, so the
    extension exists except when no vertex has a neighbor at all; in that
    case the sequence is returned unextended with r = 1 and no terminal.
    """
    _check_alpha_prefix(g, seq.vertices)
    vertices = list(seq.vertices)
    trace = list(seq.trace)
    while True:
        if len(vertices) >= 2:
            terminal = _frontier_after(g, vertices[:-1])
            if is_delta_set(g, mask_to_set(terminal)):
                break
        frontier = _frontier_after(g, vertices)
        if not frontier:
            break  # maximal; only reachable here with r = 1 (edgeless start)
        step = _greedy_step(g, frontier, "alpha", tie_break)
        vertices.append(step.chosen)
        trace.append(step)
    terminal_set = (
        mask_to_set(_frontier_after(g, vertices[:-1])) if len(vertices) >= 2 else None
    )
    return VertexSequence("alpha", tuple(vertices), terminal_set, tuple(trace))


# -- certificates ------------------------------------------------------------


def certify_alpha_bound(
    g: Graph, tie_break: TieBreak = lowest_id
) -> BoundCertificate:
    """Certificate from a maximal alpha-sequence.

    The maximal sequence's terminal is independent, hence a delta-set, so the
    full sequence length is certified; sequences of length 1 (edgeless
    graphs) fall back to the bare clique bound r = 1.
    """
    seq = build_alpha_sequence(g, tie_break)
    seq = extend_to_delta_terminal(g, seq, tie_break)
    wei = wei_bound(g)
    maximal = _frontier_after(g, seq.vertices) == 0
    if seq.r < 2:
        return BoundCertificate(
            r=seq.r,
            justification=Justification.CLIQUE_ONLY,
            sequence=seq,
            wei_value=wei,
            sequence_maximal=maximal,
        )
    assert seq.terminal is not None
    if not is_delta_set(g, seq.terminal):
        raise RuntimeError("alpha certificate terminal is not a delta-set")
    return BoundCertificate(
        r=seq.r,
        justification=Justification.THEOREM_1,
        sequence=seq,
        wei_value=wei,
        terminal_delta_set=seq.terminal,
        sequence_maximal=maximal,
    )


def certify_beta_bound(
    g: Graph, tie_break: TieBreak = lowest_id
) -> BoundCertificate:
    """Certificate from a maximal beta-sequence.

    Justification priority: the degree-sum route first, then the delta-set
    terminal route.  Evidence for both is recorded when both apply, together
    with the maximality that makes the degree-sum condition hold.  Length-1
    sequences (edgeless graphs) take the bare clique bound.
    """
    seq = build_beta_sequence(g, tie_break)
    wei = wei_bound(g)
    r = seq.r
    degree_sum = sum(g.degrees[v] for v in seq.vertices)
    limit = (r - 1) * g.n
    maximal = _frontier_after(g, seq.vertices) == 0
    terminal_delta = (
        seq.terminal
        if seq.terminal is not None and is_delta_set(g, seq.terminal)
        else None
    )
    if r >= 2 and degree_sum <= limit:
        justification = Justification.THEOREM_2
    elif r >= 2 and terminal_delta is not None:
        justification = Justification.THEOREM_3
    else:
        justification = Justification.CLIQUE_ONLY
    return BoundCertificate(
        r=r,
        justification=justification,
        sequence=seq,
        wei_value=wei,
        terminal_delta_set=terminal_delta,
        degree_sum=degree_sum,
        degree_sum_limit=limit,
        sequence_maximal=maximal,
    )
