"""Named and random graph generators, deterministic for fixed arguments.

Vertex-count arguments always mean the total number of vertices: star(5) is
one center plus four leaves.  Random graphs draw from random.Random(seed)
with vertex pairs scanned in lexicographic order, so a (name, params, seed)
triple reproduces bit-exactly.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .graph import Graph


class GeneratorError(ValueError):
    """Invalid generator name or parameters."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GeneratorError(message)


def complete(n: int) -> Graph:
    _require(n >= 1, "complete: n must be >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    _require(n >= 1, "edgeless: n must be >= 1")
    return Graph.from_edges(n, [])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle: n must be >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    _require(n >= 1, "path: n must be >= 1")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star(n: int) -> Graph:
    _require(n >= 1, "star: n must be >= 1")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    _require(len(sizes) >= 1, "complete_multipartite: need at least one part")
    _require(all(s >= 1 for s in sizes), "complete_multipartite: part sizes must be >= 1")
    n = sum(sizes)
    part = []
    for i, size in enumerate(sizes):
        part.extend([i] * size)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return Graph.from_edges(n, edges)


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes as equal as
    possible (the larger parts come first)."""
    _require(r >= 1, "turan: r must be >= 1")
    _require(n >= r, "turan: need n >= r")
    base, extra = divmod(n, r)
    sizes = [base + 1] * extra + [base] * (r - extra)
    return complete_multipartite(sizes)


def gnp(n: int, p: float, seed: int) -> Graph:
    _require(n >= 1, "gnp: n must be >= 1")
    _require(0.0 <= p <= 1.0, "gnp: p must be in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def generate(name: str, args: Sequence[str] = (), seed: int | None = None) -> Graph:
    """Dispatch a generator by name with string parameters (the CLI surface).

    gnp takes its seed either as a third positional argument or from
    ``seed``; all other generators ignore ``seed``.
    """

    def as_int(value: str, what: str) -> int:
        try:
            return int(value)
        except ValueError:
            raise GeneratorError(f"{name}: {what} must be an integer, got {value!r}") from None

    def arity(k: int) -> None:
        _require(len(args) == k, f"{name}: expected {k} parameter(s), got {len(args)}")

    if name == "complete":
        arity(1)
        return complete(as_int(args[0], "n"))
    if name == "edgeless":
        arity(1)
        return edgeless(as_int(args[0], "n"))
    if name == "cycle":
        arity(1)
        return cycle(as_int(args[0], "n"))
    if name == "path":
        arity(1)
        return path(as_int(args[0], "n"))
    if name == "star":
        arity(1)
        return star(as_int(args[0], "n"))
    if name == "complete_multipartite":
        arity(1)
        try:
            sizes = [int(tok) for tok in args[0].split(",") if tok]
        except ValueError:
            raise GeneratorError(
                "complete_multipartite: sizes must be comma-separated integers"
            ) from None
        return complete_multipartite(sizes)
    if name == "turan":
        arity(2)
        return turan(as_int(args[0], "n"), as_int(args[1], "r"))
    if name == "gnp":
        _require(len(args) in (2, 3), "gnp: expected n, p [, seed]")
        n = as_int(args[0], "n")
        try:
            p = float(args[1])
        except ValueError:
            raise GeneratorError(f"gnp: p must be a number, got {args[1]!r}") from None
        if len(args) == 3:
            seed = as_int(args[2], "seed")
        if seed is None:
            raise GeneratorError("gnp: a seed is required for reproducibility")
        return gnp(n, p, seed)
    if name == "petersen":
        arity(0)
        return petersen()
    raise GeneratorError(f"unknown generator {name!r}")


GENERATOR_NAMES = (
    "complete",
    "edgeless",
    "cycle",
    "path",
    "star",
    "complete_multipartite",
    "turan",
    "gnp",
    "petersen",
)
