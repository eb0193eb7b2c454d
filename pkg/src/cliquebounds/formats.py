"""Graph interchange: DIMACS edge format and labeled edge lists.

DIMACS is the primary format ("p edge <n> <m>" header, 1-based "e u v"
lines); edge lists are for hand-written fixtures and allow arbitrary
whitespace-free string labels plus "v <label>" declarations for isolated
vertices.  Parsers report the offending line number on every error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class ParseError(ValueError):
    def __init__(self, message: str, line_no: int | None = None) -> None:
        self.line_no = line_no
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class LoadedGraph:
    """A parsed graph together with its external-label bijection."""

    graph: Graph
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ValueError("label map must cover every vertex")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("label map must be a bijection")


def parse_dimacs(text: str) -> LoadedGraph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", line_no)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("malformed problem line, expected 'p edge <n> <m>'", line_no)
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise ParseError("non-integer tokens in problem line", line_no) from None
            if n < 0:
                raise ParseError("negative vertex count", line_no)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p edge' header", line_no)
            if len(tokens) != 3:
                raise ParseError("malformed edge line, expected 'e <u> <v>'", line_no)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("non-integer vertex id", line_no) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", line_no)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line_no)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line type {tokens[0]!r}", line_no)
    if n is None:
        raise ParseError("missing 'p edge' header")
    graph = Graph.from_edges(n, edges)  # duplicate edge lines collapse here
    return LoadedGraph(graph, tuple(str(i + 1) for i in range(n)))


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> LoadedGraph:
    labels: list[str] = []
    index: dict[str, int] = {}

    def vertex_id(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError("malformed vertex declaration, expected 'v <label>'", line_no)
            vertex_id(tokens[1])
        elif len(tokens) == 2:
            a, b = tokens
            if a == b:
                raise ParseError(f"self-loop at label {a!r}", line_no)
            edges.append((vertex_id(a), vertex_id(b)))
        else:
            raise ParseError("malformed line, expected 'u v' or 'v <label>'", line_no)
    graph = Graph.from_edges(len(labels), edges)
    return LoadedGraph(graph, tuple(labels))


def emit_edge_list(g: Graph, labels: tuple[str, ...] | None = None) -> str:
    """Inverse of parse_edge_list: declares every vertex, then lists edges.

    Declaring all vertices up front keeps isolated vertices and makes the
    parse assign ids in emission order, so round-trips are exact.
    """
    if labels is None:
        labels = tuple(str(v) for v in range(g.n))
    if len(labels) != g.n or len(set(labels)) != g.n:
        raise ValueError("label map must be a bijection over the vertices")
    for label in labels:
        if not label or label.split() != [label] or "#" in label:
            raise ValueError(f"label {label!r} is not a single printable token")
        if label == "v" and g.degrees[labels.index(label)] > 0:
            raise ValueError("label 'v' on a non-isolated vertex cannot round-trip")
    lines = [f"v {label}" for label in labels]
    lines.extend(f"{labels[u]} {labels[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """Guess 'dimacs' or 'edgelist' from the first structural line."""
    for raw in text.splitlines():
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] in ("c", "p"):
            return "dimacs"
        return "edgelist"
    return "edgelist"


def parse(text: str, fmt: str = "auto") -> LoadedGraph:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")
