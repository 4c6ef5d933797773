"""No-leaf edge-subgraph counting on small multigraphs.

A no-leaf subgraph is a subset of edges such that no vertex has degree
exactly 1 in the subset; isolated vertices are fine and the empty subset
counts.  The counter enumerates all edge subsets directly, which is the
point: it is a combinatorial cross-check against algebraic rank
computations, so it must stay independent of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import EnumerationLimitError, FormatError, PreconditionError

# 2^24 subsets is a few seconds of work; past that, refuse
MAX_EDGES = 24


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected multigraph without loops, vertices numbered from 0."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) points outside the vertex range")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)


def moebius_ladder(k: int) -> SimpleGraph:
    """The Moebius ladder on 2k vertices: a 2k-cycle plus k cross rungs.

    Vertices 0..2k-1 sit on the cycle; rung i joins i to i + k.  Every
    vertex has degree 3.  k = 1 would force parallel and loop edges, so
    k >= 2 is required.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise PreconditionError("moebius_ladder needs integer k >= 2")
    count = 2 * k
    cycle = tuple((i, (i + 1) % count) for i in range(count))
    rungs = tuple((i, i + k) for i in range(k))
    return SimpleGraph(count, cycle + rungs)


def count_noleaf_subgraphs(graph: SimpleGraph) -> int:
    """Count edge subsets in which no vertex has degree exactly 1.

    Plain enumeration over all 2^E subsets with a per-subset degree
    tally.  Graphs with more than 24 edges are refused.
    """
    edges = graph.edges
    if len(edges) > MAX_EDGES:
        raise EnumerationLimitError(
            f"{len(edges)} edges exceed the enumeration limit of {MAX_EDGES}"
        )
    count = 0
    n = graph.vertex_count
    for mask in range(1 << len(edges)):
        degree = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = edges[i]
                degree[u] += 1
                degree[v] += 1
            m >>= 1
            i += 1
        if 1 not in degree:
            count += 1
    return count


def load_simple_graph(text: str) -> SimpleGraph:
    """Parse a simple graph JSON document {"vertex_count": ..., "edges": [...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"graph document: {exc}") from exc
    if not isinstance(doc, dict) or "vertex_count" not in doc or "edges" not in doc:
        raise FormatError("graph document needs 'vertex_count' and 'edges'")
    count = doc["vertex_count"]
    if not isinstance(count, int) or isinstance(count, bool) or count < 0:
        raise FormatError("'vertex_count' must be a nonnegative integer")
    if not isinstance(doc["edges"], list):
        raise FormatError("'edges' must be a list")
    edges = []
    for i, entry in enumerate(doc["edges"]):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(e, int) and not isinstance(e, bool) for e in entry)
        ):
            raise FormatError(f"edge {i}: expected a pair of vertex indices")
        edges.append((entry[0], entry[1]))
    try:
        return SimpleGraph(count, tuple(edges))
    except ValueError as exc:
        raise FormatError(f"graph document: {exc}") from exc
