"""Canonical simple-graph representation and basic structure queries.

Vertices are dense integers 0..n-1.  Edges are stored as a tuple of
(min, max) pairs in lexicographic order, so equal graphs compare equal and
every serialization is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Base class for graph validation failures."""


class SelfLoop(GraphError):
    def __init__(self, edge):
        super().__init__(f"self-loop {edge!r}")
        self.edge = edge


class DuplicateEdge(GraphError):
    def __init__(self, edge):
        super().__init__(f"duplicate edge {edge!r}")
        self.edge = edge


class BadVertexId(GraphError):
    def __init__(self, edge, n):
        super().__init__(f"edge {edge!r} out of range for {n} vertices")
        self.edge = edge


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Do not build directly unless the edge tuple is already canonical;
    use :func:`validate_graph` or :func:`make_graph` instead.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return degree_list(self.n, self.edges)

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)


def degree_list(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    d = [0] * n
    for u, v in edges:
        d[u] += 1
        d[v] += 1
    return d


def adjacency(g: Graph) -> list[list[int]]:
    return adjacency_lists(g.n, g.edges)


def adjacency_lists(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def make_graph(n: int, edges: Iterable[tuple[int, int]],
               labels: Optional[Sequence[str]] = None) -> Graph:
    """Canonicalize an edge collection that is already known to be valid."""
    canon = sorted((u, v) if u < v else (v, u) for u, v in edges)
    return Graph(n, tuple(canon), tuple(labels) if labels is not None else None)


def validate_graph(raw_edges: Iterable[tuple[int, int]], n: int,
                   labels: Optional[Sequence[str]] = None) -> Graph:
    """Validate and canonicalize an edge list.

    Rejects self-loops, duplicate (unordered) edges and out-of-range
    endpoints.  Connectivity is deliberately not required; callers that
    need it use :func:`is_connected`.
    """
    if n < 0:
        raise BadVertexId(None, n)
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for e in raw_edges:
        u, v = e
        if u == v:
            raise SelfLoop(e)
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertexId(e, n)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(e)
        seen.add(key)
        canon.append(key)
    canon.sort()
    return Graph(n, tuple(canon), tuple(labels) if labels is not None else None)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    odd_vertices: frozenset[int]
    even_vertices: frozenset[int]
    max_degree: int


def degree_profile(g: Graph) -> DegreeProfile:
    d = g.degrees()
    odd = frozenset(v for v, x in enumerate(d) if x & 1)
    even = frozenset(v for v, x in enumerate(d) if not x & 1)
    return DegreeProfile(tuple(d), odd, even, max(d, default=0))


def is_connected(g: Graph) -> bool:
    return connected_raw(g.n, g.edges)


def connected_raw(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj = adjacency_lists(n, edges)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == n


@dataclass(frozen=True)
class ShapeClass:
    """Exactly one of: path, cycle, claw, star, prolific, other_non_prolific.

    ``star_leaves`` is set only for the star variant (r >= 4; smaller stars
    are paths or the claw).  A connected graph with max degree >= 3 and at
    least 4 edges is prolific; stars with r >= 4 leaves satisfy that too and
    are reported as stars, with :func:`is_prolific` still true for them.
    """

    kind: str
    star_leaves: int = 0

    PATH = "path"
    CYCLE = "cycle"
    CLAW = "claw"
    STAR = "star"
    PROLIFIC = "prolific"
    OTHER = "other_non_prolific"


def shape_class(g: Graph) -> ShapeClass:
    if g.n == 0 or not is_connected(g):
        return ShapeClass(ShapeClass.OTHER)
    d = g.degrees()
    dmax = max(d, default=0)
    if g.m == g.n - 1 and dmax <= 2:
        return ShapeClass(ShapeClass.PATH)
    if g.m == g.n and dmax == 2:
        return ShapeClass(ShapeClass.CYCLE)
    if g.n == 4 and g.m == 3 and dmax == 3:
        return ShapeClass(ShapeClass.CLAW)
    if g.m == g.n - 1 and dmax == g.n - 1 and d.count(1) == g.n - 1:
        return ShapeClass(ShapeClass.STAR, star_leaves=dmax)
    return ShapeClass(ShapeClass.PROLIFIC)


def is_prolific(g: Graph) -> bool:
    """Connected, max degree >= 3 and at least 4 edges."""
    if g.m < 4 or not is_connected(g):
        return False
    return max(g.degrees(), default=0) >= 3
