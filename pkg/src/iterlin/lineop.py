"""The line-graph operator and its degree bookkeeping.

Line-graph vertex ids follow the canonical edge order of the source graph,
so every iterate is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, degree_list


DEFAULT_MAX_EDGES = 1_000_000
DEFAULT_MAX_ITERATIONS = 64


@dataclass(frozen=True)
class IterationBudget:
    max_vertices: int = DEFAULT_MAX_EDGES
    max_edges: int = DEFAULT_MAX_EDGES
    max_iterations: int = DEFAULT_MAX_ITERATIONS


class BudgetExceeded(RuntimeError):
    def __init__(self, level: int, size: int, last: Optional[Graph] = None):
        super().__init__(f"budget exceeded at level {level} (size {size})")
        self.level = level
        self.size = size
        self.last = last


@dataclass(frozen=True)
class LineGraphResult:
    graph: Graph
    # line-graph vertex id -> source edge
    lineage: tuple[tuple[int, int], ...]


def line_edge_list(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Edges of L(G) as pairs of source-edge indices, grouped by shared endpoint.

    Within each incidence list indices are increasing, so every emitted pair
    is already (low, high).  The overall list is not sorted.
    """
    inc: list[list[int]] = [[] for _ in range(n)]
    i = 0
    for u, v in edges:
        inc[u].append(i)
        inc[v].append(i)
        i += 1
    out: list[tuple[int, int]] = []
    ext = out.extend
    for lst in inc:
        if len(lst) > 1:
            ext(combinations(lst, 2))
    return out


def line_edge_count(degrees: Sequence[int]) -> int:
    return sum(d * (d - 1) // 2 for d in degrees)


def line_graph(g: Graph, budget: Optional[IterationBudget] = None) -> LineGraphResult:
    if budget is not None:
        size = line_edge_count(g.degrees())
        if size > budget.max_edges or g.m > budget.max_vertices:
            raise BudgetExceeded(1, size)
    le = line_edge_list(g.n, g.edges)
    le.sort()
    return LineGraphResult(Graph(g.m, tuple(le)), g.edges)


def next_degree_multiset(g: Graph) -> list[int]:
    """Degree multiset of L(G) without materializing it (sorted)."""
    d = g.degrees()
    return sorted(d[u] + d[v] - 2 for u, v in g.edges)


def iterate_line_graph(g: Graph, k: int, budget: Optional[IterationBudget] = None) -> Graph:
    """L^k(g) with deterministic vertex ordering at each level."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if budget is None:
        budget = IterationBudget()
    if k > budget.max_iterations:
        raise BudgetExceeded(budget.max_iterations, 0, g)
    n, edges = g.n, list(g.edges)
    for level in range(1, k + 1):
        size = line_edge_count(degree_list(n, edges))
        if size > budget.max_edges or len(edges) > budget.max_vertices:
            raise BudgetExceeded(level, size, Graph(n, tuple(sorted(edges))))
        nxt = line_edge_list(n, edges)
        nxt.sort()
        n, edges = len(edges), nxt
    return Graph(n, tuple(edges))


def has_induced_claw(g: Graph) -> bool:
    """True iff some vertex has three pairwise non-adjacent neighbours."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in range(g.n):
        nb = adj[v]
        if len(nb) < 3:
            continue
        nb_mask = masks[v]
        for i, a in enumerate(nb):
            # neighbours of v after a, not adjacent to a
            rest = nb_mask & ~masks[a]
            rest &= ~((1 << (a + 1)) - 1)
            if not rest:
                continue
            for b in nb[i + 1:]:
                if rest >> b & 1:
                    third = rest & ~masks[b] & ~((1 << (b + 1)) - 1)
                    if third:
                        return True
    return False
