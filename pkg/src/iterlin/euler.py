"""Euler-path analysis of iterated line graphs.

The central question: for which k does the k-th line-graph iterate of a
connected graph admit an Euler path (exactly two odd-degree vertices; an
Euler circuit does not count)?  ``lgepi`` answers in closed form by looking
at most two levels deep plus degree bookkeeping for a third; ``lgepi_oracle``
answers by materializing the iterates and is used to cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, adjacency_lists, connected_raw, degree_list, is_connected
from .lineop import (
    BudgetExceeded,
    IterationBudget,
    line_edge_count,
    line_edge_list,
)


class EdgelessGraph(ValueError):
    pass


class DisconnectedGraph(ValueError):
    pass


# reasons attached to the closed-form result
REASON_PATH = "path"
REASON_EG0 = "eg0"
REASON_NO_EULER_AT_L2 = "no-euler-at-l2"
REASON_NO_EULER_AT_L3 = "no-euler-at-l3"
REASON_TRAILING_PATHS = "trailing-paths"
REASON_ADJACENT_ODD = "adjacent-odd-1-3"
REASON_ORACLE = "oracle"


@dataclass(frozen=True)
class EulerIndexSet:
    indices: frozenset[int]
    reason: str
    partial: bool = False

    def as_sorted(self) -> list[int]:
        return sorted(self.indices)


@dataclass(frozen=True)
class CriticalEdgeSet:
    """Edges with exactly one odd endpoint.  They are in bijection with the
    odd-degree vertices of the line graph."""

    edges: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TrailingPath:
    """Path v1..vk with d(v1) = 1, internal degrees 2 and d(vk) even >= 4."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def critical_edges(g: Graph) -> CriticalEdgeSet:
    d = g.degrees()
    crit = tuple(e for e in g.edges if (d[e[0]] & 1) != (d[e[1]] & 1))
    return CriticalEdgeSet(crit)


def has_euler_path(g: Graph) -> bool:
    """Exactly two odd-degree vertices, at least one edge, connected."""
    if g.m == 0:
        return False
    if sum(d & 1 for d in g.degrees()) != 2:
        return False
    return is_connected(g)


def trailing_paths(g: Graph) -> list[TrailingPath]:
    return [TrailingPath(tuple(p)) for p in _trailing_paths_raw(g.n, g.edges)]


def _trailing_paths_raw(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    degs = degree_list(n, edges)
    adj = adjacency_lists(n, edges)
    out: list[list[int]] = []
    for v in range(n):
        if degs[v] != 1:
            continue
        walk = [v]
        prev, cur = v, adj[v][0]
        while degs[cur] == 2:
            walk.append(cur)
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
        walk.append(cur)
        if degs[cur] >= 4 and degs[cur] % 2 == 0:
            out.append(walk)
    return out


def _is_eg0_raw(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    """Structural test for the claw with a length-2 tail on one leaf."""
    if n != 6 or len(edges) != 5:
        return False
    degs = degree_list(n, edges)
    if sorted(degs) != [1, 1, 1, 2, 2, 3]:
        return False
    hub = degs.index(3)
    leafy = sum(1 for u, v in edges
                if (u == hub and degs[v] == 1) or (v == hub and degs[u] == 1))
    return leafy == 2


def _lgepi_core(n: int, edges: Sequence[tuple[int, int]]) -> tuple[set[int], str]:
    degs = degree_list(n, edges)
    m = len(edges)

    # Paths never gain edges under iteration: P_n yields Euler paths at
    # every level until the iterate degenerates, i.e. indices 0..n-2.
    if m == n - 1 and max(degs, default=0) <= 2:
        return set(range(n - 1)), REASON_PATH

    if _is_eg0_raw(n, edges):
        return {1, 3}, REASON_EG0

    ov0 = sum(d & 1 for d in degs)
    d1 = [degs[u] + degs[v] - 2 for u, v in edges]
    ov1 = sum(d & 1 for d in d1)
    l_edges = line_edge_list(n, edges)
    d2 = [d1[i] + d1[j] - 2 for i, j in l_edges]
    ov2 = sum(d & 1 for d in d2)
    # odd vertices of L^3 are edges of L^2 with odd degree sum; group those
    # edges by the L-vertex the two L-edges share, so L^2 is never built
    odd_cnt = [0] * m
    even_cnt = [0] * m
    for idx, (i, j) in enumerate(l_edges):
        if d2[idx] & 1:
            odd_cnt[i] += 1
            odd_cnt[j] += 1
        else:
            even_cnt[i] += 1
            even_cnt[j] += 1
    ov3 = sum(o * e for o, e in zip(odd_cnt, even_cnt))

    found = set()
    if ov0 == 2:
        found.add(0)
    if ov1 == 2 and m >= 2:
        found.add(1)
    if ov2 == 2:
        found.add(2)
    if ov3 == 2:
        found.add(3)

    if ov2 != 2:
        return found, REASON_NO_EULER_AT_L2
    if ov3 != 2:
        return found, REASON_NO_EULER_AT_L3
    l2_edges = line_edge_list(m, l_edges)
    tails = _trailing_paths_raw(len(l_edges), l2_edges)
    if len(tails) == 2:
        shortest = min(len(p) - 1 for p in tails)
        found.update(range(4, shortest + 3))
        return found, REASON_TRAILING_PATHS
    return found, REASON_ADJACENT_ODD


def lgepi(g: Graph) -> EulerIndexSet:
    """All k for which the k-th line-graph iterate has an Euler path."""
    if g.m == 0:
        raise EdgelessGraph("graph has no edges")
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    indices, reason = _lgepi_core(g.n, g.edges)
    return EulerIndexSet(frozenset(indices), reason)


def _oracle_core(n: int, edges: Sequence[tuple[int, int]],
                 budget: IterationBudget) -> tuple[set[int], bool]:
    found: set[int] = set()
    partial = False
    d0 = degree_list(n, edges)
    if edges and sum(d & 1 for d in d0) == 2 and connected_raw(n, edges):
        found.add(0)
    # no index can exceed 2 + |V(L^2)|
    index_bound = 2 + line_edge_count([d0[u] + d0[v] - 2 for u, v in edges])
    bound = min(index_bound, budget.max_iterations)

    # Levels beyond the last materialized iterate are evaluated from degree
    # parities alone: one level ahead via d(u)+d(v)-2 per edge, two levels
    # ahead by grouping adjacent edge pairs by their shared vertex.  Iterates
    # of a connected graph stay connected, so parity plus a nonzero edge
    # count decides the Euler-path question at those levels.
    cur_n, cur_edges = n, list(edges)
    cur_degs = d0
    k_mat = 0
    eg0 = {0: _is_eg0_raw(n, edges)}
    evaluated = 0
    while True:
        j = evaluated + 1
        if j > bound:
            partial = bound < index_bound
            break
        m1 = line_edge_count(cur_degs)
        nd = [cur_degs[u] + cur_degs[v] - 2 for u, v in cur_edges]
        if j == k_mat + 1:
            has_j = m1 >= 1 and sum(d & 1 for d in nd) == 2
        else:  # j == k_mat + 2
            oc = [0] * cur_n
            ec = [0] * cur_n
            for idx, (u, v) in enumerate(cur_edges):
                if nd[idx] & 1:
                    oc[u] += 1
                    oc[v] += 1
                else:
                    ec[u] += 1
                    ec[v] += 1
            ov2 = sum(o * e for o, e in zip(oc, ec))
            has_j = line_edge_count(nd) >= 1 and ov2 == 2
        if has_j:
            found.add(j)
        evaluated = j
        if not has_j and j >= 2 and not eg0[j - 2]:
            break  # no later iterate can recover an Euler path
        if j == k_mat + 2:
            # evaluating j+1 needs the next iterate materialized
            if m1 > budget.max_edges or len(cur_edges) > budget.max_vertices:
                partial = True
                break
            cur_n, cur_edges = len(cur_edges), line_edge_list(cur_n, cur_edges)
            cur_degs = degree_list(cur_n, cur_edges)
            k_mat += 1
            eg0[k_mat] = _is_eg0_raw(cur_n, cur_edges)
    return found, partial


def lgepi_oracle(g: Graph, budget: Optional[IterationBudget] = None) -> EulerIndexSet:
    """Brute-force reference: materialize iterates and test each one."""
    if g.m == 0:
        raise EdgelessGraph("graph has no edges")
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    if budget is None:
        budget = IterationBudget()
    found, partial = _oracle_core(g.n, g.edges, budget)
    return EulerIndexSet(frozenset(found), REASON_ORACLE, partial=partial)
