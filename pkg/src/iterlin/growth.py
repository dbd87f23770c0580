"""Degree growth of iterated line graphs.

For a prolific graph (connected, max degree >= 3, at least 4 edges) the max
degree eventually doubles-minus-2 at every level, so (Delta(L^k) - 2) * 2^(4-k)
stabilizes to a dyadic rational: the degree growth constant dgc.  A cycle
among max-degree vertices certifies that the doubling law already holds; a
long induced path of max-degree vertices predicts the level where such a
cycle appears without materializing the iterates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .dyadic import DyadicRational
from .families import CLASS_G1, CLASS_G2, CLASS_G3, CLASS_G4, recognize
from .graph import Graph, adjacency_lists, degree_list, is_prolific, make_graph
from .lineop import (
    DEFAULT_MAX_ITERATIONS,
    IterationBudget,
    line_edge_count,
    line_edge_list,
)


class NotProlific(ValueError):
    pass


METHOD_FAMILY = "family-recognition"
METHOD_DELTA_CYCLE = "delta-cycle"
METHOD_SHORTCUT = "delta-path-shortcut"
METHOD_PARTIAL = "partial-bound"

# dgc constants certified by family recognition, with the level and max
# degree at which the doubling law is known to hold for that class
_CLASS_VALUES = {
    CLASS_G1: (DyadicRational(3), 4),
    CLASS_G2: (DyadicRational(4), 2),
    CLASS_G3: (DyadicRational(11, 1), 5),
    CLASS_G4: (DyadicRational(6), 3),
}


@dataclass(frozen=True)
class DeltaCycleWitness:
    level: int
    delta: int
    cycle_vertices: tuple[int, ...]


@dataclass(frozen=True)
class ShortcutPrediction:
    iterations: int
    final_delta: int


@dataclass(frozen=True)
class DgcResult:
    value: Optional[DyadicRational]
    method: str
    lower_bound: Optional[DyadicRational] = None
    level: Optional[int] = None
    path_length: Optional[int] = None
    mdgpi_upper: Optional[int] = None
    delta_at_level: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class ClassLabel:
    label: str
    value: Optional[DyadicRational] = None
    result: Optional[DgcResult] = None

    NOT_PROLIFIC = "not-prolific"
    CLASS_G1 = "class-g1"
    CLASS_G2 = "class-g2"
    CLASS_G3 = "class-g3"
    CLASS_G4 = "class-g4"
    OTHER = "other"


@dataclass(frozen=True)
class DeltaSequence:
    values: tuple[int, ...]
    truncated: bool


def _delta_vertices(degs: Sequence[int]) -> tuple[int, list[int]]:
    dmax = max(degs, default=0)
    return dmax, [v for v, d in enumerate(degs) if d == dmax]


def _find_delta_cycle_raw(n: int, edges: Sequence[tuple[int, int]],
                          level: int) -> Optional[DeltaCycleWitness]:
    degs = degree_list(n, edges)
    dmax, dverts = _delta_vertices(degs)
    if len(dverts) < 3:
        return None
    dset = set(dverts)
    adj: dict[int, list[int]] = {v: [] for v in dverts}
    for u, v in edges:
        if u in dset and v in dset:
            adj[u].append(v)
            adj[v].append(u)
    # DFS forest test; a back edge closes the witness cycle
    parent: dict[int, Optional[int]] = {}
    for root in dverts:
        if root in parent:
            continue
        parent[root] = None
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent[v]:
                    continue
                if w in parent:
                    cyc = [v]
                    cur = v
                    while cur != w:
                        cur = parent[cur]
                        cyc.append(cur)
                    return DeltaCycleWitness(level, dmax, tuple(cyc))
                parent[w] = v
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            if not advanced:
                stack.pop()
    return None


def find_delta_cycle(g: Graph, level: int = 0) -> Optional[DeltaCycleWitness]:
    return _find_delta_cycle_raw(g.n, g.edges, level)


def _shortcut_raw(n: int, edges: Sequence[tuple[int, int]]) -> Optional[ShortcutPrediction]:
    degs = degree_list(n, edges)
    dmax, dverts = _delta_vertices(degs)
    if not dverts or dmax < 3:
        return None
    dset = set(dverts)
    inner_deg = {v: 0 for v in dverts}
    near_edges = 0
    for u, v in edges:
        iu, iv = u in dset, v in dset
        if iu and iv:
            inner_deg[u] += 1
            inner_deg[v] += 1
        elif iu and degs[v] == dmax - 1:
            near_edges += 1
        elif iv and degs[u] == dmax - 1:
            near_edges += 1
    if near_edges < 3:
        return None
    l = len(dverts)
    inner = sorted(inner_deg.values())
    if l == 1:
        path = True
    else:
        # a path on l vertices: two endpoints of inner degree 1, rest 2,
        # plus connectivity (edge count l-1 with those degrees forces it)
        path = (inner[:2] == [1, 1] and all(d == 2 for d in inner[2:])
                and sum(inner) == 2 * (l - 1) and _connected_within(dset, edges))
    if not path:
        return None
    return ShortcutPrediction(l, (dmax - 2) * (1 << l) + 1)


def _connected_within(dset: set[int], edges: Sequence[tuple[int, int]]) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in dset}
    for u, v in edges:
        if u in dset and v in dset:
            adj[u].append(v)
            adj[v].append(u)
    start = next(iter(dset))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(dset)


def long_delta_path_shortcut(g: Graph) -> Optional[ShortcutPrediction]:
    """Prediction (l, final_delta) when the max-degree vertices induce a path
    of l vertices and at least three edges leave them to (max-1)-degree
    vertices; L^l then has a max-degree triangle with degree final_delta."""
    return _shortcut_raw(g.n, g.edges)


def _triangle_bound_raw(n: int, edges: Sequence[tuple[int, int]]) -> Optional[int]:
    degs = degree_list(n, edges)
    adj = adjacency_lists(n, edges)
    masks = [0] * n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    best: Optional[int] = None
    for u, v in edges:
        du, dv = degs[u], degs[v]
        cap = min(du, dv)
        if best is not None and cap <= best:
            continue
        low = u if du <= dv else v
        mask_other = masks[v if low == u else u]
        for w in adj[low]:
            if mask_other >> w & 1:
                d = min(cap, degs[w])
                if best is None or d > best:
                    best = d
    return best


def triangle_min_degree_bound(g: Graph) -> Optional[int]:
    """Best d over all triangles of the minimum endpoint degree, or none."""
    return _triangle_bound_raw(g.n, g.edges)


def structural_lower_bounds(g: Graph) -> Optional[DyadicRational]:
    if not is_prolific(g):
        raise NotProlific("structural bounds apply to prolific graphs only")
    degs = g.degrees()
    if max(degs) >= 4:
        return DyadicRational(8)
    adj = adjacency_lists(g.n, g.edges)
    for v, d in enumerate(degs):
        if d >= 3 and sum(1 for w in adj[v] if degs[w] >= 2) >= 3:
            return DyadicRational(8)
    for u, v in g.edges:
        if degs[u] >= 3 and degs[v] >= 3:
            return DyadicRational(8)
    if g.m >= g.n:
        return DyadicRational(6)
    return None


# levels whose edge count exceeds this skip the triangle-bound scan; the
# bound stays sound, only potentially weaker
_TRIANGLE_SCAN_LIMIT = 30_000


def dgc(g: Graph, budget: Optional[IterationBudget] = None,
        recognize_families: bool = True) -> DgcResult:
    """Exact degree growth constant, or a certified lower bound on budget
    exhaustion."""
    if not is_prolific(g):
        raise NotProlific("dgc is defined for prolific graphs only")
    if budget is None:
        budget = IterationBudget()

    if recognize_families:
        tag = recognize(g)
        if tag.paper_class is not None:
            value, mdgpi = _CLASS_VALUES[tag.paper_class]
            return DgcResult(value=value, method=METHOD_FAMILY, mdgpi_upper=mdgpi)

    try:
        structural = structural_lower_bounds(g)
    except NotProlific:  # pragma: no cover - guarded above
        structural = None
    best_bound = structural

    n, edges = g.n, list(g.edges)
    max_level = min(budget.max_iterations, DEFAULT_MAX_ITERATIONS)
    for k in range(max_level + 1):
        witness = _find_delta_cycle_raw(n, edges, k)
        if witness is not None:
            return DgcResult(
                value=DyadicRational.scaled(witness.delta - 2, 4 - k),
                method=METHOD_DELTA_CYCLE,
                level=k,
                mdgpi_upper=k,
                delta_at_level=witness.delta,
            )
        pred = _shortcut_raw(n, edges)
        if pred is not None:
            return DgcResult(
                value=DyadicRational.scaled(pred.final_delta - 2, 4 - (k + pred.iterations)),
                method=METHOD_SHORTCUT,
                level=k,
                path_length=pred.iterations,
                mdgpi_upper=k + pred.iterations,
                delta_at_level=pred.final_delta,
            )
        if len(edges) <= _TRIANGLE_SCAN_LIMIT:
            tri = _triangle_bound_raw(n, edges)
            if tri is not None and tri > 2:
                cand = DyadicRational.scaled(tri - 2, 4 - k)
                if best_bound is None or cand > best_bound:
                    best_bound = cand
        if k == max_level:
            break
        degs = degree_list(n, edges)
        size = line_edge_count(degs)
        if size > budget.max_edges or len(edges) > budget.max_vertices:
            break
        n, edges = len(edges), line_edge_list(n, edges)

    return DgcResult(value=None, method=METHOD_PARTIAL, lower_bound=best_bound)


def delta_sequence(g: Graph, k_max: int,
                   budget: Optional[IterationBudget] = None) -> DeltaSequence:
    """[max degree of L^0 .. L^k_max]; truncated in-band on budget exhaustion."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if budget is None:
        budget = IterationBudget()
    n, edges = g.n, list(g.edges)
    values: list[int] = []
    for k in range(k_max + 1):
        degs = degree_list(n, edges)
        values.append(max(degs, default=0))
        if k == k_max:
            return DeltaSequence(tuple(values), False)
        size = line_edge_count(degs)
        if size > budget.max_edges or len(edges) > budget.max_vertices or k + 1 > budget.max_iterations:
            return DeltaSequence(tuple(values), True)
        n, edges = len(edges), line_edge_list(n, edges)
    return DeltaSequence(tuple(values), False)


@dataclass(frozen=True)
class DeltaProbe:
    """Exact max degree at a deep level, computed on a pruned iterate."""

    level: int
    delta: int
    has_delta_triangle: bool
    certified: bool


def _has_delta_triangle(n: int, edges: Sequence[tuple[int, int]],
                        degs: Sequence[int], dmax: int) -> bool:
    dset = {v for v in range(n) if degs[v] == dmax}
    if len(dset) < 3:
        return False
    inner = [(u, v) for u, v in edges if u in dset and v in dset]
    nb: dict[int, set[int]] = {v: set() for v in dset}
    for u, v in inner:
        nb[u].add(v)
        nb[v].add(u)
    return any(nb[u] & nb[v] for u, v in inner)


def probe_delta(g: Graph, levels: int, gap: int = 2,
                max_edges: int = 500_000) -> DeltaProbe:
    """Max degree of L^levels(g) and whether its max-degree vertices contain
    a triangle, without materializing the full iterates.

    At each level only vertices with degree > Delta - gap are kept, but each
    kept vertex records its degree in the full iterate, so degrees of kept
    descendants stay exact.  A vertex of L^(j+r) expands into 2^r level-j
    vertices with degree sum minus (2^(r+1) - 2); a descendant touching a
    pruned vertex is therefore capped at (Delta_j - 2) * 2^r + 2 - gap.  The
    result is certified when the observed max degree beats every such cap,
    which also forces all max-degree vertices (hence any triangle among
    them) to be kept.
    """
    n, edges = g.n, list(g.edges)
    degs = list(g.degrees())
    caps: list[tuple[int, int]] = []  # (prune level, certified delta there)
    for level in range(levels + 1):
        dmax = max(degs, default=0)
        for j, dj in caps:
            if dmax <= (dj - 2) * (1 << (level - j)) + 2 - gap:
                return DeltaProbe(level, dmax, False, False)
        if level == levels:
            return DeltaProbe(level, dmax,
                              _has_delta_triangle(n, edges, degs, dmax), True)
        keep = [v for v in range(n) if degs[v] > dmax - gap]
        if len(keep) < n:
            caps.append((level, dmax))
            remap = {v: i for i, v in enumerate(keep)}
            edges = [(remap[u], remap[v]) for u, v in edges
                     if u in remap and v in remap]
            degs = [degs[v] for v in keep]
            n = len(keep)
        nd = [degs[u] + degs[v] - 2 for u, v in edges]
        new_edges = line_edge_list(n, edges)
        if len(new_edges) > max_edges:
            return DeltaProbe(level, max(nd, default=0), False, False)
        n, edges, degs = len(nd), new_edges, nd
    raise AssertionError("unreachable")


_CLASS_LABELS = {
    CLASS_G1: (ClassLabel.CLASS_G1, DyadicRational(3)),
    CLASS_G2: (ClassLabel.CLASS_G2, DyadicRational(4)),
    CLASS_G3: (ClassLabel.CLASS_G3, DyadicRational(11, 1)),
    CLASS_G4: (ClassLabel.CLASS_G4, DyadicRational(6)),
}


def classify(g: Graph, budget: Optional[IterationBudget] = None) -> ClassLabel:
    """Landscape class of a connected graph; anything outside the four
    characterized classes has dgc >= 7."""
    if not is_prolific(g):
        return ClassLabel(ClassLabel.NOT_PROLIFIC)
    tag = recognize(g)
    if tag.paper_class is not None:
        label, value = _CLASS_LABELS[tag.paper_class]
        return ClassLabel(label, value=value)
    result = dgc(g, budget=budget, recognize_families=False)
    return ClassLabel(ClassLabel.OTHER, value=result.value, result=result)
