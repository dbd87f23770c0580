"""Brute-force graph isomorphism for small graphs (<= 12 vertices).

Backtracking on vertex maps with degree pruning.  Family recognizers use
this only for the few fixed small graphs; anything larger goes through
structural recognizers instead.
"""

from __future__ import annotations

from .graph import Graph

MAX_ISO_VERTICES = 12


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if a.n > MAX_ISO_VERTICES:
        raise ValueError(f"isomorphism check limited to {MAX_ISO_VERTICES} vertices")
    da, db = a.degrees(), b.degrees()
    if sorted(da) != sorted(db):
        return False
    n = a.n
    if n == 0:
        return True
    amask = [0] * n
    for u, v in a.edges:
        amask[u] |= 1 << v
        amask[v] |= 1 << u
    bmask = [0] * n
    for u, v in b.edges:
        bmask[u] |= 1 << v
        bmask[v] |= 1 << u

    # map a-vertices in decreasing-degree order to prune early
    order = sorted(range(n), key=lambda v: -da[v])
    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        u = order[idx]
        for w in range(n):
            if used[w] or db[w] != da[u]:
                continue
            ok = True
            for prev in order[:idx]:
                has_a = amask[u] >> prev & 1
                has_b = bmask[w] >> mapping[prev] & 1
                if has_a != has_b:
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                mapping[u] = -1
                used[w] = False
        return False

    return extend(0)
