"""Exact max leaf number via minimum connected dominating sets.

For a connected graph on n >= 3 vertices the maximum number of leaves of a
spanning tree equals n minus the minimum size of a connected dominating set.
Disconnected graphs sum over components; a single vertex counts 0 and an
edge counts 2.
"""

from __future__ import annotations

from itertools import combinations

from ..config import ResourceLimitExceeded
from ..graph import Graph

MAXLEAF_COMPONENT_CAP = 18


def _connected(sub: int, adj: list[int]) -> bool:
    start = sub & -sub
    seen = start
    frontier = start
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = adj[v] & sub & ~seen
        seen |= new
        frontier |= new
    return seen == sub


def _component_max_leaf(verts: list[int], adj_full: list[int]) -> int:
    n = len(verts)
    if n == 1:
        return 0
    if n == 2:
        return 2
    if n > MAXLEAF_COMPONENT_CAP:
        raise ResourceLimitExceeded(f"component of {n} vertices exceeds the max-leaf cap")
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for v in verts:
        m = 0
        bits = adj_full[v]
        while bits:
            w = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            m |= 1 << idx[w]
        adj[idx[v]] = m
    closed = [adj[i] | 1 << i for i in range(n)]
    full = (1 << n) - 1
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            sub = 0
            dom = 0
            for i in combo:
                sub |= 1 << i
                dom |= closed[i]
            if dom == full and _connected(sub, adj):
                return n - size
    return 0


def max_leaf_number(g: Graph) -> int:
    u = g.underlying()
    adj = [0] * u.n
    for a, b in u.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return sum(_component_max_leaf(c, adj) for c in u.components())


def max_leaf_by_spanning_trees(g: Graph) -> int:
    """Reference: enumerate edge subsets of size n-1 per component.  Tiny graphs only."""
    u = g.underlying()
    total = 0
    for comp in u.components():
        if len(comp) == 1:
            continue
        sub, _ = u.induced(comp)
        best = 0
        for es in combinations(sub.edges, sub.n - 1):
            t = Graph(sub.n, es)
            if len(t.components()) == 1:
                best = max(best, sum(1 for v in range(sub.n) if t.degree(v) == 1))
        total += best
    return total
