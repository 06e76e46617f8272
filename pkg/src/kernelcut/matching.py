"""Maximum bipartite matching and the restriction property used by marking rules."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

THEOREM2_RIGHT_CAP = 16


@dataclass(frozen=True)
class BipartiteGraph:
    n_left: int
    n_right: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted({(int(a), int(b)) for a, b in self.edges}))
        if len(edges) != len(self.edges):
            raise ValueError("duplicate bipartite edge")
        for a, b in edges:
            if not (0 <= a < self.n_left and 0 <= b < self.n_right):
                raise ValueError(f"bipartite edge ({a}, {b}) out of range")
        object.__setattr__(self, "edges", edges)

    def left_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_left)]
        for a, b in self.edges:
            adj[a].append(b)
        return adj

    def restrict_left(self, keep: Iterable[int]) -> BipartiteGraph:
        """Same index space, but only edges at the kept left vertices."""
        ks = set(keep)
        return BipartiteGraph(self.n_left, self.n_right, tuple(e for e in self.edges if e[0] in ks))


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]

    @property
    def matched_left(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def matched_right(self) -> frozenset[int]:
        return frozenset(b for _, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


_INF = float("inf")


def _hopcroft_karp(adj: list[list[int]], n_right: int, order: list[int]) -> list[int]:
    """Returns match_left (right index or -1).  Deterministic given ``order``."""
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0.0] * n_left
    while True:
        q: deque[int] = deque()
        for u in order:
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = _INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if not found:
            return match_l
        it = [0] * n_left

        def augment(root: int) -> bool:
            # iterative DFS along the layered graph
            stack = [root]
            path: list[tuple[int, int]] = []
            while stack:
                u = stack[-1]
                advanced = False
                while it[u] < len(adj[u]):
                    v = adj[u][it[u]]
                    it[u] += 1
                    w = match_r[v]
                    if w == -1:
                        path.append((u, v))
                        for a, b in path:
                            match_l[a] = b
                            match_r[b] = a
                        return True
                    if dist[w] == dist[u] + 1:
                        path.append((u, v))
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = _INF
                    stack.pop()
                    if path:
                        path.pop()
            return False

        for u in order:
            if match_l[u] == -1:
                augment(u)


def maximum_matching(h: BipartiteGraph, left_order: Iterable[int] | None = None) -> Matching:
    """Maximum matching; left vertices in ascending index, neighbours ascending."""
    adj = h.left_adj()
    order = list(range(h.n_left)) if left_order is None else list(left_order)
    match_l = _hopcroft_karp(adj, h.n_right, order)
    return Matching(frozenset((a, b) for a, b in enumerate(match_l) if b != -1))


def coverable(h: BipartiteGraph, demand: Iterable[int]) -> bool:
    """Is there a matching that saturates every right vertex in ``demand``?"""
    dem = sorted(set(demand))
    if not dem:
        return True
    pos = {b: i for i, b in enumerate(dem)}
    # match from the demand side so the size test is direct
    adj: list[list[int]] = [[] for _ in dem]
    for a, b in h.edges:
        if b in pos:
            adj[pos[b]].append(a)
    match = _hopcroft_karp(adj, h.n_left, list(range(len(dem))))
    return all(x != -1 for x in match)


def _augment_from(y: int, radj: list[list[int]], match_r: list[int], match_l: dict[int, int]) -> bool:
    """Kuhn-style augmenting search starting at right vertex ``y``."""
    seen: set[int] = set()

    def go(b: int) -> bool:
        for a in radj[b]:
            if a in seen:
                continue
            seen.add(a)
            if a not in match_l or go(match_l[a]):
                match_l[a] = b
                match_r[b] = a
                return True
        return False

    return go(y)


def theorem2_holds(h: BipartiteGraph, cap: int = THEOREM2_RIGHT_CAP) -> bool:
    """Exhaustively check that matched left vertices suffice for every coverable demand.

    Coverable demand sets are closed under taking subsets, so they are walked
    depth-first, extending a matching by one augmenting path per step in both
    the full graph and the graph restricted to the matched left side.
    """
    if h.n_right > cap:
        raise ValueError(f"right side {h.n_right} exceeds exhaustive cap {cap}")
    xm = maximum_matching(h).matched_left
    radj_full: list[list[int]] = [[] for _ in range(h.n_right)]
    radj_sub: list[list[int]] = [[] for _ in range(h.n_right)]
    for a, b in h.edges:
        radj_full[b].append(a)
        if a in xm:
            radj_sub[b].append(a)

    def rec(start: int, full: tuple, sub: tuple) -> bool:
        for y in range(start, h.n_right):
            fr, fl = list(full[0]), dict(full[1])
            if not _augment_from(y, radj_full, fr, fl):
                continue
            sr, sl = list(sub[0]), dict(sub[1])
            if not _augment_from(y, radj_sub, sr, sl):
                return False
            if not rec(y + 1, (fr, fl), (sr, sl)):
                return False
        return True

    empty = ([-1] * h.n_right, {})
    return rec(0, empty, empty)


def theorem2_holds_naive(h: BipartiteGraph) -> bool:
    """Reference version: every subset of the right side, matching recomputed each time."""
    sub = h.restrict_left(maximum_matching(h).matched_left)
    for size in range(h.n_right + 1):
        for demand in combinations(range(h.n_right), size):
            if coverable(h, demand) and not coverable(sub, demand):
                return False
    return True


def brute_force_matching_size(h: BipartiteGraph) -> int:
    """Exponential reference used by tests."""
    edges = list(h.edges)
    best = 0

    def rec(i: int, used_l: int, used_r: int, size: int) -> None:
        nonlocal best
        if size + (len(edges) - i) <= best:
            return
        if i == len(edges):
            best = max(best, size)
            return
        a, b = edges[i]
        if not (used_l >> a) & 1 and not (used_r >> b) & 1:
            rec(i + 1, used_l | 1 << a, used_r | 1 << b, size + 1)
        rec(i + 1, used_l, used_r, size)

    rec(0, 0, 0, 0)
    return best
