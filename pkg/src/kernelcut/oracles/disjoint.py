"""Vertex-disjoint paths and cycles by backtracking over chordless routes.

Any path or cycle can be shortcut to a chordless one on a subset of its
vertices, and shortcutting only frees vertices, so the search only ever
enumerates induced paths and induced cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..config import Deadline, ResourceLimitExceeded
from ..graph import Graph

DISJOINT_CAP = 40


@dataclass
class DisjointResult:
    yes: bool
    routes: list[list[int]] | None = None


def _induced_paths(adj: list[int], s: int, t: int, allowed: int, deadline: Deadline) -> Iterator[list[int]]:
    """Chordless s-t paths inside ``allowed`` (bitmask, must contain s and t)."""
    if adj[s] >> t & 1:
        yield [s, t]
        return
    path = [s]

    def rec(v: int, used: int, blocked: int):
        deadline.check()
        # blocked: vertices adjacent to an earlier path vertex (other than v)
        cand = adj[v] & allowed & ~used & ~blocked
        if cand >> t & 1:
            path.append(t)
            yield list(path)
            path.pop()
            return
        c = cand
        while c:
            w = (c & -c).bit_length() - 1
            c &= c - 1
            path.append(w)
            yield from rec(w, used | 1 << w, blocked | adj[v])
            path.pop()

    yield from rec(s, 1 << s, 0)


def _induced_cycles_through(adj: list[int], v: int, allowed: int, deadline: Deadline) -> Iterator[list[int]]:
    """Chordless cycles through ``v`` inside ``allowed``.

    Each is v followed by a chordless a-b path avoiding the rest of N(v).
    """
    nbrs = adj[v] & allowed
    items = [u for u in range(len(adj)) if nbrs >> u & 1]
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            inner = allowed & ~(1 << v) & ~(nbrs & ~(1 << a | 1 << b))
            for p in _induced_paths(adj, a, b, inner, deadline):
                yield [v] + p


def _masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def disjoint_paths(g: Graph, pairs: Sequence[tuple[int, int]], deadline: Deadline | None = None) -> DisjointResult:
    if g.directed:
        raise ValueError("disjoint paths oracle is undirected only")
    if g.n > DISJOINT_CAP:
        raise ResourceLimitExceeded(f"{g.n} vertices exceed the disjoint-paths cap")
    deadline = deadline or Deadline()
    adj = _masks(g)
    terms = 0
    for s, t in pairs:
        terms |= 1 << s | 1 << t
    full = (1 << g.n) - 1
    # route tight pairs (adjacent terminals) first, then in given order
    order = sorted(range(len(pairs)), key=lambda i: (not adj[pairs[i][0]] >> pairs[i][1] & 1, i))

    def rec(idx: int, free: int, routes: list) -> list | None:
        if idx == len(order):
            return routes
        s, t = pairs[order[idx]]
        allowed = free | 1 << s | 1 << t
        for p in _induced_paths(adj, s, t, allowed, deadline):
            used = 0
            for x in p:
                used |= 1 << x
            r = rec(idx + 1, free & ~used, routes + [(order[idx], p)])
            if r is not None:
                return r
        return None

    res = rec(0, full & ~terms, [])
    if res is None:
        return DisjointResult(False)
    return DisjointResult(True, [p for _, p in sorted(res)])


def disjoint_cycles(g: Graph, k: int, deadline: Deadline | None = None) -> DisjointResult:
    if g.directed:
        raise ValueError("disjoint cycles oracle is undirected only")
    if g.n > DISJOINT_CAP:
        raise ResourceLimitExceeded(f"{g.n} vertices exceed the disjoint-cycles cap")
    deadline = deadline or Deadline()
    adj = _masks(g)
    if k <= 0:
        return DisjointResult(True, [])

    def prune(alive: int) -> int:
        changed = True
        while changed:
            changed = False
            a = alive
            while a:
                v = (a & -a).bit_length() - 1
                a &= a - 1
                if (adj[v] & alive).bit_count() < 2:
                    alive &= ~(1 << v)
                    changed = True
        return alive

    def rec(alive: int, need: int) -> list | None:
        if need == 0:
            return []
        alive = prune(alive)
        if alive.bit_count() < 3 * need:
            return None
        v = (alive & -alive).bit_length() - 1
        for cyc in _induced_cycles_through(adj, v, alive, deadline):
            used = 0
            for x in cyc:
                used |= 1 << x
            r = rec(alive & ~used, need - 1)
            if r is not None:
                return [cyc] + r
        return rec(alive & ~(1 << v), need)

    res = rec((1 << g.n) - 1, k)
    return DisjointResult(res is not None, res)
