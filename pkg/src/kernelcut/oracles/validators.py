"""Certificate checkers.  These share no code with the searchers."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..graph import Graph


def _has(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v)


def is_cycle(g: Graph, seq: Sequence[int], hamiltonian: bool = False) -> bool:
    if len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    if len(seq) < (2 if g.directed else 3):
        return False
    if hamiltonian and len(seq) != g.n:
        return False
    return all(_has(g, seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def is_path(g: Graph, seq: Sequence[int], s: int | None = None, t: int | None = None,
            hamiltonian: bool = False) -> bool:
    if not seq or len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    if hamiltonian and len(seq) != g.n:
        return False
    if s is not None and seq[0] != s:
        return False
    if t is not None and seq[-1] != t:
        return False
    return all(_has(g, seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def avoids_pairs(seq: Iterable[int], H: Iterable[tuple[int, int]]) -> bool:
    on = set(seq)
    return not any(u in on and v in on for u, v in H)


def is_fp_path(g: Graph, seq: Sequence[int], s, t, H) -> bool:
    return is_path(g, seq, s, t) and avoids_pairs(seq, H)


def are_disjoint_paths(g: Graph, routes: Sequence[Sequence[int]], pairs: Sequence[tuple[int, int]]) -> bool:
    if len(routes) != len(pairs):
        return False
    seen: set[int] = set()
    for route, (s, t) in zip(routes, pairs):
        ok = is_path(g, route, s, t) or is_path(g, route, t, s)
        if not ok or seen & set(route):
            return False
        seen |= set(route)
    return True


def are_disjoint_cycles(g: Graph, cycles: Sequence[Sequence[int]], k: int) -> bool:
    if len(cycles) < k:
        return False
    seen: set[int] = set()
    for c in cycles:
        if not is_cycle(g, c) or seen & set(c):
            return False
        seen |= set(c)
    return True


def validate_bipartite_hampath_arcset(
    D: Graph, A: Sequence[int], B: Sequence[int], C: Iterable[tuple[int, int]]
) -> bool:
    """Five-condition test for an arc set, confirmed by walking the path it spells."""
    C = list(C)
    if len(B) != len(A) + 1 or len(set(C)) != len(C):
        return False
    if any(not D.has_edge(u, v) for u, v in C):
        return False
    succ: dict[int, list[int]] = {}
    head_count: dict[int, int] = {}
    tail_count: dict[int, int] = {}
    for u, v in C:
        succ.setdefault(u, []).append(v)
        tail_count[u] = tail_count.get(u, 0) + 1
        head_count[v] = head_count.get(v, 0) + 1
    # (1) acyclic
    state: dict[int, int] = {}

    def has_cycle(v: int) -> bool:
        stack = [(v, iter(succ.get(v, ())))]
        state[v] = 1
        while stack:
            x, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[x] = 2
                stack.pop()
            elif state.get(nxt) == 1:
                return True
            elif nxt not in state:
                state[nxt] = 1
                stack.append((nxt, iter(succ.get(nxt, ()))))
        return False

    if any(v not in state and has_cycle(v) for v in list(succ)):
        return False
    # (2) each a is head of one arc and tail of one arc
    if any(head_count.get(a, 0) != 1 or tail_count.get(a, 0) != 1 for a in A):
        return False
    # (3) no b is head or tail of two
    if any(head_count.get(b, 0) > 1 or tail_count.get(b, 0) > 1 for b in B):
        return False
    b1, bn = B[0], B[-1]
    # (4), (5) as stated: b1 has no in-arc and one out-arc; bn one in-arc and no out-arc
    if tail_count.get(b1, 0) != 1 or head_count.get(b1, 0) != 0:
        return False
    if head_count.get(bn, 0) != 1 or tail_count.get(bn, 0) != 0:
        return False
    # independent conclusion check: walking from b1 visits everything and ends at bn
    walk, cur = [b1], b1
    while cur in succ:
        cur = succ[cur][0]
        walk.append(cur)
        if len(walk) > D.n + 1:
            return False
    return walk[-1] == bn and sorted(walk) == sorted(list(A) + list(B)) and len(walk) == len(C) + 1
