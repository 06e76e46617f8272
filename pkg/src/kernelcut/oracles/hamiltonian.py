"""Hamiltonian cycle / path search with forced-edge propagation.

Undirected: every vertex needs exactly two chosen edges.  A vertex whose
remaining candidate edges number exactly two gets both forced; a vertex that
already has two loses all other candidates; an edge joining the two ends of a
partial path is dropped unless it would close a Hamiltonian cycle.
Directed search is the same idea on out-/in-arcs.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..config import Deadline
from ..graph import Graph


class _Contradiction(Exception):
    pass


@dataclass
class HamResult:
    yes: bool
    order: list[int] | None = None


def _cycle_from_edges(n: int, chosen: list[tuple[int, int]]) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in chosen:
        adj[u].append(v)
        adj[v].append(u)
    order, prev, cur = [0], -1, 0
    while len(order) < n:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        order.append(nxt)
        prev, cur = cur, nxt
    return order


class _Undirected:
    def __init__(self, g: Graph, deadline: Deadline):
        self.n = g.n
        self.edges = sorted({(min(e), max(e)) for e in g.edges})
        self.inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u].append(i)
            self.inc[v].append(i)
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.deadline = deadline

    def solve(self) -> list[int] | None:
        n = self.n
        if n < 3:
            return None
        state = {
            "st": [0] * len(self.edges),
            "deg": [0] * n,
            "avail": [len(self.inc[v]) for v in range(n)],
            "other": list(range(n)),
            "size": [1] * n,
        }
        try:
            queue = [v for v in range(n)]
            self._propagate(state, queue)
        except _Contradiction:
            return None
        res = self._search(state)
        if res is None:
            return None
        chosen = [self.edges[i] for i, s in enumerate(res["st"]) if s == 1]
        return _cycle_from_edges(n, chosen)

    def _exclude(self, S, i, queue):
        if S["st"][i] == 1:
            raise _Contradiction
        if S["st"][i] == -1:
            return
        S["st"][i] = -1
        for v in self.edges[i]:
            S["avail"][v] -= 1
            queue.append(v)

    def _include(self, S, i, queue):
        if S["st"][i] == -1:
            raise _Contradiction
        if S["st"][i] == 1:
            return
        u, v = self.edges[i]
        if S["deg"][u] >= 2 or S["deg"][v] >= 2:
            raise _Contradiction
        other = S["other"]
        a, b = other[u], other[v]
        if a == v:
            # closes a cycle
            if S["size"][u] != self.n:
                raise _Contradiction
        S["st"][i] = 1
        S["deg"][u] += 1
        S["deg"][v] += 1
        queue.extend((u, v))
        if a != v:
            size = S["size"][u] + S["size"][v]
            other[a], other[b] = b, a
            S["size"][a] = S["size"][b] = size
            if size < self.n:
                j = self.index.get((min(a, b), max(a, b)))
                if j is not None and S["st"][j] == 0:
                    self._exclude(S, j, queue)

    def _propagate(self, S, queue):
        st, deg, avail = S["st"], S["deg"], S["avail"]
        while queue:
            v = queue.pop()
            if avail[v] < 2:
                raise _Contradiction
            if deg[v] == 2:
                for i in self.inc[v]:
                    if st[i] == 0:
                        self._exclude(S, i, queue)
            elif avail[v] == 2:
                for i in self.inc[v]:
                    if st[i] == 0:
                        self._include(S, i, queue)

    @staticmethod
    def _copy(S):
        return {k: list(v) for k, v in S.items()}

    def _search(self, S):
        self.deadline.check()
        st, deg, avail = S["st"], S["deg"], S["avail"]
        best_v, best_key = -1, None
        for v in range(self.n):
            if deg[v] < 2:
                key = (0 if deg[v] == 1 else 1, avail[v] - deg[v])
                if best_key is None or key < best_key:
                    best_v, best_key = v, key
        if best_v == -1:
            return S
        cands = [i for i in self.inc[best_v] if st[i] == 0]
        if deg[best_v] == 1:
            for i in cands:
                T = self._copy(S)
                try:
                    q: list[int] = []
                    self._include(T, i, q)
                    self._propagate(T, q)
                except _Contradiction:
                    continue
                r = self._search(T)
                if r is not None:
                    return r
            return None
        i = cands[0]
        for take in (True, False):
            T = self._copy(S)
            try:
                q = []
                (self._include if take else self._exclude)(T, i, q)
                self._propagate(T, q)
            except _Contradiction:
                continue
            r = self._search(T)
            if r is not None:
                return r
        return None


class _Directed:
    def __init__(self, g: Graph, deadline: Deadline):
        self.n = g.n
        self.arcs = sorted(set(g.edges))
        self.out: list[list[int]] = [[] for _ in range(self.n)]
        self.inn: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.arcs):
            self.out[u].append(i)
            self.inn[v].append(i)
        self.index = {a: i for i, a in enumerate(self.arcs)}
        self.deadline = deadline

    def solve(self) -> list[int] | None:
        n = self.n
        if n < 2:
            return None
        S = {
            "st": [0] * len(self.arcs),
            "has_out": [0] * n,
            "has_in": [0] * n,
            "avail_out": [len(self.out[v]) for v in range(n)],
            "avail_in": [len(self.inn[v]) for v in range(n)],
            "start": list(range(n)),  # for a path end: its path's first vertex
            "end": list(range(n)),  # for a path start: its path's last vertex
            "size": [1] * n,
        }
        try:
            self._propagate(S, list(range(n)))
        except _Contradiction:
            return None
        res = self._search(S)
        if res is None:
            return None
        succ = {}
        for i, s in enumerate(res["st"]):
            if s == 1:
                succ[self.arcs[i][0]] = self.arcs[i][1]
        order = [0]
        while len(order) < n:
            order.append(succ[order[-1]])
        return order

    def _exclude(self, S, i, queue):
        if S["st"][i] == 1:
            raise _Contradiction
        if S["st"][i] == -1:
            return
        S["st"][i] = -1
        u, v = self.arcs[i]
        S["avail_out"][u] -= 1
        S["avail_in"][v] -= 1
        queue.extend((u, v))

    def _include(self, S, i, queue):
        if S["st"][i] == -1:
            raise _Contradiction
        if S["st"][i] == 1:
            return
        u, v = self.arcs[i]
        if S["has_out"][u] or S["has_in"][v]:
            raise _Contradiction
        first, last = S["start"][u], S["end"][v]
        if first == v:
            if S["size"][u] != self.n:
                raise _Contradiction
        S["st"][i] = 1
        S["has_out"][u] = 1
        S["has_in"][v] = 1
        queue.extend((u, v))
        if first != v:
            size = S["size"][u] + S["size"][v]
            S["end"][first] = last
            S["start"][last] = first
            S["size"][first] = S["size"][last] = size
            if size < self.n:
                j = self.index.get((last, first))
                if j is not None and S["st"][j] == 0:
                    self._exclude(S, j, queue)

    def _propagate(self, S, queue):
        st = S["st"]
        while queue:
            v = queue.pop()
            if S["avail_out"][v] < 1 or S["avail_in"][v] < 1:
                raise _Contradiction
            if S["has_out"][v]:
                for i in self.out[v]:
                    if st[i] == 0:
                        self._exclude(S, i, queue)
            elif S["avail_out"][v] == 1:
                for i in self.out[v]:
                    if st[i] == 0:
                        self._include(S, i, queue)
            if S["has_in"][v]:
                for i in self.inn[v]:
                    if st[i] == 0:
                        self._exclude(S, i, queue)
            elif S["avail_in"][v] == 1:
                for i in self.inn[v]:
                    if st[i] == 0:
                        self._include(S, i, queue)

    def _search(self, S):
        self.deadline.check()
        best, best_key = None, None
        for v in range(self.n):
            if not S["has_out"][v]:
                key = (S["avail_out"][v], 0)
                if best_key is None or key < best_key:
                    best, best_key = ("out", v), key
            if not S["has_in"][v]:
                key = (S["avail_in"][v], 1)
                if best_key is None or key < best_key:
                    best, best_key = ("in", v), key
        if best is None:
            return S
        side, v = best
        cands = [i for i in (self.out[v] if side == "out" else self.inn[v]) if S["st"][i] == 0]
        for i in cands:
            T = {k: list(x) for k, x in S.items()}
            try:
                q: list[int] = []
                self._include(T, i, q)
                self._propagate(T, q)
            except _Contradiction:
                continue
            r = self._search(T)
            if r is not None:
                return r
        return None


def hamiltonian_cycle(g: Graph, deadline: Deadline | None = None) -> HamResult:
    deadline = deadline or Deadline()
    if g.directed:
        order = _Directed(g, deadline).solve()
    else:
        order = _Undirected(g, deadline).solve()
    if order is None:
        return HamResult(False)
    return HamResult(True, order)


def hamiltonian_path(
    g: Graph, s: int | None = None, t: int | None = None, deadline: Deadline | None = None
) -> HamResult:
    """Hamiltonian path, optionally from ``s`` to ``t``; solved as a cycle through a hub."""
    n = g.n
    if n == 0:
        return HamResult(False)
    if n == 1:
        ok = s is None or (s == 0 and t == 0)
        return HamResult(ok, [0] if ok else None)
    if s is not None and s == t:
        return HamResult(False)
    hub = n
    edges = list(g.edges)
    if g.directed:
        if s is None:
            edges += [(hub, v) for v in range(n)] + [(v, hub) for v in range(n)]
        else:
            edges += [(hub, s), (t, hub)]
    else:
        if s is None:
            edges += [(v, hub) for v in range(n)]
        else:
            edges += [(s, hub), (t, hub)]
    edges = sorted(set(edges)) if g.directed else sorted({(min(e), max(e)) for e in edges})
    res = hamiltonian_cycle(Graph(n + 1, tuple(edges), g.directed), deadline)
    if not res.yes:
        return HamResult(False)
    order = res.order
    i = order.index(hub)
    path = order[i + 1:] + order[:i]
    if not g.directed and s is not None and path[0] != s:
        path.reverse()
    return HamResult(True, path)


def hamiltonian(g: Graph, mode: str = "cycle", s: int | None = None, t: int | None = None,
                deadline: Deadline | None = None) -> HamResult:
    if mode == "cycle":
        return hamiltonian_cycle(g, deadline)
    if mode in ("path", "st-path"):
        return hamiltonian_path(g, s, t, deadline)
    raise ValueError(f"unknown mode {mode!r}")
