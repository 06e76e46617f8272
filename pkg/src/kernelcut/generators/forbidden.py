"""Forbidden-pair constructions: multicoloured clique encoding and the ladder composition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from ..graph import Graph, Instance, Witness
from .hamiltonian import CompositionError


@dataclass
class FPComposition:
    instance: Instance
    modulator: tuple[int, ...]
    certificate: list[int] | None
    names: dict[int, str]


def has_multicolored_clique(g: Graph, k: int, coloring: Sequence[int]) -> bool:
    """Brute force: one vertex per colour 1..k, pairwise adjacent."""
    classes = [[v for v in range(g.n) if coloring[v] == c] for c in range(1, k + 1)]
    pick: list[int] = []

    def rec(c: int) -> bool:
        if c == k:
            return True
        for v in classes[c]:
            if all(g.has_edge(u, v) for u in pick):
                pick.append(v)
                if rec(c + 1):
                    return True
                pick.pop()
        return False

    return rec(0)


def gen_thm9(g: Graph, k: int, coloring: Sequence[int]) -> Instance:
    """fp s-t path instance that is YES iff ``g`` has a multicoloured k-clique.

    Vertices ``0..n-1`` are V(g) as an independent set; ``n..n+k`` is the rail
    v_0..v_k, which is also the vertex cover witness.
    """
    if k < 1:
        raise CompositionError("k must be at least 1")
    if len(coloring) != g.n or any(not 1 <= c <= k for c in coloring):
        raise CompositionError("colouring must map every vertex into 1..k")
    n = g.n
    rail = [n + i for i in range(k + 1)]
    edges = []
    for v in range(n):
        c = coloring[v]
        # v_{c-1} and v_c are the two rail vertices touching colour c
        edges += [(v, rail[c - 1]), (v, rail[c])]
    H = [(u, v) for u, v in combinations(range(n), 2)
         if coloring[u] == coloring[v] or not g.has_edge(u, v)]
    return Instance(
        "fp-st-path", Graph(n + k + 1, tuple(sorted(edges))), pairs=tuple(H),
        s=rail[0], t=rail[k], witness=Witness.of("vertex-cover", rail),
    )


def compose_thm11(
    inputs: Sequence[Instance],
    witness: tuple[int, Sequence[int]] | None = None,
    pendant: bool = False,
) -> FPComposition:
    """OR of fp s-t path instances on n vertices (s = 0, t = n-1).

    With ``pendant`` the result asks for a long path anywhere instead: two
    tails of |V| vertices hang off s* and t*, so only s*-t* paths reach k.
    """
    if not inputs:
        raise CompositionError("nothing to compose")
    n = inputs[0].graph.n
    for x in inputs:
        if x.problem != "fp-st-path" or x.graph.n != n or x.s != 0 or x.t != n - 1:
            raise CompositionError("inputs must be fp-st-path on n vertices with s=0, t=n-1")
        if x.graph.directed:
            raise CompositionError("inputs must be undirected")
    r = len(inputs)
    names: dict[int, str] = {}
    vstar = list(range(n))
    for j in range(n):
        names[j] = f"v*{j + 1}"
    w = n
    names[w] = "w"
    zs = [n + 1 + i for i in range(r)]
    for i, zi in enumerate(zs):
        names[zi] = f"z{i + 1}"
    nxt = n + 1 + r
    ladder: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
    for j, h in combinations(range(n), 2):
        tv = list(range(nxt, nxt + 2 * n, 2))
        fv = list(range(nxt + 1, nxt + 2 * n, 2))
        for q in range(n):
            names[tv[q]] = f"t{j + 1},{h + 1}^{q + 1}"
            names[fv[q]] = f"f{j + 1},{h + 1}^{q + 1}"
        ladder[(j, h)] = (tv, fv)
        nxt += 2 * n
    N = nxt
    edges = []
    for zi in zs:
        edges += [(w, zi), (zi, vstar[0])]
    for (j, h), (tv, fv) in ladder.items():
        for q in range(n - 1):
            edges += [(tv[q], tv[q + 1]), (tv[q], fv[q + 1]), (fv[q], fv[q + 1]), (fv[q], tv[q + 1])]
        edges += [(vstar[j], tv[0]), (vstar[j], fv[0]), (vstar[h], tv[n - 1]), (vstar[h], fv[n - 1])]
    H = set()
    for i, x in enumerate(inputs):
        Hi = {frozenset(p) for p in x.pairs}
        for (j, h), (tv, fv) in ladder.items():
            if not x.graph.has_edge(j, h):
                H |= {(zs[i], v) for v in tv + fv}
                continue
            for q in range(n):
                if frozenset((j, q)) in Hi or frozenset((h, q)) in Hi:
                    H.add((zs[i], fv[q]))
                else:
                    H.add((zs[i], tv[q]))
    for (j, h), (tv, fv) in ladder.items():
        for q in range(n):
            H.add((tv[q], vstar[q]))
    X = [v for v in range(N) if v not in set(zs)]
    assert len(X) == 1 + n + 2 * n * comb(n, 2)
    H = sorted((min(a, b), max(a, b)) for a, b in H)

    cert = None
    if witness is not None:
        istar, order = witness
        zi = zs[istar]
        banned = {b for a, b in H if a == zi} | {a for a, b in H if b == zi}
        cert = [w, zi, vstar[order[0]]]
        for a, b in zip(order, order[1:]):
            j, h = min(a, b), max(a, b)
            tv, fv = ladder[(j, h)]
            spokes = [tv[q] if tv[q] not in banned else fv[q] for q in range(n)]
            cert += (spokes if a < b else spokes[::-1]) + [vstar[b]]

    s_star, t_star = w, vstar[n - 1]
    if not pendant:
        inst = Instance("fp-st-path", Graph(N, tuple(sorted(edges))), pairs=tuple(H),
                        s=s_star, t=t_star, witness=Witness.of("vc-of-H", X))
        return FPComposition(inst, tuple(X), cert, names)
    L = N
    tail_s = list(range(N, N + L))
    tail_t = list(range(N + L, N + 2 * L))
    for tail, end in ((tail_s, s_star), (tail_t, t_star)):
        edges.append((end, tail[0]))
        edges += list(zip(tail, tail[1:]))
    X2 = X + tail_s + tail_t
    inst = Instance("fp-longest-path", Graph(N + 2 * L, tuple(sorted((min(a, b), max(a, b)) for a, b in edges))),
                    k=2 * L + 2, pairs=tuple(H), witness=Witness.of("vc-of-H", X2))
    if cert is not None:
        cert = tail_s[::-1] + cert + tail_t
    return FPComposition(inst, tuple(X2), cert, names)
