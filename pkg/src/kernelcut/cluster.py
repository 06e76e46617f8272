"""Kernels for path and cycle problems parameterized by a modulator to cluster graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from .graph import Graph, Instance, KernelResult, StandIn, Witness, cluster_cliques
from .kernel_common import KernelError, reduced, require_witness, restrict, solved

FPT_ELL_CAP = 4


@dataclass
class ClusterDecomposition:
    X: tuple[int, ...]
    cliques: list[list[int]]
    marked: list[list[int]] = field(default_factory=list)

    def unmarked(self, i: int) -> list[int]:
        m = set(self.marked[i])
        return [v for v in self.cliques[i] if v not in m]


def solver_threshold(ell: int) -> int:
    return ell ** (10 * ell)


def _weight(weights: Sequence[int] | None, v: int) -> int:
    return 1 if weights is None else weights[v]


def _clique_order(cliques: list[list[int]], weights) -> list[int]:
    """Indices by (weighted size desc, smallest vertex asc)."""
    return sorted(range(len(cliques)),
                  key=lambda i: (-sum(_weight(weights, v) for v in cliques[i]), cliques[i][0]))


@dataclass
class Rule2Outcome:
    trivially_yes: bool
    kept: list[list[int]]
    deleted: list[list[int]]
    witness_clique: list[int] | None = None


def mark_cliques(g: Graph, k: int, X: Sequence[int], weights=None) -> Rule2Outcome:
    """Keep only the cliques a long cycle could ever need.

    ``weights`` lets a stand-in vertex count for the vertices it replaces.
    """
    Xs = sorted(set(X))
    ell = len(Xs)
    cliques = cluster_cliques(g, Xs)
    size = [sum(_weight(weights, v) for v in c) for c in cliques]
    need = max(k, 3)
    for i, c in enumerate(cliques):
        if size[i] >= need:
            return Rule2Outcome(True, [c], [d for d in cliques if d is not c], c)
    if need - 1 >= 2:
        for i, c in enumerate(cliques):
            if size[i] < need - 1:
                continue
            for x in Xs:
                if len(g.neighbors(x) & set(c)) >= 2:
                    return Rule2Outcome(True, [c], [d for d in cliques if d is not c], c)
    order = _clique_order(cliques, weights)
    nbs = {x: g.neighbors(x) for x in Xs}
    marked: set[int] = set()
    for u, v in combinations(Xs, 2):
        shared = [i for i in order if any(w in nbs[u] and w in nbs[v] for w in cliques[i])]
        marked.update(shared[: ell + 1])
        spread = []
        for i in order:
            pu = [w for w in cliques[i] if w in nbs[u]]
            qv = [w for w in cliques[i] if w in nbs[v]]
            if any(p != q for p in pu for q in qv):
                spread.append(i)
        marked.update(spread[: ell + 1])
    kept = [cliques[i] for i in sorted(marked)]
    deleted = [cliques[i] for i in range(len(cliques)) if i not in marked]
    return Rule2Outcome(False, kept, deleted)


def mark_clique_vertices(g: Graph, k: int, X: Sequence[int], cliques: list[list[int]]) -> ClusterDecomposition:
    Xs = tuple(sorted(set(X)))
    ell = len(Xs)
    quota = 2 * ell + 1
    nbs = {x: g.neighbors(x) for x in Xs}
    marked = []
    for c in cliques:
        m: set[int] = set()
        for x in Xs:
            m.update([w for w in c if w in nbs[x]][:quota])
        for u, v in combinations(Xs, 2):
            m.update([w for w in c if w in nbs[u] and w in nbs[v]][:quota])
        assert len(m) <= ell * quota + math.comb(ell, 2) * quota <= (ell + 1) ** 3
        marked.append(sorted(m))
    return ClusterDecomposition(Xs, [list(c) for c in cliques], marked)


# --- brute-force FPT solver -----------------------------------------------------


def fpt_long_cycle_cluster(g: Graph, k: int, X: Sequence[int], weights=None, cap: int = FPT_ELL_CAP) -> bool:
    """Exact answer by enumerating how a cycle threads through the modulator."""
    if g.directed:
        raise KernelError("cluster kernels are undirected only")
    Xs = sorted(set(X))
    ell = len(Xs)
    if ell > cap:
        raise KernelError(f"ell={ell} exceeds the FPT cap {cap}")
    r2 = mark_cliques(g, k, Xs, weights)
    if r2.trivially_yes:
        return True
    dec = mark_clique_vertices(g, k, Xs, r2.kept)
    cliques = dec.cliques
    csize = [sum(_weight(weights, v) for v in c) for c in cliques]
    nbs = {x: g.neighbors(x) for x in Xs}
    need = max(k, 3)

    # connection options between an ordered pair (a, b) of modulator vertices:
    # ("edge",), ("one", ci, p) or ("two", ci, p, q)
    def options(a: int, b: int) -> list[tuple]:
        out: list[tuple] = []
        if a != b and g.has_edge(a, b):
            out.append(("edge",))
        for ci, mk in enumerate(dec.marked):
            for p in mk:
                if p in nbs[a] and p in nbs[b] and a != b:
                    out.append(("one", ci, p))
            for p in mk:
                if p not in nbs[a]:
                    continue
                for q in mk:
                    if q != p and q in nbs[b]:
                        out.append(("two", ci, p, q))
        return out

    opt_cache: dict[tuple[int, int], list[tuple]] = {}

    def opts(a: int, b: int) -> list[tuple]:
        if (a, b) not in opt_cache:
            opt_cache[(a, b)] = options(a, b)
        return opt_cache[(a, b)]

    def value(t: int, chosen: list[tuple]) -> int:
        total = t
        singles: dict[int, int] = {}
        spanned: set[int] = set()
        for c in chosen:
            if c[0] == "one":
                singles[c[1]] = singles.get(c[1], 0) + _weight(weights, c[2])
                total += _weight(weights, c[2])
            elif c[0] == "two":
                spanned.add(c[1])
        for ci in spanned:
            # an entry/exit pair lets the cycle sweep up the rest of the clique
            total += csize[ci] - singles.get(ci, 0)
        return total

    for t in range(1, ell + 1):
        for seq in permutations(Xs, t):
            if seq[0] != min(seq):
                continue  # rotations describe the same cycle
            hops = [(seq[i], seq[(i + 1) % t]) for i in range(t)]
            chosen: list[tuple] = []
            used: set[int] = set()

            def rec(i: int) -> bool:
                if i == t:
                    if t == 1 and chosen[0][0] != "two":
                        return False
                    if t == 2 and chosen[0][0] == "edge" and chosen[1][0] == "edge":
                        return False
                    return value(t, chosen) >= need
                a, b = hops[i]
                for o in opts(a, b):
                    verts = o[2:] if o[0] != "edge" else ()
                    if any(v in used for v in verts):
                        continue
                    chosen.append(o)
                    used.update(verts)
                    if rec(i + 1):
                        return True
                    used.difference_update(verts)
                    chosen.pop()
                return False

            if rec(0):
                return True
    return False


# --- compression ------------------------------------------------------------------


def _compress(inst: Instance, X: Sequence[int], dec: ClusterDecomposition, plain_stand_ins: bool):
    """Renumber: X, then cliques, each as marked vertices then one stand-in.

    Plain output leaves cliques that already meet the size bound whole.

    Labelled output orders cliques by weight; plain output by smallest vertex,
    the only order a plain merge cannot disturb.
    """
    g = inst.graph
    weights = inst.vertex_weights()
    if plain_stand_ins:
        order = sorted(range(len(dec.cliques)), key=lambda i: dec.cliques[i][0])
    else:
        order = _clique_order(dec.cliques, weights)
    keep: list[int] = list(sorted(X))
    groups: list[tuple[list[int], int | None, int]] = []
    small = (len(dec.X) + 1) ** 3 + 1
    for ci in order:
        mk = dec.marked[ci]
        rest = dec.unmarked(ci)
        if plain_stand_ins and len(dec.cliques[ci]) <= small:
            # already within the per-clique bound: nothing to merge
            mk, rest = sorted(dec.cliques[ci]), []
        label = sum(_weight(weights, v) for v in rest)
        rep = rest[0] if rest else None
        groups.append((mk, rep, label))
    nid: dict[int, int] = {v: i for i, v in enumerate(keep)}
    stand: list[StandIn] = []
    extra: list[tuple[int, int]] = []
    for cid, (mk, rep, label) in enumerate(groups):
        for v in mk:
            nid[v] = len(nid)
        if rep is not None:
            nid[rep] = len(nid)
            if not plain_stand_ins:
                stand.append(StandIn(cid, nid[rep], label))
    edges = set()
    for u, v in g.edges:
        if u in nid and v in nid:
            a, b = nid[u], nid[v]
            edges.add((min(a, b), max(a, b)))
    ng = Graph(len(nid), tuple(sorted(edges)))
    w = Witness.of("cluster-modulator", range(len(X)))
    out = inst.replace(
        graph=ng,
        witness=w,
        s=None if inst.s is None else nid[inst.s],
        t=None if inst.t is None else nid[inst.t],
        stand_ins=tuple(stand),
    )
    return out, groups, nid


def kernelize_long_cycle_cluster(inst: Instance, fpt_cap: int = FPT_ELL_CAP) -> KernelResult:
    if inst.problem != "long-cycle":
        raise KernelError("kernelize_long_cycle_cluster handles long-cycle only")
    require_witness(inst, "cluster-modulator")
    g = inst.graph
    if g.directed:
        raise KernelError("cluster kernels are undirected only")
    X = inst.witness.vertices
    ell = len(X)
    weights = inst.vertex_weights()
    trace: list[dict] = []
    r2 = mark_cliques(g, inst.k, X, weights)
    if r2.trivially_yes:
        return solved(inst, True, trace, "rule 2: a clique alone closes a long cycle")
    trace.append({"rule": "rule2-mark-cliques", "deleted": r2.deleted})
    n_after = len(X) + sum(len(c) for c in r2.kept)
    assert len(r2.kept) <= 2 * (ell + 1) * math.comb(ell, 2)
    if ell <= fpt_cap and n_after > solver_threshold(ell):
        yes = fpt_long_cycle_cluster(g, inst.k, X, weights, fpt_cap)
        return solved(inst, yes, trace, "large instance solved by the clique enumeration")
    dec = mark_clique_vertices(g, inst.k, X, r2.kept)
    out, groups, _ = _compress(inst, X, dec, plain_stand_ins=False)
    trace.append({"rule": "lemma5-mark-and-compress",
                  "labels": [label for _, rep, label in groups if rep is not None]})
    for mk, rep, label in groups:
        assert len(mk) + (rep is not None) <= (ell + 1) ** 3 + 1
        if ell <= fpt_cap and rep is not None:
            assert label.bit_length() <= max(1, math.ceil(10 * ell * math.log2(max(ell, 2)))) + 1
    return reduced(inst, out, trace)


def kernelize_hamiltonian_cluster(inst: Instance) -> KernelResult:
    p = inst.problem
    if p not in ("hamiltonian-cycle", "hamiltonian-path"):
        raise KernelError(f"kernelize_hamiltonian_cluster does not handle {p}")
    require_witness(inst, "cluster-modulator")
    g = inst.graph
    if g.directed:
        raise KernelError("cluster kernels are undirected only")
    if inst.stand_ins:
        raise KernelError("Hamiltonian kernels take plain instances")
    trace: list[dict] = []
    X = list(inst.witness.vertices)
    n = g.n
    if p == "hamiltonian-cycle" and n < 3:
        return solved(inst, False, trace, "fewer than three vertices")
    if p == "hamiltonian-path" and n <= 2:
        from .oracles import decide

        return solved(inst, decide(inst).yes, trace, "at most two vertices")
    if p == "hamiltonian-path":
        # close the path through a hub joined to the allowed endpoints
        hub = n
        starts = [inst.s] if inst.s is not None else range(n)
        ends = [inst.t] if inst.t is not None else range(n)
        hub_edges = sorted({(v, hub) for v in list(starts) + list(ends)})
        work_g = Graph(n + 1, tuple(g.edges) + tuple(hub_edges))
        work_X = X + [hub]
    else:
        work_g, work_X = g, X
    k = work_g.n
    r2 = mark_cliques(work_g, k, work_X)
    if r2.trivially_yes:
        # a clique with all but at most one vertex: one X vertex, two neighbours in it
        return solved(inst, True, trace, "rule 2: the graph is one clique plus at most one vertex")
    if r2.deleted:
        return solved(inst, False, trace, "rule 2 dropped a clique, so some vertex is unreachable")
    dec = mark_clique_vertices(work_g, k, work_X, r2.kept)
    work = Instance("hamiltonian-cycle", work_g, witness=Witness.of("cluster-modulator", work_X))
    out, groups, nid = _compress(work, sorted(work_X), dec, plain_stand_ins=True)
    if p == "hamiltonian-path":
        h = nid[n]
        keep = [v for v in range(out.graph.n) if v != h]
        ng, _ = out.graph.induced(keep)
        inv = {old: new for new, old in enumerate(keep)}
        out = Instance(
            "hamiltonian-path", ng,
            s=None if inst.s is None else inv[nid[inst.s]],
            t=None if inst.t is None else inv[nid[inst.t]],
            witness=Witness.of("cluster-modulator", range(len(X))),
        )
    merged = [len(dec.unmarked(i)) for i in range(len(dec.cliques)) if dec.unmarked(i)]
    trace.append({"rule": "lemma5-mark-single-stand-in", "merged_counts": merged})
    ellw = len(work_X)
    assert out.graph.n <= ellw + len(dec.cliques) * ((ellw + 1) ** 3 + 1)
    return reduced(inst, out, trace)


# --- disjoint paths and cycles ----------------------------------------------------


def _mark_for_routing(g: Graph, X: Sequence[int], cliques: list[list[int]]) -> list[int]:
    """Clique indices worth keeping when at most |X| clique hops are used."""
    Xs = sorted(set(X))
    ell = len(Xs)
    order = sorted(range(len(cliques)), key=lambda i: cliques[i][0])
    nbs = {x: g.neighbors(x) for x in Xs}
    marked: set[int] = set()
    for u, v in combinations(Xs, 2):
        one = [i for i in order if any(w in nbs[u] and w in nbs[v] for w in cliques[i])]
        marked.update(one[: ell + 1])
        two = [i for i in order
               if any(p != q for p in cliques[i] if p in nbs[u] for q in cliques[i] if q in nbs[v])]
        marked.update(two[: ell + 1])
    return sorted(marked)


def kernelize_disjoint_cluster(inst: Instance) -> KernelResult:
    p = inst.problem
    if p not in ("disjoint-paths", "disjoint-cycles"):
        raise KernelError(f"kernelize_disjoint_cluster does not handle {p}")
    require_witness(inst, "cluster-modulator")
    g = inst.graph
    if g.directed:
        raise KernelError("cluster kernels are undirected only")
    trace: list[dict] = []
    X = list(inst.witness.vertices)
    ell = len(X)
    if p == "disjoint-paths":
        xs = set(X)
        where = {v: i for i, c in enumerate(cluster_cliques(g, X)) for v in c}
        local = [pr for pr in inst.pairs if pr[0] not in xs and pr[1] not in xs
                 and where[pr[0]] == where[pr[1]]]
        rest = [pr for pr in inst.pairs if pr not in local]
        if local:
            trace.append({"rule": "same-clique-requests", "removed": [list(pr) for pr in local]})
        if not rest:
            return solved(inst, True, trace, "every request sits inside one clique")
        if len(rest) > ell:
            return solved(inst, False, trace, "more cross-clique requests than modulator vertices")
        gone = {v for pr in local for v in pr}
        X2 = sorted(set(X) | {v for pr in rest for v in pr})
        cliques = cluster_cliques(g, X2)
        cliques = [[v for v in c if v not in gone] for c in cliques]
        cliques = [c for c in cliques if c]
        keep_c = _mark_for_routing(g, X2, cliques)
        kept = [cliques[i] for i in keep_c]
        dec = mark_clique_vertices(g, 0, X2, kept)
        keep = set(X2)
        for mk in dec.marked:
            keep.update(mk)
        trace.append({"rule": "fold-terminals-and-mark", "modulator": X2, "kept": sorted(keep)})
        out, old = restrict(inst, sorted(keep), witness_vertices=X2, k=len(rest), pairs=rest)
        assert len(X2) <= 3 * ell
        return reduced(inst, out, trace)

    k = inst.k
    if k <= 0:
        return solved(inst, True, trace, "no cycles requested")
    cliques = cluster_cliques(g, X)
    dec = mark_clique_vertices(g, k, X, cliques)
    keep = set(X)
    removed_triples = 0
    for ci, c in enumerate(cliques):
        free = dec.unmarked(ci)
        touches_x = bool(dec.marked[ci])
        triples = len(free) // 3
        removed_triples += triples
        left = free[3 * triples:]
        keep.update(dec.marked[ci])
        if touches_x:
            keep.update(left)
    k2 = k - removed_triples
    trace.append({"rule": "lemma5-mark-and-peel-triangles", "triangles": removed_triples})
    if k2 <= 0:
        return solved(inst, True, trace, "enough triangles inside cliques")
    out, _ = restrict(inst, sorted(keep), k=k2)
    return reduced(inst, out, trace)
