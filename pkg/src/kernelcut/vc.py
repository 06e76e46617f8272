"""Kernels for path and cycle problems parameterized by a vertex cover."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Sequence

import networkx as nx

from .graph import Graph, Instance, KernelResult, Witness
from .kernel_common import KernelError, reduced, require_witness, restrict, solved
from .matching import BipartiteGraph, maximum_matching

MODES = ("unordered", "ordered", "duplicated")


@dataclass(frozen=True)
class ConnectionGraph:
    bipartite: BipartiteGraph
    left: tuple[int, ...]  # graph vertex of each left index
    pairs: tuple[tuple[int, int], ...]  # X pair of each right index
    mode: str


def build_connection_graph(g: Graph, X: Sequence[int], mode: str) -> ConnectionGraph:
    if mode not in MODES:
        raise KernelError(f"unknown connection mode {mode!r}")
    Xs = sorted(set(X))
    xset = set(Xs)
    for u, v in g.edges:
        if u not in xset and v not in xset:
            raise KernelError(f"X is not a vertex cover: edge ({u}, {v})")
    if mode == "ordered":
        pairs = list(permutations(Xs, 2))
    else:
        pairs = list(combinations(Xs, 2))
    copies = 2 if mode == "duplicated" else 1
    right = [p for p in pairs for _ in range(copies)]
    left = tuple(v for v in range(g.n) if v not in xset)
    edges = []
    for li, v in enumerate(left):
        if mode == "ordered":
            ins, outs = g.in_neighbors(v), g.out_neighbors(v)
            for ri, (a, b) in enumerate(right):
                if a in ins and b in outs:
                    edges.append((li, ri))
        else:
            nb = g.neighbors(v)
            for ri, (a, b) in enumerate(right):
                if a in nb and b in nb:
                    edges.append((li, ri))
    return ConnectionGraph(BipartiteGraph(len(left), len(right), tuple(edges)), left, tuple(right), mode)


def rule1_keep(g: Graph, X: Sequence[int], mode: str) -> tuple[list[int], list[int]]:
    """Vertices kept and removed by the matching rule."""
    cg = build_connection_graph(g, X, mode)
    matched = maximum_matching(cg.bipartite).matched_left
    kept_I = {cg.left[i] for i in matched}
    removed = [v for v in cg.left if v not in kept_I]
    keep = sorted(set(X) | kept_I)
    return keep, removed


# --- exact answers for tiny targets --------------------------------------


def _has_cycle_at_least(g: Graph, k: int) -> bool:
    """Cycle with at least k vertices, k <= 4.  Polynomial for fixed k."""
    if not g.directed:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges)
        # every block with >= 3 vertices is 2-connected and has a cycle through
        # all... at least min(|block|, 4) vertices
        need = max(k, 3)
        return any(len(b) >= need for b in nx.biconnected_components(nxg))
    nxg = nx.DiGraph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    need = max(k, 2)
    for scc in nx.strongly_connected_components(nxg):
        if len(scc) < need:
            continue
        sub = nxg.subgraph(scc)
        # a cycle with >= need vertices starts with a simple path on `need`
        # vertices whose last vertex can get back to the first avoiding the middle
        for path in _simple_paths_of_order(sub, need):
            mid = set(path[1:-1])
            rest = sub.subgraph(set(scc) - mid)
            if nx.has_path(rest, path[-1], path[0]):
                return True
    return False


def _simple_paths_of_order(g: nx.DiGraph, order: int):
    for s in sorted(g.nodes):
        stack = [[s]]
        while stack:
            p = stack.pop()
            if len(p) == order:
                yield p
                continue
            for w in sorted(g.successors(p[-1])):
                if w not in p:
                    stack.append(p + [w])


def _has_path_at_least(g: Graph, k: int) -> bool:
    """Path with at least k vertices, k <= 3."""
    if k <= 1:
        return g.n >= 1
    if k == 2:
        return g.m >= 1
    for v in range(g.n):
        ins, outs = g.in_neighbors(v), g.out_neighbors(v)
        if g.directed:
            if any(u != w for u in ins for w in outs):
                return True
        elif len(outs) >= 2:
            return True
    return False


# --- kernels ----------------------------------------------------------------


def _long_cycle(inst: Instance, mode: str, trace: list) -> KernelResult:
    g, X, k = inst.graph, inst.witness.vertices, inst.k
    if k <= 4 and mode != "duplicated":
        return solved(inst, _has_cycle_at_least(g, k), trace, "target at most 4 solved directly")
    keep, removed = rule1_keep(g, X, mode)
    out, old = restrict(inst, keep)
    trace.append({"rule": "rule1-matching", "mode": mode, "removed": removed, "kept": old})
    ell = len(X)
    if mode == "ordered":
        bound = ell + ell * (ell - 1)
    elif mode == "duplicated":
        bound = ell + 2 * comb(ell, 2)
    else:
        bound = ell + comb(ell, 2)
    assert out.graph.n <= bound, (out.graph.n, bound)
    return reduced(inst, out, trace)


def _long_path(inst: Instance, trace: list) -> KernelResult:
    g, X, k = inst.graph, inst.witness.vertices, inst.k
    if k + 1 <= 4:
        return solved(inst, _has_path_at_least(g, k), trace, "target at most 3 solved directly")
    hub = g.n
    extra = [(v, hub) for v in range(g.n)]
    if g.directed:
        extra += [(hub, v) for v in range(g.n)]
    gh = Graph(g.n + 1, tuple(g.edges) + tuple(extra), g.directed)
    mode = "ordered" if g.directed else "unordered"
    keep, removed = rule1_keep(gh, list(X) + [hub], mode)
    keep = [v for v in keep if v != hub]
    out, old = restrict(inst, keep)
    trace.append({"rule": "rule1-matching-universal-vertex", "mode": mode, "removed": removed, "kept": old})
    ell = len(X) + 1
    bound = ell + (ell * (ell - 1) if g.directed else comb(ell, 2)) - 1
    assert out.graph.n <= bound
    return reduced(inst, out, trace)


def _disjoint_paths(inst: Instance, trace: list) -> KernelResult:
    g, X = inst.graph, inst.witness.vertices
    if g.directed:
        raise KernelError("disjoint-paths kernel is undirected only")
    if len(inst.pairs) > len(X):
        return solved(inst, False, trace, "more requests than cover vertices")
    terms = [v for p in inst.pairs for v in p]
    X2 = sorted(set(X) | set(terms))
    owner = {v: i for i, p in enumerate(inst.pairs) for v in p}
    added = [
        (u, v) for u, v in combinations(sorted(terms), 2)
        if owner[u] != owner[v] and not g.has_edge(u, v)
    ]
    if added:
        trace.append({"rule": "join-foreign-terminals", "added_edges": [list(e) for e in added]})
    g2 = Graph(g.n, tuple(g.edges) + tuple(added))
    keep, removed = rule1_keep(g2, X2, "unordered")
    mid = inst.replace(graph=g2, witness=Witness.of("vertex-cover", X2))
    out, old = restrict(mid, keep)
    trace.append({"rule": "rule1-matching", "mode": "unordered", "removed": removed, "kept": old})
    ell = len(X2)
    assert ell <= 3 * len(X)
    assert out.graph.n <= ell + comb(ell, 2)
    return reduced(inst, out, trace)


def kernelize_vc(inst: Instance) -> KernelResult:
    require_witness(inst, "vertex-cover")
    trace: list[dict] = []
    p = inst.problem
    if p == "long-cycle":
        return _long_cycle(inst, "ordered" if inst.directed else "unordered", trace)
    if p == "long-path":
        return _long_path(inst, trace)
    if p == "disjoint-paths":
        return _disjoint_paths(inst, trace)
    if p == "disjoint-cycles":
        if inst.directed:
            raise KernelError("disjoint-cycles kernel is undirected only")
        if inst.k <= 0:
            return solved(inst, True, trace, "no cycles requested")
        return _long_cycle(inst, "duplicated", trace)
    if p in ("hamiltonian-cycle", "hamiltonian-path"):
        raise KernelError("Hamiltonian problems use hamiltonian_vc_bound")
    raise KernelError(f"no vertex-cover kernel for {p}")


def hamiltonian_vc_bound(inst: Instance) -> KernelResult:
    if inst.problem not in ("hamiltonian-cycle", "hamiltonian-path"):
        raise KernelError(f"hamiltonian_vc_bound does not handle {inst.problem}")
    require_witness(inst, "vertex-cover")
    ell = inst.witness.ell
    if inst.graph.n > 2 * ell + 1:
        return solved(inst, False, [], "more than 2*ell+1 vertices")
    return reduced(inst, inst, [{"rule": "hamiltonian-vc-bound", "unchanged": True}])
