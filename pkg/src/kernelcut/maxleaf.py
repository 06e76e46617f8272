"""Kernels and solvers under a max-leaf-number promise.

A graph whose max leaf number is at most ell has few branch vertices, so
everything else lives on long threads of degree-2 vertices.  The long-cycle
pipeline folds those threads into labelled edges; the other problems shrink
them to a constant number of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .config import ResourceLimitExceeded
from .graph import Graph, Instance, KernelResult, LabeledMultigraph, Status, Witness
from .kernel_common import KernelError, reduced, require_witness, restrict, size_stats, solved

HELD_KARP_CAP = 24


def solver_threshold(ell: int) -> int:
    """Expanded vertex count above which the long-cycle kernel just solves the instance."""
    return 2 ** (4 * ell) * (4 * ell) ** 2


# --- contraction ------------------------------------------------------------


@dataclass
class Contraction:
    graph: LabeledMultigraph
    vertices: list[int]  # old id of each surviving vertex
    two_cycle_best: int = 0
    cycles: list[int] = field(default_factory=list)  # lengths of cycles folded away
    max_parallel: int = 0
    violated: bool = False


def _labelled_edges(g: Graph | LabeledMultigraph) -> tuple[int, list[tuple[int, int, int]]]:
    if isinstance(g, LabeledMultigraph):
        if g.directed:
            raise KernelError("max-leaf pipeline is undirected only")
        return g.n, [(u, v, lab) for (u, v), lab in zip(g.edges, g.labels)]
    if g.directed:
        raise KernelError("max-leaf pipeline is undirected only")
    return g.n, [(u, v, 0) for u, v in g.edges]


def contract_paths(
    g: Graph | LabeledMultigraph, keep_parallel: str = "longest-only", ell: int | None = None
) -> Contraction:
    """Fold degree-2 threads into labelled edges until every vertex has degree >= 3.

    Vertices of degree <= 1 are dropped (they lie on no cycle).  A thread that
    closes on itself becomes a recorded cycle.  In ``longest-only`` mode all
    but the heaviest of several parallel edges are discarded after recording
    the best cycle through two of them; in ``up-to-ell`` mode parallels are kept
    and more than ``ell`` of them flags the result as violated.
    """
    if keep_parallel not in ("longest-only", "up-to-ell"):
        raise ValueError(f"unknown parallel policy {keep_parallel!r}")
    if keep_parallel == "up-to-ell" and ell is None:
        raise ValueError("up-to-ell mode needs ell")
    n, elist = _labelled_edges(g)
    edges: dict[int, tuple[int, int, int]] = {}
    inc: list[set[int]] = [set() for _ in range(n)]
    alive = [True] * n
    next_id = 0
    cycles: list[int] = []
    two_best = 0

    def add(u: int, v: int, lab: int) -> None:
        nonlocal next_id
        if u == v:
            cycles.append(lab + 1)
            work.append(u)
            return
        edges[next_id] = (u, v, lab)
        inc[u].add(next_id)
        inc[v].add(next_id)
        next_id += 1

    def drop(eid: int) -> None:
        u, v, _ = edges.pop(eid)
        inc[u].discard(eid)
        inc[v].discard(eid)
        work.extend((u, v))

    work: list[int] = []
    for u, v, lab in elist:
        add(u, v, lab)
    work = list(range(n - 1, -1, -1))

    def prune_parallels(u: int) -> None:
        nonlocal two_best
        by_nb: dict[int, list[int]] = {}
        for eid in inc[u]:
            a, b, _ = edges[eid]
            by_nb.setdefault(b if a == u else a, []).append(eid)
        for nb, eids in by_nb.items():
            if len(eids) < 2:
                continue
            labs = sorted((edges[e][2] for e in eids), reverse=True)
            two_best = max(two_best, 2 + labs[0] + labs[1])
            if keep_parallel == "longest-only":
                keep = max(eids, key=lambda e: (edges[e][2], -e))
                for e in eids:
                    if e != keep:
                        drop(e)

    while work:
        u = work.pop()
        if not alive[u]:
            continue
        prune_parallels(u)
        deg = len(inc[u])
        if deg <= 1:
            for eid in list(inc[u]):
                drop(eid)
            alive[u] = False
        elif deg == 2:
            e1, e2 = sorted(inc[u])
            a1, b1, l1 = edges[e1]
            a2, b2, l2 = edges[e2]
            x = b1 if a1 == u else a1
            y = b2 if a2 == u else a2
            drop(e1)
            drop(e2)
            alive[u] = False
            add(x, y, l1 + l2 + 1)
            work.extend((x, y))
    keep = [v for v in range(n) if alive[v]]
    nid = {v: i for i, v in enumerate(keep)}
    out = sorted(
        (min(nid[u], nid[v]), max(nid[u], nid[v]), lab) for u, v, lab in edges.values()
    )
    mult: dict[tuple[int, int], int] = {}
    for u, v, _ in out:
        mult[(u, v)] = mult.get((u, v), 0) + 1
    max_par = max(mult.values(), default=0)
    base = Graph(len(keep), tuple((u, v) for u, v, _ in out), False, True)
    lg = LabeledMultigraph(base, tuple(lab for _, _, lab in out))
    violated = keep_parallel == "up-to-ell" and max_par > ell
    return Contraction(lg, keep, two_best, sorted(cycles, reverse=True), max_par, violated)


# --- Held-Karp --------------------------------------------------------------


def held_karp_longest_cycle(m: LabeledMultigraph, two_cycle_best: int | None = None) -> int:
    """Longest cycle (in vertices of the expansion) of a labelled multigraph.

    Cycles through two vertices come from parallel edges and are scanned
    directly; the subset DP only handles cycles on three or more vertices.
    """
    n = m.n
    if n > HELD_KARP_CAP:
        raise ResourceLimitExceeded(f"{n} vertices exceed the Held-Karp cap {HELD_KARP_CAP}")
    best = two_cycle_best or 0
    top: dict[tuple[int, int], list[int]] = {}
    for (u, v), lab in zip(m.edges, m.labels):
        key = (min(u, v), max(u, v))
        top.setdefault(key, []).append(lab)
    W = np.full((n, n), -1, dtype=np.int64)
    for (u, v), labs in top.items():
        labs.sort(reverse=True)
        if len(labs) >= 2:
            best = max(best, 2 + labs[0] + labs[1])
        W[u, v] = W[v, u] = labs[0] + 1
    NEG = np.int64(-(1 << 40))
    Wm = np.where(W >= 0, W, NEG)
    for s in range(n - 2):
        rest = list(range(s + 1, n))
        r = len(rest)
        Ws = Wm[np.ix_(rest, rest)]
        start = Wm[s, rest]
        back = Wm[rest, s]
        size = 1 << r
        dp = np.full((size, r), NEG, dtype=np.int64)
        for j in range(r):
            dp[1 << j, j] = start[j]
        masks = np.arange(size)
        pop = np.zeros(size, dtype=np.int64)
        for j in range(r):
            pop += (masks >> j) & 1
        for c in range(1, r):
            layer = masks[pop == c]
            sub = dp[layer]
            if (sub.max(axis=1) < 0).all():
                continue
            for w in range(r):
                rows = layer[((layer >> w) & 1) == 0]
                if rows.size == 0:
                    continue
                val = (dp[rows] + Ws[:, w][None, :]).max(axis=1)
                tgt = rows | (1 << w)
                dp[tgt, w] = np.maximum(dp[tgt, w], val)
        closing = dp + back[None, :]
        closing[pop < 2] = NEG
        cand = int(closing.max()) + 0 if closing.size else int(NEG)
        if cand > best:
            best = cand
    return int(best)


def brute_force_labeled_longest_cycle(m: LabeledMultigraph) -> int:
    from .oracles.paths import longest_cycle_or_path

    return longest_cycle_or_path(m.expansion(), "cycle")


# --- long cycle -------------------------------------------------------------


def _branch_count(g: Graph | LabeledMultigraph) -> int:
    base = g.base if isinstance(g, LabeledMultigraph) else g
    return sum(1 for v in range(base.n) if base.degree(v) >= 3)


def _expanded_order(g: Graph | LabeledMultigraph) -> int:
    return g.expanded_order() if isinstance(g, LabeledMultigraph) else g.n


def _promise_ell(inst: Instance) -> int:
    require_witness(inst, "max-leaf-bound")
    return inst.witness.ell


def solve_long_cycle_maxleaf(inst: Instance) -> Status:
    if inst.problem != "long-cycle":
        raise KernelError("solve_long_cycle_maxleaf handles long-cycle only")
    ell = _promise_ell(inst)
    if _branch_count(inst.graph) > 4 * ell - 2:
        return Status.SOLVED_NO
    c = contract_paths(inst.graph, "longest-only")
    best = max([held_karp_longest_cycle(c.graph, c.two_cycle_best)] + c.cycles)
    return Status.SOLVED_YES if best >= max(inst.k, 1) and best > 0 else Status.SOLVED_NO


def kernelize_long_cycle_maxleaf(inst: Instance) -> KernelResult:
    if inst.problem != "long-cycle":
        raise KernelError("kernelize_long_cycle_maxleaf handles long-cycle only")
    ell = _promise_ell(inst)
    trace: list[dict] = []
    size = _expanded_order(inst.graph)
    if inst.k > size:
        return solved(inst, False, trace, "target exceeds vertex count")
    branch = _branch_count(inst.graph)
    if branch > 4 * ell - 2:
        return solved(inst, False, trace, f"{branch} branch vertices exceed 4*ell-2")
    if size > solver_threshold(ell):
        st = solve_long_cycle_maxleaf(inst)
        return solved(inst, st is Status.SOLVED_YES, trace, "large instance solved directly")
    c = contract_paths(inst.graph, "up-to-ell", ell)
    trace.append({"rule": "contract-threads", "kept": c.vertices, "folded_cycles": c.cycles})
    if c.violated:
        out = inst.replace(graph=c.graph)
        trace.append({"rule": "promise-check", "max_parallel": c.max_parallel})
        return KernelResult(Status.PROMISE_VIOLATED, out, trace, size_stats(inst), size_stats(out))
    if c.cycles and max(c.cycles) >= inst.k:
        return solved(inst, True, trace, "a folded cycle is long enough")
    out = inst.replace(graph=c.graph)
    if c.graph.n == 0 or inst.k > c.graph.expanded_order():
        return solved(inst, False, trace, "nothing long enough survives contraction")
    g = c.graph
    assert g.n <= 4 * ell
    assert c.max_parallel <= ell
    assert all(lab.bit_length() <= max(1, size.bit_length()) for lab in g.labels)
    return reduced(inst, out, trace)


# --- thread squeezing for Hamiltonian path and disjoint cycles ---------------


def _runs(adj: list[set[int]], anchors: set[int], alive: set[int]):
    """Maximal threads of non-anchor degree-2 vertices.

    Yields (a, internal, b); anchor-free cycles are yielded as (None, cycle, None).
    """
    seen: set[int] = set()
    for a in sorted(anchors & alive):
        for w in sorted(adj[a]):
            if w in anchors or w in seen:
                continue
            prev, cur, internal = a, w, []
            while cur not in anchors:
                internal.append(cur)
                seen.add(cur)
                nxt = [x for x in adj[cur] if x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            yield a, internal, cur
    for v in sorted(alive):
        if v in anchors or v in seen:
            continue
        cyc, prev, cur = [v], None, v
        seen.add(v)
        while True:
            nxt = sorted(x for x in adj[cur] if x != prev)
            nxt = nxt[0]
            if nxt == v:
                break
            cyc.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        yield None, cyc, None


def reduce_degree2_single_internal(inst: Instance) -> KernelResult:
    p = inst.problem
    if p not in ("hamiltonian-path", "disjoint-cycles"):
        raise KernelError(f"thread squeezing does not handle {p}")
    ell = _promise_ell(inst)
    g = inst.graph
    if isinstance(g, LabeledMultigraph) or g.directed:
        raise KernelError("thread squeezing expects a simple undirected graph")
    trace: list[dict] = []
    if p == "disjoint-cycles" and inst.k <= 0:
        return solved(inst, True, trace, "no cycles requested")
    branch = _branch_count(g)
    if branch > 4 * ell - 2:
        return solved(inst, False, trace, f"{branch} branch vertices exceed 4*ell-2")
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    alive = set(range(g.n))
    if p == "disjoint-cycles":
        stack = [v for v in range(g.n) if len(adj[v]) <= 1]
        pruned = []
        while stack:
            v = stack.pop()
            if v not in alive:
                continue
            alive.discard(v)
            pruned.append(v)
            for w in adj[v]:
                adj[w].discard(v)
                if len(adj[w]) <= 1:
                    stack.append(w)
            adj[v] = set()
        if pruned:
            trace.append({"rule": "drop-low-degree", "removed": sorted(pruned)})
    anchors = {v for v in alive if len(adj[v]) != 2}
    if p == "hamiltonian-path" and inst.s is not None:
        anchors |= {inst.s, inst.t}
    drop: list[int] = []
    new_edges: list[tuple[int, int]] = []
    for a, internal, b in _runs(adj, anchors, alive):
        if a is None:
            limit = 3
        elif a == b:
            limit = 2
        else:
            limit = 1
        if len(internal) > limit:
            drop.extend(internal[limit:])
            keep_in = internal[:limit]
            if a is None:
                extra = [(keep_in[-1], keep_in[0])]
            else:
                extra = [(keep_in[-1], b)]
            trace.append({"rule": "squeeze-thread", "ends": [a, b], "removed": internal[limit:],
                          "new_edges": [list(e) for e in extra]})
            new_edges.extend(extra)
    keep = sorted(alive - set(drop))
    out, old = restrict(inst, keep, extra_edges=new_edges)
    return reduced(inst, out, trace)



# --- disjoint paths -----------------------------------------------------------


def _solve_thread_component(order: list[int], closed: bool, reqs: list[tuple[int, int]]) -> bool:
    """Disjoint paths inside a single path (or cycle) given in traversal order."""
    pos = {v: i for i, v in enumerate(order)}
    L = len(order)
    spans = [(min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in reqs]
    if not closed:
        spans.sort()
        return all(spans[i][1] < spans[i + 1][0] for i in range(len(spans) - 1))
    # on a cycle each request takes one of its two arcs
    arcs = []
    for lo, hi in spans:
        inner = frozenset(range(lo, hi + 1))
        outer = frozenset(list(range(hi, L)) + list(range(0, lo + 1)))
        arcs.append((inner, outer))

    def rec(i: int, used: frozenset) -> bool:
        if i == len(arcs):
            return True
        return any(not (a & used) and rec(i + 1, used | a) for a in arcs[i])

    return rec(0, frozenset())


def kernelize_disjoint_paths_maxleaf(inst: Instance) -> KernelResult:
    """Shrink degree-2 threads: crowded terminal runs and plain subdivisions."""
    if inst.problem != "disjoint-paths":
        raise KernelError("kernelize_disjoint_paths_maxleaf handles disjoint-paths only")
    ell = _promise_ell(inst)
    g = inst.graph
    if isinstance(g, LabeledMultigraph) or g.directed:
        raise KernelError("expects a simple undirected graph")
    trace: list[dict] = []
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    branch = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(leaves) > ell:
        return solved(inst, False, trace, f"{len(leaves)} leaves exceed ell")
    if len(branch) > 4 * ell:
        return solved(inst, False, trace, f"{len(branch)} branch vertices exceed 4*ell")
    if any(g.degree(v) > ell for v in branch):
        return solved(inst, False, trace, "a branch vertex has degree above ell")

    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in range(g.n)}
    pairs: dict[int, tuple[int, int]] = dict(enumerate(inst.pairs))
    owner: dict[int, int] = {v: i for i, p in pairs.items() for v in p}
    fresh = g.n

    def delete(v: int) -> None:
        for w in adj.pop(v):
            adj[w].discard(v)

    def components() -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in sorted(adj):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def thread_order(comp: list[int]) -> tuple[list[int], bool]:
        ends = [v for v in comp if len(adj[v]) <= 1]
        start = ends[0] if ends else comp[0]
        order, prev, cur = [start], None, start
        while True:
            nxt = sorted(w for w in adj[cur] if w != prev)
            if not nxt or nxt[0] == start:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        return order, not ends

    def settle_components() -> bool | None:
        """Solve or drop components without branch vertices.  None means NO."""
        changed = False
        for comp in components():
            cset = set(comp)
            reqs = [i for i in pairs if pairs[i][0] in cset or pairs[i][1] in cset]
            for i in reqs:
                a, b = pairs[i]
                if (a in cset) != (b in cset):
                    return None
            if reqs and any(len(adj[v]) >= 3 for v in comp):
                continue
            if reqs:
                order, closed = thread_order(comp)
                if not _solve_thread_component(order, closed, [pairs[i] for i in reqs]):
                    return None
            for i in reqs:
                for v in pairs.pop(i):
                    owner.pop(v)
            for v in comp:
                delete(v)
            trace.append({"rule": "settle-component", "removed": comp, "requests": reqs})
            changed = True
        return changed

    def crowded_runs() -> bool | None:
        nonlocal fresh
        anchors = {v for v in adj if len(adj[v]) != 2}
        seen: set[int] = set()
        for a in sorted(anchors):
            for w in sorted(adj[a]):
                if w in anchors or w in seen:
                    continue
                prev, cur, internal = a, w, []
                while cur not in anchors:
                    internal.append(cur)
                    seen.add(cur)
                    prev, cur = cur, next(x for x in adj[cur] if x != prev)
                terms = [v for v in internal if v in owner]
                if len(terms) < 5:
                    continue
                for i in range(1, len(terms) - 1):
                    mate = pairs[owner[terms[i]]]
                    other = mate[1] if mate[0] == terms[i] else mate[0]
                    if other not in (terms[i - 1], terms[i + 1]):
                        trace.append({"rule": "crowded-run", "infeasible_terminal": terms[i]})
                        return None
                def paired(x: int, y: int) -> bool:
                    return owner[x] == owner[y]

                lo = 0 if paired(terms[0], terms[1]) else 1
                hi = len(terms) if paired(terms[-1], terms[-2]) else len(terms) - 1
                block = terms[lo:hi]
                first, last = internal.index(block[0]), internal.index(block[-1])
                before = internal[:first]
                after = internal[last + 1:]
                left = before[-1] if before else a
                right = after[0] if after else cur
                s2, t2 = fresh, fresh + 1
                fresh += 2
                gone = internal[first:last + 1]
                for v in gone:
                    delete(v)
                for v in {owner[x] for x in block}:
                    for x in pairs.pop(v):
                        owner.pop(x)
                adj[s2], adj[t2] = {t2}, {s2}
                for x, y in ((left, s2), (t2, right)):
                    adj[x].add(y)
                    adj[y].add(x)
                new_id = max(pairs, default=-1) + 1
                pairs[new_id] = (s2, t2)
                owner[s2] = owner[t2] = new_id
                trace.append({"rule": "crowded-run", "removed": gone, "fresh_pair": [s2, t2]})
                return True
        return False

    def smooth() -> bool:
        changed = False
        for v in sorted(adj):
            if v not in adj or v in owner:
                continue
            nb = adj[v]
            if len(nb) <= 1:
                delete(v)
                trace.append({"rule": "drop-dead-end", "removed": [v]})
                changed = True
            elif len(nb) == 2:
                x, y = sorted(nb)
                delete(v)
                if y not in adj[x]:
                    adj[x].add(y)
                    adj[y].add(x)
                    trace.append({"rule": "smooth", "removed": [v], "joined": [x, y]})
                else:
                    trace.append({"rule": "drop-redundant", "removed": [v]})
                changed = True
        return changed

    while True:
        r = settle_components()
        if r is None:
            return solved(inst, False, trace, "a thread component cannot route its requests")
        r2 = crowded_runs()
        if r2 is None:
            return solved(inst, False, trace, "a crowded run forces an impossible pairing")
        r3 = smooth()
        if not (r or r2 or r3):
            break
    if not pairs:
        return solved(inst, True, trace, "every request was routed")
    keep = sorted(adj)
    nid = {v: i for i, v in enumerate(keep)}
    edges = sorted({(min(nid[u], nid[v]), max(nid[u], nid[v])) for u in adj for v in adj[u]})
    new_pairs = tuple((nid[a], nid[b]) for _, (a, b) in sorted(pairs.items()))
    out = Instance("disjoint-paths", Graph(len(keep), tuple(edges)), k=len(new_pairs),
                   pairs=new_pairs, witness=inst.witness)
    trace.append({"rule": "relabel", "kept": keep})
    assert out.graph.n <= len(leaves) + len(branch) + 4 * ell * len(branch), out.graph.n
    return reduced(inst, out, trace)
