"""Exact longest cycle / longest path.

Small graphs go through a layered bitmask reachability DP (vectorised with
numpy); moderately larger ones fall back to a pruned DFS guarded by a
deadline.  Lengths are counted in vertices, optionally weighted.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..config import Deadline, ResourceLimitExceeded, oracle_cap
from ..graph import Graph, LabeledMultigraph

DFS_CAP = 30


def _as_simple(g: Graph | LabeledMultigraph) -> Graph:
    if isinstance(g, LabeledMultigraph):
        return g.expansion()
    if g.multigraph:
        return Graph(g.n, tuple(sorted(set(g.edges if g.directed else
                                             ((min(e), max(e)) for e in g.edges)))), g.directed)
    return g


def _pred_masks(g: Graph) -> list[int]:
    pred = [0] * g.n
    for v in range(g.n):
        for u in g.in_neighbors(v):
            pred[v] |= 1 << u
    return pred


def _reach_table(g: Graph, mode: str, s: int | None) -> np.ndarray:
    """reach[mask] = bitset of end vertices of simple paths covering exactly ``mask``.

    In cycle mode every path starts at the lowest vertex of its mask.
    """
    n = g.n
    size = 1 << n
    reach = np.zeros(size, dtype=np.uint32 if n <= 32 else np.uint64)
    if mode == "cycle" or s is None:
        for v in range(n):
            reach[1 << v] = 1 << v
    else:
        reach[1 << s] = 1 << s
    pred = _pred_masks(g)
    masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int8)
    for v in range(n):
        pop += ((masks >> v) & 1).astype(np.int8)
    order = np.argsort(pop, kind="stable")
    bounds = np.searchsorted(pop[order], np.arange(n + 2))
    low = None
    if mode == "cycle":
        low_bits = masks & -masks
        low = np.zeros(size, dtype=np.int8)
        for v in range(n):
            low[low_bits == (1 << v)] = v
    for c in range(1, n):
        layer = order[bounds[c]:bounds[c + 1]]
        r = reach[layer]
        live = r != 0
        layer, r = layer[live], r[live]
        if layer.size == 0:
            continue
        for w in range(n):
            ok = ((layer >> w) & 1) == 0
            ok &= (r & np.asarray(pred[w], dtype=r.dtype)) != 0
            if mode == "cycle":
                ok &= low[layer] < w
            tgt = layer[ok] | (1 << w)
            reach[tgt] |= np.asarray(1 << w, dtype=reach.dtype)
    return reach


def _weights_of_masks(n: int, weights: Sequence[int] | None) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    total = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        total += ((masks >> v) & 1) * (1 if weights is None else int(weights[v]))
    return total


def _dp_best(g: Graph, mode: str, st, weights) -> tuple[int, list[int]]:
    n = g.n
    s, t = st if st else (None, None)
    reach = _reach_table(g, mode, s)
    wt = _weights_of_masks(n, weights)
    masks = np.arange(1 << n, dtype=np.int64)
    if mode == "cycle":
        pred = _pred_masks(g)
        low_bits = masks & -masks
        closing = np.zeros(1 << n, dtype=reach.dtype)
        for v in range(n):
            sel = low_bits == (1 << v)
            closing[sel] = pred[v]
        pop = np.zeros(1 << n, dtype=np.int8)
        for v in range(n):
            pop += ((masks >> v) & 1).astype(np.int8)
        min_len = 2 if g.directed else 3
        good = ((reach & closing) != 0) & (pop >= min_len)
    elif t is not None:
        good = (reach & np.asarray(1 << t, dtype=reach.dtype)) != 0
    else:
        good = reach != 0
    if not good.any():
        return 0, []
    cand = np.flatnonzero(good)
    best_mask = int(cand[np.argmax(wt[cand])])
    best = int(wt[best_mask])
    # walk back through the table to recover one optimal sequence
    out_pred = _pred_masks(g)
    if mode == "cycle":
        low_v = (best_mask & -best_mask).bit_length() - 1
        end_bits = int(reach[best_mask]) & out_pred[low_v]
    elif t is not None:
        end_bits = 1 << t
    else:
        end_bits = int(reach[best_mask])
    v = (end_bits & -end_bits).bit_length() - 1
    seq = [v]
    mask = best_mask
    while mask != (1 << v):
        prev_mask = mask ^ (1 << v)
        cands = int(reach[prev_mask]) & out_pred[v]
        v = (cands & -cands).bit_length() - 1
        seq.append(v)
        mask = prev_mask
    seq.reverse()
    return best, seq


def _dfs_best(g: Graph, mode: str, st, weights, deadline: Deadline) -> tuple[int, list[int]]:
    n = g.n
    wt = [1] * n if weights is None else list(weights)
    total = sum(wt)
    best = [0, []]
    out = [sorted(g.out_neighbors(v)) for v in range(n)]
    s, t = st if st else (None, None)

    def dfs(path: list[int], used: int, length: int, root: int) -> None:
        deadline.check()
        v = path[-1]
        if mode == "cycle":
            if len(path) >= (2 if g.directed else 3) and root in out[v] and length > best[0]:
                best[0], best[1] = length, list(path)
        elif t is None or v == t:
            if length > best[0]:
                best[0], best[1] = length, list(path)
        if mode == "path" and t is not None and v == t:
            return
        remaining = total - sum(wt[u] for u in range(n) if used >> u & 1)
        if length + remaining <= best[0]:
            return
        for w in out[v]:
            if used >> w & 1 or (mode == "cycle" and w < root):
                continue
            path.append(w)
            dfs(path, used | 1 << w, length + wt[w], root)
            path.pop()

    starts = [s] if (mode == "path" and s is not None) else range(n)
    for r in starts:
        dfs([r], 1 << r, wt[r], r)
    return best[0], best[1]


def longest_cycle_or_path(
    g: Graph | LabeledMultigraph,
    mode: str = "cycle",
    st: tuple[int, int] | None = None,
    weights: Sequence[int] | None = None,
    deadline: Deadline | None = None,
    with_certificate: bool = False,
):
    """Maximum number of vertices on a simple cycle or path (0 if there is none).

    For labelled multigraphs the answer refers to the expansion and the
    certificate, if requested, is a vertex sequence of the expansion.
    ``weights`` assigns a vertex its contribution to the length.
    """
    if mode not in ("cycle", "path"):
        raise ValueError(f"unknown mode {mode!r}")
    if st is not None and mode != "path":
        raise ValueError("endpoints only make sense for paths")
    if isinstance(g, LabeledMultigraph) and weights is not None:
        raise ValueError("weights are not supported on labelled multigraphs")
    sg = _as_simple(g)
    if sg.n == 0:
        res = (0, [])
    elif sg.n <= min(oracle_cap(), 24):
        res = _dp_best(sg, mode, st, weights)
    elif sg.n <= DFS_CAP:
        res = _dfs_best(sg, mode, st, weights, deadline or Deadline())
    else:
        raise ResourceLimitExceeded(f"{sg.n} vertices exceed the exact longest-path cap")
    return res if with_certificate else res[0]
